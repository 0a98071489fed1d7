#include <iostream>

#include "strateq/cli.hpp"

int main(int argc, char** argv) { return strateq::cli::run(argc, argv, std::cout, std::cerr); }
