#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace strateq::cli {

// Process exit codes; a function of the reduction outcome only.
inline constexpr int kExitEquivalent = 0;
inline constexpr int kExitError = 1;  // I/O and parse errors
inline constexpr int kExitNotEquivalent = 2;
inline constexpr int kExitDegenerate = 3;
inline constexpr int kExitRejected = 4;

struct Pivot {
  std::size_t row = 0;  // 0-based
  std::size_t col = 0;
};

// "l,k" with 1-based indices.
Pivot parse_pivot(const std::string& text);

int cmd_reduce(const std::string& input, const std::optional<std::string>& output, const std::optional<Pivot>& pivot,
               std::ostream& out, std::ostream& err);
int cmd_check(const std::string& input, const std::optional<Pivot>& pivot, std::ostream& out, std::ostream& err);
// Writes the game to `output` and hidden parameters to `output + ".hidden"`.
int cmd_generate(std::size_t m, std::size_t n, std::uint64_t seed, int entry_bound, const std::string& output,
                 std::ostream& out, std::ostream& err);
int cmd_verify(const std::string& game_path, const std::string& certificate_path, bool nash, std::ostream& out,
               std::ostream& err);

// Full command line dispatch (argv[0] is the program name).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace strateq::cli
