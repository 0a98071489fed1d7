#include <doctest.h>

#include <filesystem>

#include "oracles.hpp"
#include "strateq/io.hpp"

using namespace strateq;
using RMat = Matrix<Rational>;

TEST_CASE("game file format") {
  BimatrixGame g(RMat{{1, Rational(-1, 2)}, {0, 3}}, RMat{{2, 2}, {Rational(7, 3), -4}});
  const std::string text = "2 2\n1 -1/2\n0 3\n\n2 2\n7/3 -4\n";
  CHECK(emit_game(g) == text);
  CHECK(parse_game(text) == g);
  // Trailing newline optional, trailing blank lines and extra spacing tolerated.
  CHECK(parse_game("2 2\n1 -1/2\n0 3\n\n2 2\n7/3 -4") == g);
  CHECK(parse_game("2 2\n1   -2/4\n 0 3\n\n2 2\n7/3 -4\n\n") == g);
}

TEST_CASE("malformed game files") {
  CHECK_THROWS_AS(parse_game(""), ParseError);
  CHECK_THROWS_AS(parse_game("2\n"), ParseError);
  CHECK_THROWS_AS(parse_game("2 2\n1 2\n3\n\n1 2\n3 4\n"), ParseError);
  CHECK_THROWS_AS(parse_game("2 2\n1 2\n3 4\n1 2\n3 4\n"), ParseError);
  CHECK_THROWS_AS(parse_game("2 2\n1 2\n3 4\n\n1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_game("2 2\n1 2\n3 4\n\n1 2\n3 x\n"), ParseError);
  CHECK_THROWS_AS(parse_game("2 2\n1 2\n3 4\n\n1 2\n3 4\n5 6\n"), ParseError);
  CHECK_THROWS_AS(parse_game("0 2\n"), ParseError);
  CHECK_THROWS_AS(parse_game("2 2\n1/0 2\n3 4\n\n1 2\n3 4\n"), ParseError);
}

TEST_CASE("game round trip over generated fixtures") {
  oracle::Random rnd(103);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto d = generate_disguised_rank1(2 + seed % 5, 2 + seed % 7, seed, 9);
    CHECK(parse_game(emit_game(d.game)) == d.game);
    HiddenParams hp{d.base, d.pat};
    CHECK(parse_hidden(emit_hidden(hp)) == hp);
    std::size_t m = rnd.index(1, 4), n = rnd.index(1, 4);
    BimatrixGame g(rnd.low_rank(m, n, 2, 5), rnd.matrix(m, n, 5));
    g.A(0, 0) = rnd.rational(7);
    CHECK(parse_game(emit_game(g)) == g);
  }
}

TEST_CASE("certificate round trip") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    auto d = generate_disguised_rank1(2 + seed % 4, 2 + (seed / 4) % 4, seed, 6);
    auto doc = make_document(ser1_reduce(d.game));
    REQUIRE(doc.status == CertificateStatus::equivalent);
    REQUIRE(doc.certificate);
    auto text = emit_certificate(doc);
    CHECK(parse_certificate(text) == doc);
    CHECK(emit_certificate(parse_certificate(text)) == text);
  }

  // Irrational gamma.
  BimatrixGame g(RMat{{1, 0}, {0, 2}}, RMat{{0, 1}, {1, 0}});
  auto doc = make_document(ser1_reduce(g));
  REQUIRE(doc.gamma);
  CHECK(*doc.gamma == QuadExt(0, 1, 2));
  auto text = emit_certificate(doc);
  CHECK(text.find("gamma: 0 + 1*sqrt(2)") != std::string::npos);
  CHECK(parse_certificate(text) == doc);
}

TEST_CASE("non-equivalent documents") {
  BimatrixGame pennies(RMat{{1, -1}, {-1, 1}}, RMat{{-1, 1}, {1, -1}});
  auto doc = make_document(ser1_reduce(pennies));
  CHECK(doc.status == CertificateStatus::degenerate_zero_sum);
  CHECK(parse_certificate(emit_certificate(doc)) == doc);

  auto d = generate_disguised_rank1(4, 4, 3, 5);
  BimatrixGame g = d.game;
  g.A(1, 2) += 1;
  doc = make_document(ser1_reduce(g));
  CHECK(doc.status == CertificateStatus::not_equivalent);
  CHECK_FALSE(doc.reason.empty());
  CHECK(parse_certificate(emit_certificate(doc)) == doc);
  CHECK(emit_certificate(doc).rfind("status: not-equivalent\n", 0) == 0);

  doc = make_document(ser1_reduce(BimatrixGame(RMat{{1, 2}}, RMat{{2, 1}})));
  CHECK(doc.status == CertificateStatus::rejected);
  CHECK(parse_certificate(emit_certificate(doc)) == doc);
}

TEST_CASE("malformed certificates") {
  CHECK_THROWS_AS(parse_certificate(""), ParseError);
  CHECK_THROWS_AS(parse_certificate("status: maybe\n"), ParseError);
  CHECK_THROWS_AS(parse_certificate("status: equivalent\n"), ParseError);
  CHECK_THROWS_AS(parse_certificate("status: rejected\nwhat: ever\n"), ParseError);
  CHECK_THROWS_AS(parse_certificate("no colon here\n"), ParseError);
}

TEST_CASE("file helpers") {
  auto path = (std::filesystem::temp_directory_path() / "strateq_io_test.txt").string();
  write_file(path, "abc\n");
  CHECK(read_file(path) == "abc\n");
  std::filesystem::remove(path);
  CHECK_THROWS_AS(read_file(path), IoError);
  CHECK_THROWS_AS(write_file("/nonexistent-dir/x/y", "z"), IoError);
}
