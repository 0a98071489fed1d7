#include <doctest.h>

#include "oracles.hpp"
#include "strateq/errors.hpp"
#include "strateq/scalar.hpp"

using namespace strateq;

namespace {

QuadExt q(long a, long b, long d) { return QuadExt(Rational(a), Rational(b), Integer(d)); }

}  // namespace

TEST_CASE("rational parsing normalises") {
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(parse_rational("3/-4") == Rational(-3, 4));
  CHECK(parse_rational("+7") == 7);
  CHECK(to_string(parse_rational("10/5")) == "2");
  CHECK(to_string(parse_rational("-2/6")) == "-1/3");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK_THROWS_AS(parse_rational("--1"), ParseError);
}

TEST_CASE("quadext arithmetic examples") {
  CHECK(quadext_arith(q(1, 1, 2), q(1, -1, 2), ArithOp::mul) == QuadExt(-1));
  CHECK(quadext_arith(q(0, 1, 2), q(0, 1, 2), ArithOp::mul) == QuadExt(2));
  QuadExt half(Rational(1, 2), 0, 5), third(Rational(1, 3), 0, 5);
  CHECK(quadext_arith(half, third, ArithOp::add) == QuadExt(Rational(5, 6)));
  CHECK(quadext_arith(q(1, 1, 2), q(1, 1, 2), ArithOp::sub).is_zero());
}

TEST_CASE("quadext canonical form") {
  // sqrt(8) = 2 sqrt(2); sqrt(9) = 3 is rational.
  CHECK(q(0, 1, 8) == q(0, 2, 2));
  CHECK(q(1, 1, 9) == QuadExt(4));
  CHECK(q(5, 0, 7).is_rational());
  CHECK(q(5, 0, 7).d() == 0);
  CHECK(q(1, 3, 12).d() == 3);
  CHECK_THROWS_AS(q(1, 1, -2), InvalidArgument);
}

TEST_CASE("quadext errors") {
  CHECK_THROWS_AS(q(1, 1, 2) + q(1, 1, 3), IncompatibleFieldError);
  CHECK_THROWS_AS(q(1, 1, 2) / QuadExt(0), ArithmeticError);
  // A rational operand adopts the other field.
  CHECK_NOTHROW(q(1, 1, 2) + QuadExt(3));
  CHECK(q(1, 1, 2) + QuadExt(3) == q(4, 1, 2));
}

TEST_CASE("quadext sign examples") {
  CHECK(quadext_sign(q(1, 1, 2)) == Sign::positive);
  CHECK(quadext_sign(q(3, -2, 2)) == Sign::positive);  // 9 > 8
  CHECK(quadext_sign(q(2, -3, 2)) == Sign::negative);  // 4 < 18
  CHECK(quadext_sign(q(-3, 2, 2)) == Sign::negative);
  CHECK(quadext_sign(QuadExt(0)) == Sign::zero);
  CHECK(quadext_sign(q(0, -1, 5)) == Sign::negative);
}

TEST_CASE("quadext sign agrees with high-precision evaluation") {
  oracle::Random rnd(11);
  mpf_set_default_prec(512);
  for (int trial = 0; trial < 1000; ++trial) {
    Rational a(rnd.integer(-2000, 2000), rnd.integer(1, 50));
    Rational b(rnd.integer(-2000, 2000), rnd.integer(1, 50));
    a.canonicalize();
    b.canonicalize();
    long d = rnd.integer(2, 500);
    QuadExt x(a, b, d);
    mpf_class value = mpf_class(x.a()) + mpf_class(x.b()) * sqrt(mpf_class(x.d()));
    int expected = sgn(value);
    CHECK(static_cast<int>(x.sign()) == expected);
    // Squaring keeps the sign positive for nonzero values.
    if (!x.is_zero()) {
      auto sq = x * x;
      if (sq.is_rational()) CHECK(sq.rational() > 0);
    }
  }
}

TEST_CASE("field axioms on random instances") {
  oracle::Random rnd(7);
  for (int trial = 0; trial < 300; ++trial) {
    long d = rnd.integer(2, 30);
    auto draw = [&] { return QuadExt(rnd.rational(9), rnd.rational(9), Integer(d)); };
    QuadExt x = draw(), y = draw(), z = draw();
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x + y == y + x);
    CHECK(x * y == y * x);
    if (!x.is_zero()) CHECK(x * (QuadExt(1) / x) == QuadExt(1));
    CHECK(x - x == QuadExt(0));
  }
}

TEST_CASE("solve_quadratic examples") {
  auto r = solve_quadratic(1, 2, 0);
  REQUIRE(r.size() == 2);
  CHECK(r[0] == QuadExt(-2));
  CHECK(r[1] == QuadExt(0));

  r = solve_quadratic(1, 0, -2);
  REQUIRE(r.size() == 2);
  CHECK(r[0] == q(0, -1, 2));
  CHECK(r[1] == q(0, 1, 2));

  r = solve_quadratic(0, 3, -1);
  REQUIRE(r.size() == 1);
  CHECK(r[0] == QuadExt(Rational(1, 3)));

  CHECK(solve_quadratic(1, 0, 1).empty());
  CHECK(solve_quadratic(0, 0, 5).empty());
  CHECK(solve_quadratic(1, -2, 1).size() == 1);
  CHECK_THROWS_AS(solve_quadratic(0, 0, 0), InvalidArgument);
}

TEST_CASE("solve_quadratic roots substitute to zero") {
  oracle::Random rnd(3);
  for (int trial = 0; trial < 500; ++trial) {
    Rational c2 = rnd.rational(20), c1 = rnd.rational(20), c0 = rnd.rational(20);
    if (c2 == 0 && c1 == 0 && c0 == 0) continue;
    auto roots = solve_quadratic(c2, c1, c0);
    CHECK(roots.size() <= 2);
    for (const auto& x : roots) {
      CHECK((QuadExt(c2) * x * x + QuadExt(c1) * x + QuadExt(c0)).is_zero());
    }
    for (std::size_t k = 1; k < roots.size(); ++k) CHECK(roots[k - 1] < roots[k]);
    // Real roots exist iff the discriminant is nonnegative.
    if (c2 != 0) CHECK(roots.empty() == (c1 * c1 - 4 * c2 * c0 < 0));
  }
}

TEST_CASE("square-free split") {
  auto [s, f] = split_square(Integer(72));  // 36 * 2
  CHECK(s == 6);
  CHECK(f == 2);
  auto [s2, f2] = split_square(Integer("1000000016000000063"));  // 1000000007 * 1000000009
  CHECK(s2 == 1);
  CHECK(f2 == Integer("1000000016000000063"));
  auto [s3, f3] = split_square(Integer("2000000028000000098"));  // 2 * 1000000007^2
  CHECK(s3 == Integer("1000000007"));
  CHECK(f3 == 2);
}

TEST_CASE("quadext text round trip") {
  oracle::Random rnd(5);
  for (int trial = 0; trial < 200; ++trial) {
    QuadExt x(rnd.rational(50), rnd.rational(50), Integer(rnd.integer(0, 40)));
    CHECK(parse_quadext(to_string(x)) == x);
    CHECK(parse_quadext(to_compact_string(x)) == x);
  }
  CHECK(parse_quadext("1/2 - 3*sqrt(5)") == QuadExt(Rational(1, 2), -3, 5));
  CHECK(parse_quadext("-1/2+-3*sqrt(5)") == QuadExt(Rational(-1, 2), -3, 5));
  CHECK(parse_quadext("2*sqrt(3)") == QuadExt(0, 2, 3));
  CHECK(to_string(QuadExt(1, -2, 2)) == "1 + -2*sqrt(2)");
  CHECK_THROWS_AS(parse_quadext("1 + sqrt(2)"), ParseError);
  CHECK_THROWS_AS(parse_quadext("1 + 2*sqrt(x)"), ParseError);
}
