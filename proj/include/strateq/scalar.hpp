#pragma once

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace strateq {

// Arbitrary precision rationals. mpq_class keeps values canonical
// (denominator > 0, gcd 1) after every arithmetic operation.
using Integer = mpz_class;
using Rational = mpq_class;

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& x);

enum class Sign { negative = -1, zero = 0, positive = 1 };

inline Sign sign_of(const Rational& x) {
  int s = sgn(x);
  return s < 0 ? Sign::negative : (s > 0 ? Sign::positive : Sign::zero);
}

// Square-free part: returns (s, f) with n = s^2 * f and f square-free.
// Requires n > 0.
std::pair<Integer, Integer> split_square(const Integer& n);

/*
 * Element a + b*sqrt(d) of the real quadratic field Q(sqrt(d)).
 *
 * Canonical form:
 *   - d is square-free and d >= 2, or d == 0;
 *   - b == 0 if and only if d == 0 (a pure rational).
 *
 * Because d is square-free, sqrt(d) is irrational and two canonical values
 * are equal iff their (a, b, d) triples are equal.
 */
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(const Rational& a) : a_(a) {}  // NOLINT: implicit embedding of Q
  QuadExt(long a) : a_(a) {}             // NOLINT
  // Accepts any d >= 0 and canonicalises it (square factors move into b).
  QuadExt(const Rational& a, const Rational& b, const Integer& d);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Integer& d() const { return d_; }

  bool is_rational() const { return d_ == 0; }
  bool is_zero() const { return d_ == 0 && a_ == 0; }
  // Only valid when is_rational().
  const Rational& rational() const;

  Sign sign() const;

  QuadExt conjugate() const;
  // a^2 - b^2 d, the field norm down to Q.
  Rational norm() const;

  QuadExt operator-() const;
  QuadExt& operator+=(const QuadExt& y);
  QuadExt& operator-=(const QuadExt& y);
  QuadExt& operator*=(const QuadExt& y);
  QuadExt& operator/=(const QuadExt& y);

  friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
  friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
  friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
  friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }

  friend bool operator==(const QuadExt& x, const QuadExt& y) {
    return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
  }
  // Ordering on the real line. Throws IncompatibleFieldError across fields.
  friend std::strong_ordering operator<=>(const QuadExt& x, const QuadExt& y);

 private:
  void normalize();
  // Field shared by two operands; throws on mismatch.
  static Integer common_field(const QuadExt& x, const QuadExt& y);

  Rational a_{0};
  Rational b_{0};
  Integer d_{0};
};

enum class ArithOp { add, sub, mul, div };

QuadExt quadext_arith(const QuadExt& x, const QuadExt& y, ArithOp op);
inline Sign quadext_sign(const QuadExt& x) { return x.sign(); }

// "a" or "a + b*sqrt(d)".
std::string to_string(const QuadExt& x);
// Same value without spaces ("a+b*sqrt(d)"), used inside whitespace
// separated matrix rows.
std::string to_compact_string(const QuadExt& x);
// Accepts "a", "a + b*sqrt(d)", "a - b*sqrt(d)", "b*sqrt(d)", with or
// without blanks around the operator.
QuadExt parse_quadext(std::string_view text);

std::ostream& operator<<(std::ostream& os, const QuadExt& x);

// Real roots of c2*x^2 + c1*x + c0, ascending, without repetition.
// Throws InvalidArgument on the zero polynomial.
std::vector<QuadExt> solve_quadratic(const Rational& c2, const Rational& c1,
                                     const Rational& c0);

// Scalar traits shared by the matrix templates.
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero(const QuadExt& x) { return x.is_zero(); }
inline Sign sign_of(const QuadExt& x) { return x.sign(); }

}  // namespace strateq
