#include "strateq/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "strateq/errors.hpp"

namespace strateq {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool parse_integer(std::string_view s, Integer& out) {
  if (s.empty()) return false;
  std::size_t start = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  std::string digits(s[0] == '+' ? s.substr(1) : s);
  return out.set_str(digits, 10) == 0;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto s = trim(text);
  auto slash = s.find('/');
  Integer num, den{1};
  if (slash == std::string_view::npos) {
    if (!parse_integer(s, num)) throw ParseError("bad rational: '" + std::string(text) + "'");
  } else {
    if (!parse_integer(s.substr(0, slash), num) || !parse_integer(s.substr(slash + 1), den)) {
      throw ParseError("bad rational: '" + std::string(text) + "'");
    }
    if (den == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& x) { return x.get_str(10); }

std::pair<Integer, Integer> split_square(const Integer& n) {
  if (n <= 0) throw InvalidArgument("split_square needs a positive integer");
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    Integer s;
    mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
    return {s, 1};
  }
  Integer rest = n;
  Integer root = 1;
  Integer free = 1;
  // After removing every prime p with p^3 <= rest, what remains has at most
  // two prime factors, so it is square-free unless it is a perfect square.
  for (Integer p = 2; p * p * p <= rest; p += (p == 2 ? 1 : 2)) {
    unsigned long e = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
      rest /= p;
      ++e;
    }
    for (unsigned long k = 0; k < e / 2; ++k) root *= p;
    if (e % 2 == 1) free *= p;
  }
  if (rest > 1) {
    if (mpz_perfect_square_p(rest.get_mpz_t())) {
      Integer s;
      mpz_sqrt(s.get_mpz_t(), rest.get_mpz_t());
      root *= s;
    } else {
      free *= rest;
    }
  }
  return {root, free};
}

QuadExt::QuadExt(const Rational& a, const Rational& b, const Integer& d) : a_(a), b_(b), d_(d) {
  if (d < 0) throw InvalidArgument("QuadExt requires d >= 0");
  a_.canonicalize();
  b_.canonicalize();
  normalize();
}

void QuadExt::normalize() {
  if (d_ == 0 || b_ == 0) {
    b_ = 0;
    d_ = 0;
    return;
  }
  auto [root, free] = split_square(d_);
  b_ *= root;
  if (free == 1) {
    a_ += b_;
    b_ = 0;
    d_ = 0;
  } else {
    d_ = free;
  }
}

const Rational& QuadExt::rational() const {
  if (!is_rational()) throw ArithmeticError("value " + to_string(*this) + " is irrational");
  return a_;
}

Integer QuadExt::common_field(const QuadExt& x, const QuadExt& y) {
  if (x.d_ == 0) return y.d_;
  if (y.d_ == 0 || x.d_ == y.d_) return x.d_;
  throw IncompatibleFieldError("operands in Q(sqrt(" + x.d_.get_str() + ")) and Q(sqrt(" +
                               y.d_.get_str() + "))");
}

Sign QuadExt::sign() const {
  Sign sa = sign_of(a_);
  Sign sb = sign_of(b_);
  if (sb == Sign::zero) return sa;
  if (sa == Sign::zero || sa == sb) return sb;
  // Opposite signs: the term with the larger square wins. Equality is
  // impossible because sqrt(d) is irrational.
  Rational lhs = a_ * a_;
  Rational rhs = b_ * b_ * Rational(d_);
  return lhs > rhs ? sa : sb;
}

QuadExt QuadExt::conjugate() const {
  QuadExt r = *this;
  r.b_ = -r.b_;
  return r;
}

Rational QuadExt::norm() const { return a_ * a_ - b_ * b_ * Rational(d_); }

QuadExt QuadExt::operator-() const {
  QuadExt r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

QuadExt& QuadExt::operator+=(const QuadExt& y) {
  d_ = common_field(*this, y);
  a_ += y.a_;
  b_ += y.b_;
  if (b_ == 0) d_ = 0;
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& y) {
  d_ = common_field(*this, y);
  a_ -= y.a_;
  b_ -= y.b_;
  if (b_ == 0) d_ = 0;
  return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& y) {
  Integer d = common_field(*this, y);
  Rational a = a_ * y.a_ + b_ * y.b_ * Rational(d);
  Rational b = a_ * y.b_ + b_ * y.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  d_ = (b_ == 0) ? Integer(0) : d;
  return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& y) {
  if (y.is_zero()) throw ArithmeticError("division by zero");
  Integer d = common_field(*this, y);
  if (y.is_rational()) {
    a_ /= y.a_;
    b_ /= y.a_;
    return *this;
  }
  // x / y = x * conj(y) / norm(y); norm(y) != 0 for y != 0.
  Rational n = y.norm();
  *this *= y.conjugate();
  a_ /= n;
  b_ /= n;
  (void)d;
  return *this;
}

std::strong_ordering operator<=>(const QuadExt& x, const QuadExt& y) {
  switch ((x - y).sign()) {
    case Sign::negative:
      return std::strong_ordering::less;
    case Sign::positive:
      return std::strong_ordering::greater;
    default:
      return std::strong_ordering::equal;
  }
}

QuadExt quadext_arith(const QuadExt& x, const QuadExt& y, ArithOp op) {
  switch (op) {
    case ArithOp::add:
      return x + y;
    case ArithOp::sub:
      return x - y;
    case ArithOp::mul:
      return x * y;
    case ArithOp::div:
      return x / y;
  }
  throw InvalidArgument("unknown arithmetic op");
}

std::string to_string(const QuadExt& x) {
  if (x.is_rational()) return to_string(x.a());
  return to_string(x.a()) + " + " + to_string(x.b()) + "*sqrt(" + x.d().get_str() + ")";
}

std::string to_compact_string(const QuadExt& x) {
  if (x.is_rational()) return to_string(x.a());
  return to_string(x.a()) + "+" + to_string(x.b()) + "*sqrt(" + x.d().get_str() + ")";
}

std::ostream& operator<<(std::ostream& os, const QuadExt& x) { return os << to_string(x); }

QuadExt parse_quadext(std::string_view text) {
  auto s = trim(text);
  auto fail = [&]() -> ParseError {
    return ParseError("bad quadratic-extension value: '" + std::string(text) + "'");
  };
  auto sq = s.find("sqrt(");
  if (sq == std::string_view::npos) return QuadExt(parse_rational(s));

  auto close = s.find(')', sq);
  if (close == std::string_view::npos || !trim(s.substr(close + 1)).empty()) throw fail();
  Integer d;
  if (!parse_integer(trim(s.substr(sq + 5, close - sq - 5)), d) || d < 0) throw fail();

  auto head = trim(s.substr(0, sq));
  if (head.empty() || head.back() != '*') throw fail();
  head = trim(head.substr(0, head.size() - 1));

  // head is "[a] (+|-) b" or just "b". The separating operator is the last
  // '+' or '-' that is not a sign directly following another operator.
  std::size_t op = std::string_view::npos;
  for (std::size_t i = head.size(); i-- > 1;) {
    if (head[i] != '+' && head[i] != '-') continue;
    std::size_t k = i;
    while (k > 0 && std::isspace(static_cast<unsigned char>(head[k - 1]))) --k;
    if (k > 0 && head[k - 1] != '+' && head[k - 1] != '-' && head[k - 1] != '/') {
      op = i;
      break;
    }
  }
  Rational a{0}, b;
  if (op == std::string_view::npos) {
    b = parse_rational(head);
  } else {
    a = parse_rational(head.substr(0, op));
    b = parse_rational(head.substr(op + 1));
    if (head[op] == '-') b = -b;
  }
  return QuadExt(a, b, d);
}

std::vector<QuadExt> solve_quadratic(const Rational& c2, const Rational& c1, const Rational& c0) {
  if (c2 == 0) {
    if (c1 == 0) {
      if (c0 == 0) throw InvalidArgument("solve_quadratic: zero polynomial");
      return {};
    }
    return {QuadExt(Rational(-c0 / c1))};
  }
  Rational disc = c1 * c1 - 4 * c2 * c0;
  int s = sgn(disc);
  if (s < 0) return {};
  Rational centre = -c1 / (2 * c2);
  if (s == 0) return {QuadExt(centre)};
  // sqrt(p/q) = sqrt(p*q)/q with p*q = root^2 * free.
  Integer pq = disc.get_num() * disc.get_den();
  auto [root, free] = split_square(pq);
  Rational half_width = Rational(root, disc.get_den()) / (2 * c2);
  half_width.canonicalize();
  if (half_width < 0) half_width = -half_width;
  std::vector<QuadExt> roots;
  if (free == 1) {
    roots = {QuadExt(Rational(centre - half_width)), QuadExt(Rational(centre + half_width))};
  } else {
    roots = {QuadExt(centre, -half_width, free), QuadExt(centre, half_width, free)};
  }
  return roots;
}

}  // namespace strateq
