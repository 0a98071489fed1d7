#pragma once

// Brute-force references used only by the tests. Nothing here goes through
// Bareiss elimination, pivoted cell quadratics, or pivot-based factoring.

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

#include "strateq/game.hpp"
#include "strateq/matrix.hpp"
#include "strateq/scalar.hpp"

namespace oracle {

using strateq::Matrix;
using strateq::QuadExt;
using strateq::Rational;
using strateq::Vector;

// Determinant by permutation expansion.
template <class T>
T leibniz_det(const Matrix<T>& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  for (std::size_t k = 0; k < n; ++k) perm[k] = k;
  T total(0);
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (perm[a] > perm[b]) ++inversions;
    T term(1);
    for (std::size_t r = 0; r < n; ++r) term *= m(r, perm[r]);
    if (inversions % 2) total -= term;
    else total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != k) continue;
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) s.push_back(i);
    out.push_back(s);
  }
  return out;
}

// Size of the largest nonvanishing minor.
template <class T>
std::size_t minor_rank(const Matrix<T>& m) {
  for (std::size_t k = std::min(m.rows(), m.cols()); k > 0; --k) {
    for (const auto& rows : subsets(m.rows(), k))
      for (const auto& cols : subsets(m.cols(), k)) {
        Matrix<T> sub(k, k);
        for (std::size_t a = 0; a < k; ++a)
          for (std::size_t b = 0; b < k; ++b) sub(a, b) = m(rows[a], cols[b]);
        if (!strateq::is_zero(leibniz_det(sub))) return k;
      }
  }
  return 0;
}

struct Poly2 {
  Rational c2, c1, c0;
  bool zero() const { return c2 == 0 && c1 == 0 && c0 == 0; }
  QuadExt at(const QuadExt& x) const { return QuadExt(c2) * x * x + QuadExt(c1) * x + QuadExt(c0); }
};

// Every 2x2 minor of A + lambda B as a polynomial in lambda.
inline std::vector<Poly2> pencil_minors(const Matrix<Rational>& a, const Matrix<Rational>& b) {
  std::vector<Poly2> out;
  for (std::size_t p = 0; p < a.rows(); ++p)
    for (std::size_t q = p + 1; q < a.rows(); ++q)
      for (std::size_t s = 0; s < a.cols(); ++s)
        for (std::size_t t = s + 1; t < a.cols(); ++t) {
          // (x0 + l x1)(y0 + l y1) - (z0 + l z1)(w0 + l w1)
          const Rational &x0 = a(p, s), &x1 = b(p, s), &y0 = a(q, t), &y1 = b(q, t);
          const Rational &z0 = a(p, t), &z1 = b(p, t), &w0 = a(q, s), &w1 = b(q, s);
          out.push_back({x1 * y1 - z1 * w1, x0 * y1 + x1 * y0 - z0 * w1 - z1 * w0, x0 * y0 - z0 * w0});
        }
  return out;
}

// lambda with A + lambda B == 0, if any.
inline std::vector<Rational> zero_pencil_values(const Matrix<Rational>& a, const Matrix<Rational>& b) {
  std::optional<Rational> lam;
  for (std::size_t s = 0; s < a.rows(); ++s)
    for (std::size_t t = 0; t < a.cols(); ++t)
      if (b(s, t) != 0) {
        lam = Rational(-a(s, t) / b(s, t));
        goto found;
      }
found:
  if (!lam) return {};
  for (std::size_t s = 0; s < a.rows(); ++s)
    for (std::size_t t = 0; t < a.cols(); ++t)
      if (a(s, t) + *lam * b(s, t) != 0) return {};
  return {*lam};
}

struct PencilAnswer {
  std::vector<QuadExt> values;                      // ascending
  std::optional<std::vector<Rational>> all_except;  // sorted
};

// All real lambda where every 2x2 minor of A + lambda B vanishes and the
// matrix is nonzero.
inline PencilAnswer rank1_pencil_by_minors(const Matrix<Rational>& a, const Matrix<Rational>& b) {
  auto minors = pencil_minors(a, b);
  PencilAnswer ans;
  bool all_zero = std::all_of(minors.begin(), minors.end(), [](const Poly2& p) { return p.zero(); });
  if (all_zero) {
    auto ex = zero_pencil_values(a, b);
    std::sort(ex.begin(), ex.end());
    ans.all_except = ex;
    return ans;
  }
  std::vector<QuadExt> candidates;
  for (const auto& p : minors) {
    if (p.zero()) continue;
    for (const auto& r : strateq::solve_quadratic(p.c2, p.c1, p.c0)) candidates.push_back(r);
  }
  for (const auto& lam : candidates) {
    bool ok = true;
    for (const auto& p : minors)
      if (!p.zero() && !p.at(lam).is_zero()) {
        ok = false;
        break;
      }
    if (!ok) continue;
    bool nonzero = false;
    for (std::size_t s = 0; s < a.rows() && !nonzero; ++s)
      for (std::size_t t = 0; t < a.cols() && !nonzero; ++t)
        nonzero = !(QuadExt(a(s, t)) + lam * QuadExt(b(s, t))).is_zero();
    if (nonzero && std::find(ans.values.begin(), ans.values.end(), lam) == ans.values.end())
      ans.values.push_back(lam);
  }
  std::sort(ans.values.begin(), ans.values.end());
  return ans;
}

// Deterministic random fixtures.
class Random {
 public:
  explicit Random(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  std::size_t index(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }
  Rational rational(int bound) {
    int den = integer(1, 3);
    Rational r(integer(-bound, bound), den);
    r.canonicalize();
    return r;
  }
  Vector<Rational> vector(std::size_t len, int bound) {
    Vector<Rational> v(len);
    for (auto& x : v) x = integer(-bound, bound);
    return v;
  }
  Matrix<Rational> matrix(std::size_t m, std::size_t n, int bound) {
    Matrix<Rational> a(m, n);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = integer(-bound, bound);
    return a;
  }
  // Sum of `r` random outer products.
  Matrix<Rational> low_rank(std::size_t m, std::size_t n, std::size_t r, int bound) {
    Matrix<Rational> a(m, n);
    for (std::size_t k = 0; k < r; ++k) a += strateq::outer(vector(m, bound), vector(n, bound));
    return a;
  }
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace oracle
