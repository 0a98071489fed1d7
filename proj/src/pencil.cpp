#include "strateq/pencil.hpp"

#include <algorithm>

namespace strateq {

bool LambdaSet::contains(const QuadExt& lambda) const {
  if (all_except) {
    if (!lambda.is_rational()) return true;
    return std::find(all_except->begin(), all_except->end(), lambda.rational()) == all_except->end();
  }
  return std::find(values.begin(), values.end(), lambda) != values.end();
}

std::pair<std::size_t, std::size_t> select_pivot(const Matrix<Rational>& a) {
  auto p = first_nonzero(a);
  if (!p) throw InvalidArgument("select_pivot: zero matrix has no pivot");
  return *p;
}

PencilQuadratic build_quadratic(const Matrix<Rational>& a, const Matrix<Rational>& b, std::size_t i,
                                std::size_t j, std::size_t s, std::size_t t) {
  if (s == i || t == j) throw InvalidArgument("build_quadratic: pivot row and column are identically zero");
  // (p0 + p1 l)(q0 + q1 l) - (r0 + r1 l)(s0 + s1 l)
  const Rational &p0 = a(s, t), &p1 = b(s, t);
  const Rational &q0 = a(i, j), &q1 = b(i, j);
  const Rational &r0 = a(s, j), &r1 = b(s, j);
  const Rational &w0 = a(i, t), &w1 = b(i, t);
  PencilQuadratic q{s, t, i, j, 0, 0, 0};
  q.c2 = p1 * q1 - r1 * w1;
  q.c1 = p0 * q1 + p1 * q0 - r0 * w1 - r1 * w0;
  q.c0 = p0 * q0 - r0 * w0;
  return q;
}

std::optional<PencilQuadratic> first_nonzero_quadratic(const Matrix<Rational>& a, const Matrix<Rational>& b,
                                                       std::size_t i, std::size_t j) {
  for (std::size_t s = 0; s < a.rows(); ++s) {
    if (s == i) continue;
    for (std::size_t t = 0; t < a.cols(); ++t) {
      if (t == j) continue;
      auto q = build_quadratic(a, b, i, j, s, t);
      if (!q.is_zero()) return q;
    }
  }
  return std::nullopt;
}

PencilQuadratic find_nonzero_quadratic(const Matrix<Rational>& a, const Matrix<Rational>& b, std::size_t i,
                                       std::size_t j) {
  auto q = first_nonzero_quadratic(a, b, i, j);
  if (!q) throw ContractViolation("every cell quadratic is identically zero; rank(A + B) > 1 was violated");
  return *q;
}

Matrix<QuadExt> evaluate_pencil(const Matrix<Rational>& a, const Matrix<Rational>& b, const QuadExt& lambda) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("pencil matrices differ in shape");
  Matrix<QuadExt> m(a.rows(), a.cols());
  for (std::size_t s = 0; s < a.rows(); ++s)
    for (std::size_t t = 0; t < a.cols(); ++t) m(s, t) = QuadExt(a(s, t)) + lambda * QuadExt(b(s, t));
  return m;
}

bool pencil_factors_at(const Matrix<Rational>& a, const Matrix<Rational>& b, std::size_t i, std::size_t j,
                       const QuadExt& lambda) {
  Matrix<QuadExt> m = evaluate_pencil(a, b, lambda);
  const QuadExt pivot = m(i, j);
  if (pivot.is_zero()) throw InvalidArgument("pencil_factors_at: lambda is the pole of c_i(lambda)");
  for (std::size_t s = 0; s < m.rows(); ++s)
    for (std::size_t t = 0; t < m.cols(); ++t)
      if (m(s, t) * pivot != m(s, j) * m(i, t)) return false;
  return true;
}

LambdaSet solve_rank1_pencil(const Matrix<Rational>& a, const Matrix<Rational>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("pencil matrices differ in shape");
  const bool a_zero = a.is_zero();
  if (a_zero && b.is_zero()) throw InvalidArgument("solve_rank1_pencil: both matrices are zero");

  LambdaSet out;
  out.trivial_one = is_rank_one(a + b).has_value();

  if (a_zero) {
    // lambda B: rank(B) for lambda != 0, the zero matrix at lambda == 0.
    if (out.trivial_one) out.all_except = std::vector<Rational>{0};
    return out;
  }

  auto [i, j] = select_pivot(a);
  std::optional<Rational> pole;
  if (b(i, j) != 0) {
    pole = Rational(-a(i, j) / b(i, j));
    if (is_rank_one(evaluate_pencil(a, b, QuadExt(*pole)))) {
      out.special_case = true;
      out.values.emplace_back(*pole);
    }
  }

  auto q = first_nonzero_quadratic(a, b, i, j);
  if (!q) {
    // Every cell already satisfies the factorisation identically, so the
    // pencil is rank 1 wherever the pivot entry is nonzero.
    out.all_except = std::vector<Rational>{};
    if (pole && !out.special_case) out.all_except->push_back(*pole);
    out.values.clear();
    return out;
  }

  out.solved = q;
  for (const auto& root : solve_quadratic(q->c2, q->c1, q->c0)) {
    if (pole && root == QuadExt(*pole)) continue;
    if (pencil_factors_at(a, b, i, j, root)) out.values.push_back(root);
  }
  std::sort(out.values.begin(), out.values.end());
  out.values.erase(std::unique(out.values.begin(), out.values.end()), out.values.end());
  return out;
}

}  // namespace strateq
