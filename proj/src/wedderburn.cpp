#include "strateq/wedderburn.hpp"

namespace strateq {

WedderburnResult wedderburn_step(const Matrix<Rational>& c, const Vector<Rational>& x,
                                 const Vector<Rational>& y) {
  Vector<Rational> cx = c * x;
  Vector<Rational> ytc = left_multiply(y, c);
  Rational w = dot(y, cx);
  if (w == 0) throw InvalidPivot("wedderburn_step: y^T C x is zero");
  Rational inv = 1 / w;
  for (auto& e : cx) e *= inv;
  Matrix<Rational> reduced = outer_add(c, cx, ytc, -1);
  return {std::move(reduced), WedderburnStep{x, y, std::move(w), {std::move(cx), std::move(ytc)}}};
}

std::vector<WedderburnStep> rank_reducing_decomposition(const Matrix<Rational>& c) {
  if (c.is_zero()) throw InvalidArgument("rank_reducing_decomposition: zero matrix");
  std::vector<WedderburnStep> steps;
  Matrix<Rational> residual = c;
  while (auto pivot = first_nonzero(residual)) {
    auto [i, j] = *pivot;
    auto result = wedderburn_step(residual, unit_vector<Rational>(c.cols(), j),
                                  unit_vector<Rational>(c.rows(), i));
    residual = std::move(result.reduced);
    steps.push_back(std::move(result.step));
  }
  return steps;
}

bool column_space_propagation_check(const Matrix<Rational>& c, const Vector<Rational>& x1,
                                    const Vector<Rational>& y1, const Vector<Rational>& z) {
  Matrix<Rational> c2 = wedderburn_step(c, x1, y1).reduced;
  bool lhs = in_column_span(c2.transpose(), z);
  bool rhs = in_column_span(c.transpose(), z) && dot(z, x1) == 0;
  return lhs == rhs;
}

}  // namespace strateq
