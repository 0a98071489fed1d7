#pragma once

#include <vector>

#include "strateq/matrix.hpp"

namespace strateq {

// One application of C2 = C - w^{-1} C x y^T C with w = y^T C x.
struct WedderburnStep {
  Vector<Rational> x;  // length n
  Vector<Rational> y;  // length m
  Rational w;
  // left = w^{-1} C x, right = C^T y; left * right^T is the removed term.
  RankOneFactor<Rational> extracted;
};

struct WedderburnResult {
  Matrix<Rational> reduced;
  WedderburnStep step;
};

// Throws InvalidPivot when y^T C x == 0.
WedderburnResult wedderburn_step(const Matrix<Rational>& c, const Vector<Rational>& x,
                                 const Vector<Rational>& y);

// Repeats the step with unit pivots x = e_j, y = e_i at the first nonzero
// (i, j) of the residual until it vanishes. Returns rank(C) steps whose
// extracted terms sum to C. Throws InvalidArgument on the zero matrix.
std::vector<WedderburnStep> rank_reducing_decomposition(const Matrix<Rational>& c);

// Decides z in colspan(C2^T) and (z in colspan(C^T) and z . x1 == 0)
// independently and returns whether the two agree.
bool column_space_propagation_check(const Matrix<Rational>& c, const Vector<Rational>& x1,
                                    const Vector<Rational>& y1, const Vector<Rational>& z);

}  // namespace strateq
