#pragma once

#include <optional>
#include <vector>

#include "strateq/matrix.hpp"

namespace strateq {

/*
 * Rank-1 values of the pencil A + lambda B.
 *
 * With a pivot (i, j) such that a_ij != 0, the pencil is rank 1 at lambda
 * exactly when every cell (s, t) satisfies
 *
 *   g_st(lambda) = (a_st + l b_st)(a_ij + l b_ij) - (a_sj + l b_sj)(a_it + l b_it) = 0
 *
 * (the cleared form of "entry equals r_j(l) c_i(l)^T"), except at the pole
 * lambda0 = -a_ij / b_ij where the pivot entry vanishes and rank 1 is
 * checked directly. Row i and column j give identically zero g, so only the
 * (m-1)(n-1) remaining cells carry information, and any single nonzero one
 * bounds the candidates to its at most two roots.
 */
struct PencilQuadratic {
  std::size_t s = 0, t = 0;  // cell
  std::size_t i = 0, j = 0;  // pivot
  Rational c2, c1, c0;

  bool is_zero() const { return c2 == 0 && c1 == 0 && c0 == 0; }
};

struct LambdaSet {
  // Finite part, ascending. Every member makes the pencil exactly rank 1.
  std::vector<QuadExt> values;
  // When set, the pencil is rank 1 for every real lambda except the listed
  // values; `values` is then empty. Arises only when rank(A + B) <= 1 and
  // every cell quadratic vanishes identically.
  std::optional<std::vector<Rational>> all_except;
  // The pole lambda0 = -a_ij / b_ij was itself a rank-1 value.
  bool special_case = false;
  // rank(A + B) == 1, so lambda = 1 is a member without solving anything.
  bool trivial_one = false;
  // The quadratic whose roots were checked, if one was solved.
  std::optional<PencilQuadratic> solved;

  bool is_empty() const { return values.empty() && !all_except; }
  bool contains(const QuadExt& lambda) const;
};

// First (i, j) in row-major order with a nonzero entry. Throws
// InvalidArgument on the zero matrix.
std::pair<std::size_t, std::size_t> select_pivot(const Matrix<Rational>& a);

// Throws InvalidArgument when s == i or t == j.
PencilQuadratic build_quadratic(const Matrix<Rational>& a, const Matrix<Rational>& b, std::size_t i,
                                std::size_t j, std::size_t s, std::size_t t);

// First nonzero cell quadratic over s != i, t != j. Throws ContractViolation
// if there is none, which cannot happen when rank(A + B) > 1.
PencilQuadratic find_nonzero_quadratic(const Matrix<Rational>& a, const Matrix<Rational>& b, std::size_t i,
                                       std::size_t j);
std::optional<PencilQuadratic> first_nonzero_quadratic(const Matrix<Rational>& a, const Matrix<Rational>& b,
                                                       std::size_t i, std::size_t j);

// A + lambda B == r_j(lambda) c_i(lambda)^T entrywise, checked in the field
// of lambda. Requires a_ij + lambda b_ij != 0.
bool pencil_factors_at(const Matrix<Rational>& a, const Matrix<Rational>& b, std::size_t i, std::size_t j,
                       const QuadExt& lambda);

// A + lambda B as a matrix over the field of lambda.
Matrix<QuadExt> evaluate_pencil(const Matrix<Rational>& a, const Matrix<Rational>& b, const QuadExt& lambda);

// All real lambda with rank(A + lambda B) == 1. Throws InvalidArgument when
// both A and B are zero.
LambdaSet solve_rank1_pencil(const Matrix<Rational>& a, const Matrix<Rational>& b);

}  // namespace strateq
