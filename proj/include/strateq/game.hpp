#pragma once

#include <cstdint>
#include <tuple>

#include "strateq/matrix.hpp"

namespace strateq {

// Two-player normal-form game: row player payoffs A, column player payoffs B.
template <class T>
struct BasicGame {
  Matrix<T> A;
  Matrix<T> B;

  BasicGame() = default;
  BasicGame(Matrix<T> a, Matrix<T> b) : A(std::move(a)), B(std::move(b)) {
    if (A.rows() != B.rows() || A.cols() != B.cols())
      throw ShapeError("payoff matrices must have the same shape");
    if (A.rows() == 0 || A.cols() == 0) throw ShapeError("a game needs at least one strategy each");
  }

  std::size_t m() const { return A.rows(); }
  std::size_t n() const { return A.cols(); }

  friend bool operator==(const BasicGame&, const BasicGame&) = default;
};

using BimatrixGame = BasicGame<Rational>;
using ExtGame = BasicGame<QuadExt>;

inline ExtGame lift(const BimatrixGame& g) { return ExtGame(lift(g.A), lift(g.B)); }

// rank(A + B).
template <class T>
std::size_t game_rank(const BasicGame<T>& g) {
  return rank(g.A + g.B);
}

// Positive affine transformation
//   A' = alpha1 A + beta1 1_m u^T,   B' = alpha2 B + beta2 v 1_n^T.
struct PatParams {
  Rational alpha1{1};
  Rational alpha2{1};
  Rational beta1{0};
  Rational beta2{0};
  Vector<Rational> u;  // length n
  Vector<Rational> v;  // length m

  static PatParams identity(std::size_t m, std::size_t n) {
    return {1, 1, 0, 0, Vector<Rational>(n, 0), Vector<Rational>(m, 0)};
  }
  // Parameters of the transformation that undoes this one.
  PatParams inverse() const;

  friend bool operator==(const PatParams&, const PatParams&) = default;
};

BimatrixGame apply_pat(const BimatrixGame& g, const PatParams& p);

// The rank-1 game (A, -A + r c^T).
struct Rank1GameSpec {
  Matrix<Rational> A;
  Vector<Rational> r;
  Vector<Rational> c;

  BimatrixGame game() const;

  friend bool operator==(const Rank1GameSpec&, const Rank1GameSpec&) = default;
};

struct DisguisedGame {
  BimatrixGame game;  // what a solver sees
  Rank1GameSpec base;
  PatParams pat;

  Rational hidden_ratio() const { return pat.alpha1 / pat.alpha2; }
};

struct GeneratorOptions {
  bool identity_pat = false;
};

// Draws a rank-1 game with integer entries in [-bound, bound] and disguises
// it with a random PAT (alpha in {1..bound}). Deterministic in all inputs.
// r and c are redrawn until neither is constant, so r c^T is rank 1 and
// not itself of the form 1 u^T + v 1^T.
DisguisedGame generate_disguised_rank1(std::size_t m, std::size_t n, std::uint64_t seed,
                                       int entry_bound, GeneratorOptions opts = {});

}  // namespace strateq
