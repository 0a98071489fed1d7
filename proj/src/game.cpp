#include "strateq/game.hpp"

#include <random>

namespace strateq {

PatParams PatParams::inverse() const {
  // A = (1/alpha1) A' - (beta1/alpha1) 1 u^T, likewise for B.
  return {Rational(1 / alpha1), Rational(1 / alpha2), Rational(-beta1 / alpha1),
          Rational(-beta2 / alpha2), u, v};
}

BimatrixGame apply_pat(const BimatrixGame& g, const PatParams& p) {
  if (sgn(p.alpha1) <= 0 || sgn(p.alpha2) <= 0)
    throw InvalidArgument("PAT scale factors must be strictly positive");
  if (p.u.size() != g.n() || p.v.size() != g.m()) throw ShapeError("PAT shift vectors do not match the game");
  Matrix<Rational> a = p.alpha1 * g.A;
  Matrix<Rational> b = p.alpha2 * g.B;
  Vector<Rational> bu(p.u), bv(p.v);
  for (auto& x : bu) x *= p.beta1;
  for (auto& x : bv) x *= p.beta2;
  a = outer_add(std::move(a), Vector<Rational>(g.m(), 1), bu, +1);
  b = outer_add(std::move(b), bv, Vector<Rational>(g.n(), 1), +1);
  return {std::move(a), std::move(b)};
}

BimatrixGame Rank1GameSpec::game() const {
  Matrix<Rational> b = outer_add(-A, r, c, +1);
  return {A, std::move(b)};
}

namespace {

class Drawer {
 public:
  Drawer(std::uint64_t seed, int bound) : rng_(seed), bound_(bound) {}

  Rational entry() { return std::uniform_int_distribution<int>(-bound_, bound_)(rng_); }
  Rational positive() { return std::uniform_int_distribution<int>(1, bound_)(rng_); }

  Vector<Rational> vector(std::size_t len) {
    Vector<Rational> v(len);
    for (auto& x : v) x = entry();
    return v;
  }
  Vector<Rational> non_constant_vector(std::size_t len) {
    for (;;) {
      auto v = vector(len);
      for (const auto& x : v)
        if (x != v[0]) return v;
    }
  }
  Matrix<Rational> matrix(std::size_t m, std::size_t n) {
    Matrix<Rational> a(m, n);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = entry();
    return a;
  }

 private:
  std::mt19937_64 rng_;
  int bound_;
};

}  // namespace

DisguisedGame generate_disguised_rank1(std::size_t m, std::size_t n, std::uint64_t seed, int entry_bound,
                                       GeneratorOptions opts) {
  if (m < 2 || n < 2) throw InvalidArgument("generator needs m, n >= 2");
  if (entry_bound < 1) throw InvalidArgument("entry bound must be >= 1");
  Drawer draw(seed, entry_bound);
  Rank1GameSpec base{draw.matrix(m, n), draw.non_constant_vector(m), draw.non_constant_vector(n)};
  PatParams pat;
  pat.alpha1 = draw.positive();
  pat.alpha2 = draw.positive();
  pat.beta1 = draw.entry();
  pat.beta2 = draw.entry();
  pat.u = draw.vector(n);
  pat.v = draw.vector(m);
  if (opts.identity_pat) pat = PatParams::identity(m, n);
  BimatrixGame g = apply_pat(base.game(), pat);
  return {std::move(g), std::move(base), std::move(pat)};
}

}  // namespace strateq
