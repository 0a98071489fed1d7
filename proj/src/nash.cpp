#include "strateq/nash.hpp"

#include <algorithm>

namespace strateq {

namespace {

template <class T>
bool in_simplex(const Vector<T>& x) {
  T total(0);
  for (const auto& e : x) {
    if (sign_of(e) == Sign::negative) return false;
    total += e;
  }
  return total == T(1);
}

std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != k) continue;
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) s.push_back(i);
    out.push_back(std::move(s));
  }
  return out;
}

// Mixed strategy over `own` making every strategy in `other` indifferent
// against `payoff` (rows index `own` when own_is_rows). Unknowns are the
// weights and the common value.
template <class T>
LinearSolution<T> indifference(const Matrix<T>& payoff, bool own_is_rows, const std::vector<std::size_t>& own,
                               const std::vector<std::size_t>& other) {
  const std::size_t k = own.size();
  Matrix<T> sys(k + 1, k + 1);
  Vector<T> rhs(k + 1, T(0));
  for (std::size_t e = 0; e < k; ++e) {
    for (std::size_t x = 0; x < k; ++x)
      sys(e, x) = own_is_rows ? payoff(own[x], other[e]) : payoff(other[e], own[x]);
    sys(e, k) = T(-1);
  }
  for (std::size_t x = 0; x < k; ++x) sys(k, x) = T(1);
  rhs[k] = T(1);
  return solve(sys, rhs);
}

}  // namespace

template <class T>
bool is_nash(const BasicGame<T>& g, const MixedProfile<T>& prof) {
  if (prof.p.size() != g.m() || prof.q.size() != g.n()) throw ShapeError("profile does not match the game");
  if (!in_simplex(prof.p) || !in_simplex(prof.q)) return false;
  Vector<T> aq = g.A * prof.q;
  Vector<T> pb = left_multiply(prof.p, g.B);
  T row_value = dot(prof.p, aq);
  T col_value = dot(pb, prof.q);
  for (const auto& x : aq)
    if (x > row_value) return false;
  for (const auto& x : pb)
    if (x > col_value) return false;
  return true;
}

template <class T>
NashEnumeration<T> support_enumeration(const BasicGame<T>& g, std::size_t bound) {
  const std::size_t m = g.m(), n = g.n();
  if (m > bound || n > bound)
    throw RejectedInput("support enumeration is limited to " + std::to_string(bound) + "x" +
                        std::to_string(bound) + " games");
  NashEnumeration<T> out;
  for (std::size_t k = 1; k <= std::min(m, n); ++k) {
    for (const auto& rows : subsets_of_size(m, k)) {
      for (const auto& cols : subsets_of_size(n, k)) {
        auto qs = indifference(g.A, false, cols, rows);  // q over cols, rows indifferent under A
        auto ps = indifference(g.B, true, rows, cols);   // p over rows, cols indifferent under B
        if (qs.status == SolveStatus::none || ps.status == SolveStatus::none) continue;
        if (qs.status == SolveStatus::infinite || ps.status == SolveStatus::infinite) {
          out.degenerate = true;
          ++out.singular_supports;
          continue;
        }
        MixedProfile<T> prof{Vector<T>(m, T(0)), Vector<T>(n, T(0))};
        for (std::size_t x = 0; x < k; ++x) {
          prof.p[rows[x]] = ps.x[x];
          prof.q[cols[x]] = qs.x[x];
        }
        if (!is_nash(g, prof)) continue;
        // More best responses than support size signals a degenerate game.
        const T& value_a = qs.x[k];
        const T& value_b = ps.x[k];
        Vector<T> aq = g.A * prof.q;
        Vector<T> pb = left_multiply(prof.p, g.B);
        auto ties_a = std::count(aq.begin(), aq.end(), value_a);
        auto ties_b = std::count(pb.begin(), pb.end(), value_b);
        std::size_t nonzero_p = std::count_if(prof.p.begin(), prof.p.end(), [](const T& x) { return !is_zero(x); });
        std::size_t nonzero_q = std::count_if(prof.q.begin(), prof.q.end(), [](const T& x) { return !is_zero(x); });
        if (static_cast<std::size_t>(ties_a) > nonzero_p || static_cast<std::size_t>(ties_b) > nonzero_q)
          out.degenerate = true;
        if (std::find(out.profiles.begin(), out.profiles.end(), prof) == out.profiles.end())
          out.profiles.push_back(std::move(prof));
      }
    }
  }
  return out;
}

template bool is_nash(const BasicGame<Rational>&, const MixedProfile<Rational>&);
template bool is_nash(const BasicGame<QuadExt>&, const MixedProfile<QuadExt>&);
template NashEnumeration<Rational> support_enumeration(const BasicGame<Rational>&, std::size_t);
template NashEnumeration<QuadExt> support_enumeration(const BasicGame<QuadExt>&, std::size_t);

EquivalenceCheck cross_verify_equivalence(const ExtGame& g1, const ExtGame& g2, std::size_t bound) {
  if (g1.m() != g2.m() || g1.n() != g2.n()) throw ShapeError("games differ in shape");
  auto e1 = support_enumeration(g1, bound);
  auto e2 = support_enumeration(g2, bound);
  EquivalenceCheck out;
  out.degenerate = e1.degenerate || e2.degenerate;
  out.equivalent =
      std::all_of(e1.profiles.begin(), e1.profiles.end(), [&](const auto& p) { return is_nash(g2, p); }) &&
      std::all_of(e2.profiles.begin(), e2.profiles.end(), [&](const auto& p) { return is_nash(g1, p); });
  return out;
}

EquivalenceCheck cross_verify_equivalence(const BimatrixGame& g1, const BimatrixGame& g2, std::size_t bound) {
  return cross_verify_equivalence(lift(g1), lift(g2), bound);
}

}  // namespace strateq
