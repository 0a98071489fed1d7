#pragma once

#include <vector>

#include "strateq/game.hpp"

namespace strateq {

template <class T>
struct MixedProfile {
  Vector<T> p;  // row player, length m
  Vector<T> q;  // column player, length n

  friend bool operator==(const MixedProfile&, const MixedProfile&) = default;
};

// p^T A q >= e_i^T A q for every row i and p^T B q >= p^T B e_j for every
// column j. Profiles outside the simplices are rejected (false). Throws
// ShapeError on a dimension mismatch.
template <class T>
bool is_nash(const BasicGame<T>& g, const MixedProfile<T>& prof);

template <class T>
struct NashEnumeration {
  std::vector<MixedProfile<T>> profiles;
  // Some support pair had a singular indifference system, or an
  // equilibrium had more pure best responses than its support size. In
  // either case equilibria with unequal supports may have been missed.
  bool degenerate = false;
  std::size_t singular_supports = 0;
};

inline constexpr std::size_t kDefaultNashBound = 4;

// Equal-size support enumeration with exact indifference solves. Throws
// RejectedInput when m or n exceeds `bound`.
template <class T>
NashEnumeration<T> support_enumeration(const BasicGame<T>& g, std::size_t bound = kDefaultNashBound);

struct EquivalenceCheck {
  bool equivalent = false;
  bool degenerate = false;  // either enumeration raised its flag

  explicit operator bool() const { return equivalent; }
};

// Every enumerated equilibrium of each game is an equilibrium of the other.
EquivalenceCheck cross_verify_equivalence(const ExtGame& g1, const ExtGame& g2,
                                          std::size_t bound = kDefaultNashBound);
EquivalenceCheck cross_verify_equivalence(const BimatrixGame& g1, const BimatrixGame& g2,
                                          std::size_t bound = kDefaultNashBound);

}  // namespace strateq
