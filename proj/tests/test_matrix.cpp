#include <doctest.h>

#include "oracles.hpp"
#include "strateq/matrix.hpp"

using namespace strateq;
using RMat = Matrix<Rational>;
using RVec = Vector<Rational>;

TEST_CASE("rank examples") {
  CHECK(rank(RMat::identity(3)) == 3);
  CHECK(rank(RMat{{1, 2}, {2, 4}}) == 1);
  CHECK(rank(RMat(3, 4)) == 0);

  RMat m = ones_outer<Rational>(3, {1, 2, 3}) + outer_ones<Rational>({1, 4, 9}, 3);
  CHECK(oracle::minor_rank(m) == 2);
  CHECK(rank(m) == 2);
}

TEST_CASE("rank matches the largest nonvanishing minor") {
  oracle::Random rnd(101);
  for (int trial = 0; trial < 600; ++trial) {
    std::size_t r = rnd.index(1, 4), c = rnd.index(1, 4);
    RMat m = trial % 3 == 0 ? rnd.low_rank(r, c, rnd.index(0, 3), 2) : rnd.matrix(r, c, 2);
    if (trial % 5 == 0) {
      m(0, 0) = Rational(rnd.integer(-5, 5), 3);
      m(0, 0).canonicalize();
    }
    CHECK(rank(m) == oracle::minor_rank(m));
    CHECK(rank(lift(m)) == oracle::minor_rank(m));
  }
}

TEST_CASE("is_rank_one examples") {
  auto f = is_rank_one(RMat{{2, 4}, {3, 6}});
  REQUIRE(f);
  CHECK(f->left == RVec{2, 3});
  CHECK(f->right == RVec{1, 2});
  CHECK(f->product() == RMat{{2, 4}, {3, 6}});
  CHECK_FALSE(is_rank_one(RMat{{1, 0}, {0, 1}}));
  CHECK_FALSE(is_rank_one(RMat{{0, 0}, {0, 0}}));
  // First nonzero entry in row-major order is the pivot.
  auto g = is_rank_one(RMat{{0, 0}, {0, 5}});
  REQUIRE(g);
  CHECK(g->left == RVec{0, 5});
  CHECK(g->right == RVec{0, 1});
}

TEST_CASE("is_rank_one present iff rank 1, and reconstructs") {
  oracle::Random rnd(202);
  int seen_rank_one = 0;
  for (int trial = 0; trial < 500; ++trial) {
    std::size_t r = rnd.index(1, 4), c = rnd.index(1, 4);
    RMat m = rnd.low_rank(r, c, rnd.index(0, 2), 2);
    auto f = is_rank_one(m);
    CHECK(f.has_value() == (rank(m) == 1));
    if (f) {
      ++seen_rank_one;
      CHECK(f->product() == m);
      CHECK_FALSE(is_zero_vector(f->left));
      CHECK_FALSE(is_zero_vector(f->right));
    }
  }
  CHECK(seen_rank_one > 50);
}

TEST_CASE("subspace membership examples") {
  auto z = subspace_membership(RMat(2, 3));
  REQUIRE(z);
  CHECK(z->first == RVec{0, 0, 0});
  CHECK(z->second == RVec{0, 0});

  auto p = subspace_membership(ones_outer<Rational>(2, {5, 7}));
  REQUIRE(p);
  CHECK(p->first == RVec{5, 7});
  CHECK(p->second == RVec{0, 0});

  // For 2x2 the obstruction is (m11 + m22) - (m12 + m21) = 2 != 0.
  RMat id = RMat::identity(2);
  CHECK((id(0, 0) + id(1, 1)) - (id(0, 1) + id(1, 0)) == 2);
  CHECK_FALSE(subspace_membership(id));
}

TEST_CASE("subspace membership reconstructs and bounds rank") {
  oracle::Random rnd(303);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t m = rnd.index(1, 5), n = rnd.index(1, 5);
    RVec u = rnd.vector(n, 6), v = rnd.vector(m, 6);
    RMat x = ones_outer(m, u) + outer_ones(v, n);
    auto uv = subspace_membership(x);
    REQUIRE(uv);
    CHECK(ones_outer(m, uv->first) + outer_ones(uv->second, n) == x);
    CHECK(uv->second[0] == 0);
    CHECK(rank(x) <= 2);

    RMat y = rnd.matrix(m, n, 3);
    if (subspace_membership(y)) CHECK(rank(y) <= 2);
  }
}

TEST_CASE("outer_add") {
  CHECK(outer_add(RMat(2, 2), RVec{1, 1}, RVec{2, 3}, +1) == RMat{{2, 3}, {2, 3}});
  CHECK(outer_add(RMat::identity(2), RVec{1, 1}, RVec{0, 1}, -1) == RMat{{1, -1}, {0, 0}});
  RMat m{{1, 2, 3}, {4, 5, 6}};
  RVec l{Rational(1, 2), -3}, r{7, 0, Rational(-2, 5)};
  CHECK(outer_add(outer_add(m, l, r, +1), l, r, -1) == m);
  CHECK_THROWS_AS(outer_add(m, RVec{1, 2, 3}, r, +1), ShapeError);
}

TEST_CASE("linear solve") {
  auto s = solve(RMat{{2, 1}, {1, 3}}, RVec{3, 5});
  REQUIRE(s.status == SolveStatus::unique);
  CHECK(s.x == RVec{Rational(4, 5), Rational(7, 5)});
  CHECK(solve(RMat{{1, 1}, {2, 2}}, RVec{1, 3}).status == SolveStatus::none);
  CHECK(solve(RMat{{1, 1}, {2, 2}}, RVec{1, 2}).status == SolveStatus::infinite);
  CHECK(in_column_span(RMat{{1, 0}, {0, 0}, {0, 1}}, RVec{3, 0, 4}));
  CHECK_FALSE(in_column_span(RMat{{1, 0}, {0, 0}, {0, 1}}, RVec{3, 1, 4}));
}
