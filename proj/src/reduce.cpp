#include "strateq/reduce.hpp"

#include <algorithm>

namespace strateq {

std::string to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::rankD0:
      return "rankD0";
    case CaseTag::rankD1_rowspace:
      return "rankD1_rowspace";
    case CaseTag::rankD1_colspace:
      return "rankD1_colspace";
    case CaseTag::rankD2:
      return "rankD2";
  }
  return "?";
}

CaseTag parse_case_tag(const std::string& text) {
  for (auto tag : {CaseTag::rankD0, CaseTag::rankD1_rowspace, CaseTag::rankD1_colspace, CaseTag::rankD2})
    if (to_string(tag) == text) return tag;
  throw ParseError("unknown case tag '" + text + "'");
}

std::string to_string(NotEquivalentReason reason) {
  return reason == NotEquivalentReason::empty_lambda ? "empty-lambda" : "no-positive-lambda";
}

const CaseTrace* ReductionOutcome::winning_case() const {
  if (!is_equivalent()) return nullptr;
  for (const auto& t : trace)
    if (t.chosen) return &t;
  return nullptr;
}

namespace {

Matrix<Rational> subtract_row(const Matrix<Rational>& m, std::size_t l) {
  return outer_add(m, Vector<Rational>(m.rows(), 1), m.row(l), -1);
}

Matrix<Rational> subtract_col(const Matrix<Rational>& m, std::size_t k) {
  return outer_add(m, m.col(k), Vector<Rational>(m.cols(), 1), -1);
}

Matrix<Rational> double_center(const Matrix<Rational>& m, std::size_t l, std::size_t k) {
  Vector<Rational> col = m.col(k);
  for (auto& x : col) x -= m(l, k);
  Matrix<Rational> out = outer_add(m, Vector<Rational>(m.rows(), 1), m.row(l), -1);
  return outer_add(std::move(out), col, Vector<Rational>(m.cols(), 1), -1);
}

// Some gamma > 0 with A_bar + gamma B_bar == 0. On the double-centred pair
// this detects C~(gamma) in {1 u^T + v 1^T}, which double centring
// annihilates exactly.
std::optional<QuadExt> zero_sum_like_gamma(const Matrix<Rational>& abar, const Matrix<Rational>& bbar) {
  auto p = first_nonzero(bbar);
  if (!p) {
    if (abar.is_zero()) return QuadExt(1);
    return std::nullopt;
  }
  auto [i, j] = *p;
  Rational gamma = -abar(i, j) / bbar(i, j);
  if (sgn(gamma) <= 0) return std::nullopt;
  for (std::size_t s = 0; s < abar.rows(); ++s)
    for (std::size_t t = 0; t < abar.cols(); ++t)
      if (abar(s, t) + gamma * bbar(s, t) != 0) return std::nullopt;
  return QuadExt(gamma);
}

Vector<QuadExt> combine(const Vector<Rational>& x, const QuadExt& gamma, const Vector<Rational>& y) {
  Vector<QuadExt> out(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) out[k] = QuadExt(x[k]) + gamma * QuadExt(y[k]);
  return out;
}

ReductionCertificate assemble(const BimatrixGame& g, CaseTag tag, const QuadExt& gamma, std::size_t l,
                              std::size_t k) {
  const std::size_t m = g.m(), n = g.n();
  ReductionCertificate cert;
  cert.gamma_star = gamma;
  cert.case_tag = tag;
  cert.u_hat.assign(n, QuadExt(0));
  cert.v_hat.assign(m, QuadExt(0));

  const bool row_part = tag == CaseTag::rankD1_rowspace || tag == CaseTag::rankD2;
  const bool col_part = tag == CaseTag::rankD1_colspace || tag == CaseTag::rankD2;
  if (row_part) {
    cert.pivot_row = l;
    cert.u_hat = combine(g.A.row(l), gamma, g.B.row(l));
  }
  if (col_part) {
    cert.pivot_col = k;
    Vector<Rational> a_col = g.A.col(k), b_col = g.B.col(k);
    if (tag == CaseTag::rankD2) {
      for (auto& x : a_col) x -= g.A(l, k);
      for (auto& x : b_col) x -= g.B(l, k);
    }
    cert.v_hat = combine(a_col, gamma, b_col);
  }

  cert.A_hat = outer_add(lift(g.A), Vector<QuadExt>(m, QuadExt(1)), cert.u_hat, -1);
  cert.B_hat = outer_add(gamma * lift(g.B), cert.v_hat, Vector<QuadExt>(n, QuadExt(1)), -1);
  auto factor = is_rank_one(cert.A_hat + cert.B_hat);
  if (!factor) throw ContractViolation("assembled game is not rank 1 at a verified pencil root");
  cert.r_hat = std::move(factor->left);
  cert.c_hat = std::move(factor->right);
  return cert;
}

}  // namespace

std::pair<Matrix<Rational>, Matrix<Rational>> build_reduced_pair(const BimatrixGame& g, std::size_t l,
                                                                 std::size_t k) {
  if (l >= g.m() || k >= g.n()) throw InvalidArgument("build_reduced_pair: pivot index out of range");
  return {double_center(g.A, l, k), double_center(g.B, l, k)};
}

namespace {

// Positive members in order of preference; a cofinite set contributes its
// first admissible positive integer only.
std::vector<QuadExt> positive_candidates(const LambdaSet& lambdas) {
  if (lambdas.all_except) {
    for (long c = 1;; ++c)
      if (lambdas.contains(QuadExt(c))) return {QuadExt(c)};
  }
  std::vector<QuadExt> out;
  for (const auto& x : lambdas.values)
    if (x.sign() == Sign::positive) out.push_back(x);
  auto rank_of = [](const QuadExt& x) { return x == QuadExt(1) ? 0 : x.is_rational() ? 1 : 2; };
  std::stable_sort(out.begin(), out.end(), [&](const QuadExt& x, const QuadExt& y) {
    if (rank_of(x) != rank_of(y)) return rank_of(x) < rank_of(y);
    return x < y;  // one quadratic, so one field
  });
  return out;
}

}  // namespace

std::optional<QuadExt> choose_gamma(const LambdaSet& lambdas) {
  auto c = positive_candidates(lambdas);
  if (c.empty()) return std::nullopt;
  return c.front();
}

ReductionOutcome ser1_reduce(const BimatrixGame& g, const Ser1Options& opts) {
  ReductionOutcome out;
  if (g.m() < 2 || g.n() < 2) {
    out.result = Rejected{"games need at least two strategies per player"};
    return out;
  }
  if (opts.pivot_row >= g.m() || opts.pivot_col >= g.n()) {
    out.result = Rejected{"pivot outside the game"};
    return out;
  }
  const std::size_t l = opts.pivot_row, k = opts.pivot_col;
  auto [abar2, bbar2] = build_reduced_pair(g, l, k);
  // B~ = -A~ / gamma: a zero-sum game up to scaling, reported as such.
  if (auto scaled = zero_sum_like_gamma(g.A, g.B)) {
    out.result = DegenerateZeroSumLike{*scaled};
    return out;
  }
  auto zero_sum_gamma = zero_sum_like_gamma(abar2, bbar2);

  struct Pending {
    CaseTag tag;
    Matrix<Rational> abar, bbar;
  };
  std::vector<Pending> cases;
  cases.push_back({CaseTag::rankD0, g.A, g.B});
  cases.push_back({CaseTag::rankD1_rowspace, subtract_row(g.A, 0), subtract_row(g.B, 0)});
  cases.push_back({CaseTag::rankD1_colspace, subtract_col(g.A, 0), subtract_col(g.B, 0)});
  cases.push_back({CaseTag::rankD2, std::move(abar2), std::move(bbar2)});

  std::optional<ReductionCertificate> cert;
  std::optional<QuadExt> zero_sum_witness = zero_sum_gamma;
  for (auto& c : cases) {
    if (cert && !opts.evaluate_all_cases) break;
    CaseTrace t{c.tag, std::move(c.abar), std::move(c.bbar), {}, std::nullopt, false};
    if (t.Abar.is_zero() && t.Bbar.is_zero()) {
      t.skipped = true;
      out.trace.push_back(std::move(t));
      continue;
    }
    t.lambdas = solve_rank1_pencil(t.Abar, t.Bbar);
    if (!cert) {
      std::size_t row = (c.tag == CaseTag::rankD2) ? l : 0;
      std::size_t col = (c.tag == CaseTag::rankD2) ? k : 0;
      for (const auto& gamma : positive_candidates(t.lambdas)) {
        auto candidate = assemble(g, c.tag, gamma, row, col);
        // A rank-1 target inside {1 u^T + v 1^T} is a zero-sum game in disguise.
        if (subspace_membership(Matrix<QuadExt>(candidate.A_hat + candidate.B_hat))) {
          if (!zero_sum_witness) zero_sum_witness = gamma;
          continue;
        }
        t.chosen = gamma;
        cert = std::move(candidate);
        break;
      }
    }
    out.trace.push_back(std::move(t));
  }

  if (cert) {
    out.result = Equivalent{std::move(*cert)};
    return out;
  }
  if (zero_sum_witness) {
    out.result = DegenerateZeroSumLike{*zero_sum_witness};
    return out;
  }
  bool any_member = std::any_of(out.trace.begin(), out.trace.end(),
                                [](const CaseTrace& t) { return !t.skipped && !t.lambdas.is_empty(); });
  out.result = NotEquivalent{any_member ? NotEquivalentReason::no_positive_lambda
                                        : NotEquivalentReason::empty_lambda};
  return out;
}

VerifyReport verify_certificate(const BimatrixGame& g, const ReductionCertificate& cert) {
  VerifyReport rep;
  auto fail = [&](std::string why) {
    rep.ok = false;
    rep.reasons.push_back(std::move(why));
  };
  const std::size_t m = g.m(), n = g.n();
  if (cert.A_hat.rows() != m || cert.A_hat.cols() != n || cert.B_hat.rows() != m || cert.B_hat.cols() != n ||
      cert.u_hat.size() != n || cert.v_hat.size() != m || cert.r_hat.size() != m || cert.c_hat.size() != n) {
    fail("certificate shape does not match the game");
    return rep;
  }
  try {
    if (cert.gamma_star.sign() != Sign::positive) fail("gamma* is not positive");

    Matrix<QuadExt> row_shift = lift(g.A) - cert.A_hat;
    auto w = common_row(row_shift);
    if (!w)
      fail("A~ - A_hat is not row-constant");
    else if (*w != cert.u_hat)
      fail("A~ - A_hat differs from 1 u_hat^T");

    Matrix<QuadExt> col_shift = cert.gamma_star * lift(g.B) - cert.B_hat;
    auto z = common_col(col_shift);
    if (!z)
      fail("gamma* B~ - B_hat is not column-constant");
    else if (*z != cert.v_hat)
      fail("gamma* B~ - B_hat differs from v_hat 1^T");

    Matrix<QuadExt> sum = cert.A_hat + cert.B_hat;
    if (sum != outer(cert.r_hat, cert.c_hat)) fail("A_hat + B_hat != r_hat c_hat^T");
    if (!is_rank_one(sum)) fail("A_hat + B_hat is not rank 1");
  } catch (const IncompatibleFieldError& e) {
    fail(std::string("mixed quadratic fields: ") + e.what());
  }
  return rep;
}

}  // namespace strateq
