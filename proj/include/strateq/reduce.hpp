#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "strateq/game.hpp"
#include "strateq/pencil.hpp"

namespace strateq {

// Which shape of the don't-care part D = 1 u^T + v 1^T the reduction used.
enum class CaseTag {
  rankD0,           // D = 0: the pencil (A~, B~) itself
  rankD1_rowspace,  // D = 1 u^T: subtract one row
  rankD1_colspace,  // D = v 1^T: subtract one column
  rankD2,           // general D: subtract a row and a column
};

std::string to_string(CaseTag tag);
CaseTag parse_case_tag(const std::string& text);

/*
 * Witness that (A~, B~) is strategically equivalent to the rank-1 game
 * (A_hat, B_hat):
 *
 *   A~ - A_hat          = 1_m u_hat^T
 *   gamma* B~ - B_hat   = v_hat 1_n^T
 *   A_hat + B_hat       = r_hat c_hat^T      (rank 1)
 *   gamma* > 0
 *
 * Entries live in Q(sqrt(d)) when gamma* is irrational.
 */
struct ReductionCertificate {
  QuadExt gamma_star;
  CaseTag case_tag = CaseTag::rankD2;
  std::optional<std::size_t> pivot_row;  // 0-based; the subtracted row, if any
  std::optional<std::size_t> pivot_col;  // 0-based; the subtracted column, if any
  Vector<QuadExt> u_hat, v_hat, r_hat, c_hat;
  Matrix<QuadExt> A_hat, B_hat;

  ExtGame rank1_game() const { return {A_hat, B_hat}; }

  friend bool operator==(const ReductionCertificate&, const ReductionCertificate&) = default;
};

enum class NotEquivalentReason { empty_lambda, no_positive_lambda };
std::string to_string(NotEquivalentReason reason);

struct Equivalent {
  ReductionCertificate certificate;
};
struct NotEquivalent {
  NotEquivalentReason reason;
};
// C~(gamma) = A~ + gamma B~ lies in the subspace {1 u^T + v 1^T} for some
// gamma > 0: the game is strategically zero-sum, outside the rank-1 scope.
struct DegenerateZeroSumLike {
  QuadExt gamma;  // one such gamma
};
struct Rejected {
  std::string reason;
};

// What one case of the reduction saw.
struct CaseTrace {
  CaseTag tag;
  Matrix<Rational> Abar, Bbar;
  LambdaSet lambdas;
  std::optional<QuadExt> chosen;  // positive member picked as gamma*
  bool skipped = false;           // reduced pair was (0, 0)
};

struct ReductionOutcome {
  std::variant<Equivalent, NotEquivalent, DegenerateZeroSumLike, Rejected> result;
  std::vector<CaseTrace> trace;

  bool is_equivalent() const { return std::holds_alternative<Equivalent>(result); }
  const ReductionCertificate& certificate() const { return std::get<Equivalent>(result).certificate; }
  // Trace entry of the case that produced the certificate.
  const CaseTrace* winning_case() const;
};

struct Ser1Options {
  // Row and column (0-based) subtracted in the rankD2 case.
  std::size_t pivot_row = 0;
  std::size_t pivot_col = 0;
  // Evaluate every case even after one succeeds (the outcome still comes
  // from the first success); the extra traces are diagnostic only.
  bool evaluate_all_cases = false;
};

// A_bar = A~ - 1 A~_(l) - (A~^(k) - a~_lk 1) 1^T and likewise B_bar. Row l
// and column k of both results are zero.
std::pair<Matrix<Rational>, Matrix<Rational>> build_reduced_pair(const BimatrixGame& g, std::size_t l,
                                                                 std::size_t k);

// Positive member used as gamma*: 1 when present, otherwise the smallest
// rational, otherwise the smallest irrational. Absent if none is positive.
std::optional<QuadExt> choose_gamma(const LambdaSet& lambdas);

// Cases run in the order of CaseTag; the first case with a positive member
// whose target A_hat + B_hat lies outside {1 u^T + v 1^T} yields the
// certificate. The outcome is DegenerateZeroSumLike instead when
// A~ + gamma B~ == 0 for some gamma > 0, or when no certificate exists but
// C~(gamma) lies in the subspace for some gamma > 0.
ReductionOutcome ser1_reduce(const BimatrixGame& g, const Ser1Options& opts = {});

struct VerifyReport {
  bool ok = true;
  std::vector<std::string> reasons;

  explicit operator bool() const { return ok; }
};

VerifyReport verify_certificate(const BimatrixGame& g, const ReductionCertificate& cert);

}  // namespace strateq
