#pragma once

#include <optional>
#include <string>

#include "strateq/game.hpp"
#include "strateq/reduce.hpp"

namespace strateq {

/*
 * Game file:
 *
 *   m n
 *   <m lines of n rationals>      payoffs of the row player
 *   <blank line>
 *   <m lines of n rationals>      payoffs of the column player
 *
 * Tokens are separated by blanks; a trailing newline is optional.
 */
BimatrixGame parse_game(const std::string& text);
std::string emit_game(const BimatrixGame& g);

enum class CertificateStatus { equivalent, not_equivalent, degenerate_zero_sum, rejected };
std::string to_string(CertificateStatus s);

/*
 * Certificate document, "key: value" lines:
 *
 *   status: equivalent | not-equivalent | degenerate-zero-sum | rejected
 *   reason: <text>                       (non-equivalent outcomes)
 *   gamma: <scalar>                      (equivalent, degenerate)
 *   case: rankD0 | rankD1_rowspace | rankD1_colspace | rankD2
 *   pivot_row: <1-based>                 (if a row was subtracted)
 *   pivot_col: <1-based>                 (if a column was subtracted)
 *   u_hat: <n scalars>
 *   v_hat: <m scalars>
 *   r_hat: <m scalars>
 *   c_hat: <n scalars>
 *   A_hat: <m> <n>
 *   <m rows>
 *   B_hat: <m> <n>
 *   <m rows>
 *
 * Scalars inside vectors and matrix rows use the blank-free form
 * "a+b*sqrt(d)"; the gamma line uses "a + b*sqrt(d)".
 */
struct CertificateDocument {
  CertificateStatus status = CertificateStatus::rejected;
  std::string reason;
  std::optional<QuadExt> gamma;
  std::optional<ReductionCertificate> certificate;

  friend bool operator==(const CertificateDocument&, const CertificateDocument&) = default;
};

CertificateDocument make_document(const ReductionOutcome& outcome);
CertificateDocument parse_certificate(const std::string& text);
std::string emit_certificate(const CertificateDocument& doc);

// Sidecar written next to generated games: the hidden rank-1 game and the
// transformation that disguised it.
struct HiddenParams {
  Rank1GameSpec base;
  PatParams pat;

  friend bool operator==(const HiddenParams&, const HiddenParams&) = default;
};

HiddenParams parse_hidden(const std::string& text);
std::string emit_hidden(const HiddenParams& h);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace strateq
