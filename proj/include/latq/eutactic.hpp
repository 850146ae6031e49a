#pragma once

#include <latq/lattice.hpp>
#include <latq/shortvec.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace latq {

// witness for s-integrability via Lemma "dual contains a eutactic star":
//   sum_k mult_k * y_k^T y_k = s * Gram   (y_k = dual-basis coefficient rows)
struct EutacticCertificate {
  Int scale;
  std::vector<Row> coeffs;          // y_k, one per antipodal class used
  std::vector<Int> multiplicities;  // >= 1
  std::vector<Row> vectors;         // ambient coordinates (empty if Gram-only lattice)
};

// matrix identity Y^T diag(x) Y == s * gram
bool certificate_valid(const Mat& gram, const EutacticCertificate& cert);

// polarized Eq. (7.1): sum_i (w_a, s_i)(w_b, s_i) = s (w_a, w_b) on all basis pairs;
// throws if some vector is outside the span of subspace_basis
bool is_eutactic_star(const std::vector<Row>& vectors,
                      const std::vector<Row>& subspace_basis, const Rat& s);

// inequality (2 - |su|^2)(2 - |sv|^2) >= (delta/2)^2
bool pair_psd_filter(const Row& su, const Row& sv, const Rat& delta);

enum class SIntOutcome { integrable, not_integrable, budget_exhausted };

struct SIntResult {
  SIntOutcome outcome;
  std::optional<EutacticCertificate> certificate;
  std::uint64_t nodes = 0;
};

SIntResult decide_s_integrable(const Lattice& L, const Int& s,
                               std::uint64_t node_budget = 100000000ull);

struct RefutationCertificate {
  bool refuted = false;
  std::string mode;          // "all-pairs-violate" or "lemma-8.4-precondition-failed"
  int failed_precondition = 0;  // 1..3 when preconditions fail
  std::vector<int> support;     // the set X (1-based ambient coordinates)
  long pairs_checked = 0;
  std::optional<std::pair<Row, Row>> witness_pair;  // pair whose 2I-G stayed PSD
};

// N := orthogonal complement of M in L_big; refute 2-integrability of N
// by the all-pairs version of the root-pair lemma, X in 1-based coordinates
RefutationCertificate refute_2_integrability(const Lattice& L_big, const Lattice& M,
                                             const std::vector<int>& X);

}  // namespace latq
