#pragma once

#include <utility>
#include <vector>

#include "siso/lp.hpp"
#include "siso/types.hpp"

namespace siso {

enum class RecoveryMethod { Ipir, Lpsr, Slpsr };

std::string to_string(RecoveryMethod m);

/// Options shared by the recovery-driven fitters. Exclusion pairs mark
/// coordinates that are negations of each other: subsets containing both
/// are skipped during exact search, and once one is selected sequentially
/// its partner is pinned to zero in later rounds.
struct RecoveryConfig {
  RecoveryMethod method = RecoveryMethod::Slpsr;
  std::vector<std::pair<int, int>> exclusion_pairs;  // 0-based, stored with first < second
  /// S-LPSR data handling: by default every round reuses the full sample
  /// (matching how the estimator is evaluated empirically); when true the
  /// data is split into s equal folds, one per round.
  bool fresh_split = false;

  void validate(int dimension) const;
  /// Partners of coordinate k under the exclusion pairs.
  std::vector<int> partners_of(int k) const;
};

/// One-shot LP support recovery: minimizes the total correction mass
/// needed to explain all label inversions, then keeps the s coordinates
/// with the largest relaxation weights (ties to the smallest index).
/// With no label inversions at all the LP is vacuous and the s smallest
/// indices are returned.
ActiveSet lpsr(const Dataset& dataset, int s);

/// Sequential variant: s rounds of the s=1 program, pinning previously
/// selected coordinates (and their exclusion partners) to zero.
ActiveSet slpsr(const Dataset& dataset, int s, const RecoveryConfig& config = {});

namespace detail {

/// Aggregated strict-exceedance patterns of label-inverted pairs: one
/// entry per distinct set {k : X_{i,k} > X_{j,k}} over ordered pairs with
/// Y_i > Y_j, weighted by multiplicity. Pairs where X_i exceeds X_j
/// nowhere cannot be covered or corrected and are dropped (they do not
/// generate constraints).
struct ViolationPatterns {
  int d = 0;
  std::vector<std::vector<int>> coords;
  std::vector<double> weight;

  bool empty() const { return coords.empty(); }
};

ViolationPatterns build_violation_patterns(const Dataset& dataset);
ViolationPatterns build_violation_patterns(const Dataset& dataset, int sample_begin, int sample_end);

/// Correction mass z(v) = sum_pi w_pi * max(0, 1 - sum_{k in pi} v_k) and
/// optionally a subgradient.
double correction_mass(const ViolationPatterns& patterns, const std::vector<double>& v,
                       std::vector<double>* subgradient);

struct CorrectionLpResult {
  std::vector<double> v;  // length d
  double objective = 0.0;
};

/// Exact minimizer of the correction mass over {sum v = s, 0 <= v <= 1,
/// v_k = 0 for pinned k}. The correction variables are projected out
/// (each pair's optimal correction is its coverage deficit) and the
/// projected program is solved through its dual, which has only d rows
/// however many pairs there are; solve_lp does the work and the row duals
/// give v back. Equivalent to the one-shot LP over (v, c); the
/// equivalence is exercised in tests against the literal formulation
/// below.
CorrectionLpResult minimize_correction_mass(const ViolationPatterns& patterns, int s,
                                            const std::vector<char>& pinned);

/// Literal one-shot LP with explicit correction variables (one per
/// inverted pair and strictly-exceeding coordinate). Intended for small
/// instances and as the test oracle for the cutting-plane path.
CorrectionLpResult minimize_correction_mass_literal(const ViolationPatterns& patterns, int s,
                                                    const std::vector<char>& pinned);

/// Top-s coordinates by weight, ties to the smallest index.
std::vector<int> select_top_coordinates(const std::vector<double>& v, int s);

}  // namespace detail

}  // namespace siso
