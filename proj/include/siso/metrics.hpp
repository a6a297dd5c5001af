#pragma once

#include "siso/generator.hpp"
#include "siso/sparse_fit.hpp"
#include "siso/types.hpp"

namespace siso {

/// Monte-Carlo estimate with its standard error.
struct McEstimate {
  double value = 0.0;
  double std_error = 0.0;
};

/// Monte-Carlo L2 norm error: sqrt of the mean squared gap between the
/// fitted estimator and the truth over uniform draws from [0,1]^d. The
/// reported standard error is for the mean of squares, mapped through the
/// square root by the delta method (zero when the mean is zero).
McEstimate l2_error_mc(const SparseFit& fit, const AnchorModel& truth, int n_mc, uint64_t seed);

/// Discrepancy between two binary-valued fits: the probability mass of
/// the region where they disagree, under uniform X. Both fits must have
/// binary fitted values.
McEstimate discrepancy_mc(const SparseFit& fit_a, const SparseFit& fit_b, int n_mc, uint64_t seed);

/// Misclassification probability of a binary fit against fresh draws from
/// a NoisyInput model: P(fit(X) != Y) with Y = f(X + W).
McEstimate misclassification_q_mc(const SparseFit& fit, const AnchorModel& truth, int n_mc,
                                  uint64_t seed);

/// Empirical probability gap for coordinate k (0-based): pairs are drawn
/// by rejection until X_1 strictly exceeds X_2 in coordinate k, then the
/// gap P(Y_1 > Y_2) - P(Y_1 < Y_2) is averaged (for NoisyInput models the
/// events are Y_1=1,Y_2=0 versus Y_1=0,Y_2=1, which there coincide with
/// the same gap). Positive for active coordinates, zero for inactive ones.
McEstimate estimate_gap_pk(const AnchorModel& model, int k, int n_pairs, uint64_t seed);

}  // namespace siso
