#pragma once

#include "siso/comparability.hpp"
#include "siso/types.hpp"

namespace siso {

/// Exact minimizer of the misclassification count over all monotone binary
/// labelings with respect to the active set's dominance order
/// (NoisyInput only). Reduces to a minimum s-t cut on the comparability
/// structure; among the optimal labelings, the one with the fewest
/// 1-labels is returned (minimal source side of the minimum cut).
FitResult solve_binary_labeling(const Dataset& dataset, const ActiveSet& active);

/// Same, with a precomputed dominance matrix for the active set.
FitResult solve_binary_labeling(const Dataset& dataset, const ActiveSet& active,
                                const BitMatrix& dominance);

/// Exhaustive oracle: enumerates every monotone binary labeling (order
/// ideal) and returns the minimum-error one with the fewest 1-labels.
/// Refuses n > 20.
FitResult brute_force_binary(const Dataset& dataset, const ActiveSet& active);

/// Exact minimizer of sum (Y_i - F_i)^2 over monotone-feasible F with
/// F_i in [0,1] (NoisyOutput only). Solved by recursive block
/// partitioning: a block whose mean admits no improving upper-set split
/// (a min-cut subproblem) is an optimal level set; otherwise the block is
/// split and both sides are refined. Block values are means of their
/// labels, clipped to [0,1] at the end; feasibility and the blockwise
/// mean property are asserted before returning.
FitResult solve_l2_isotonic(const Dataset& dataset, const ActiveSet& active);

/// Same, with a precomputed dominance matrix for the active set.
FitResult solve_l2_isotonic(const Dataset& dataset, const ActiveSet& active,
                            const BitMatrix& dominance);

}  // namespace siso
