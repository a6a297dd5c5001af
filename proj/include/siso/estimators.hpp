#pragma once

#include "siso/sparse_fit.hpp"
#include "siso/support_recovery.hpp"
#include "siso/types.hpp"

namespace siso {

/// Exact joint estimation: enumerates every active set of size s
/// (lexicographic order, skipping sets that contain an exclusion pair),
/// solves the fixed-set problem with the exact inner solver for the noise
/// model, and keeps the global minimizer. Ties between subsets go to the
/// lexicographically smallest index set. Refuses more than 10^6 subsets.
///
/// Internally each subset's dominance structure is an AND of precomputed
/// per-coordinate bit layers, and a matching-based lower bound prunes
/// subsets that provably cannot beat the incumbent, so the exact optimum
/// is unchanged.
SparseFit ipir_fit(const Dataset& dataset, int s, InterpolationRule rule,
                   const RecoveryConfig& exclusions = {});

/// Two-stage estimation: recover the active set with LPSR or S-LPSR, then
/// solve the fixed-set problem exactly on the recovered set.
SparseFit tsir_fit(const Dataset& dataset, int s, const RecoveryConfig& recovery,
                   InterpolationRule rule);

/// Shared inner dispatch: exact solver for a fixed active set under the
/// dataset's noise model.
FitResult solve_fixed_active_set(const Dataset& dataset, const ActiveSet& active);

}  // namespace siso
