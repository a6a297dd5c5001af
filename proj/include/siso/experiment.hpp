#pragma once

#include <vector>

#include "siso/support_recovery.hpp"
#include "siso/types.hpp"

namespace siso {

/// Declarative description of a support-recovery experiment: a grid of
/// (n, d) cells, fixed (s, r, sigma), a trial count and a master seed.
/// Every trial draws its own instance from a counter-split stream, so the
/// results do not depend on scheduling or thread count.
struct ExperimentConfig {
  std::vector<int> ns;
  std::vector<int> ds;
  int s = 3;
  int r = 10;
  double sigma = 0.31622776601683794;  // noise standard deviation
  int trials = 20;
  uint64_t seed = 7;
  std::vector<RecoveryMethod> methods{RecoveryMethod::Ipir, RecoveryMethod::Lpsr,
                                      RecoveryMethod::Slpsr};
  int threads = 1;
  /// Guard on the estimated number of inner-solver invocations.
  uint64_t max_solver_calls = 50000000ULL;

  void validate() const;
  uint64_t estimated_solver_calls() const;
};

struct TrialRecord {
  int trial = 0;
  uint64_t stream = 0;  // counter used to split the RNG stream
  bool success = false;
  std::vector<int> selected;  // 0-based recovered coordinates
};

struct CellResult {
  int n = 0;
  int d = 0;
  RecoveryMethod method = RecoveryMethod::Ipir;
  int successes = 0;
  int trials = 0;
  std::vector<TrialRecord> detail;

  double percent() const { return trials == 0 ? 0.0 : 100.0 * successes / trials; }
};

/// Success percentages per grid cell and method. Cells are ordered
/// method-major, then by n, then by d (the layout the CSV writer mirrors).
struct RecoveryTable {
  ExperimentConfig config;
  std::vector<CellResult> cells;

  const CellResult& cell(RecoveryMethod m, int n, int d) const;
};

/// Runs the experiment: for every (n, d) cell and trial, generates one
/// instance (shared by all methods in that trial) and counts exact
/// recoveries of the true active set. Trials run in parallel when
/// config.threads > 1; results are byte-identical for any thread count.
RecoveryTable recovery_experiment(const ExperimentConfig& config);

}  // namespace siso
