#pragma once

#include <optional>
#include <string>
#include <vector>

#include "siso/comparability.hpp"
#include "siso/types.hpp"

namespace siso {

enum class LpRelation { LessEqual, Equal, GreaterEqual };
enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpConstraint {
  std::vector<double> coeffs;
  LpRelation rel = LpRelation::LessEqual;
  double rhs = 0.0;
};

/// Dense LP in inequality form: minimize objective . x subject to the
/// listed constraints and per-variable bounds (+/-infinity allowed).
struct LpProblem {
  std::vector<double> objective;
  std::vector<LpConstraint> constraints;
  std::vector<double> lower;
  std::vector<double> upper;

  int num_vars() const { return static_cast<int>(objective.size()); }

  /// All-variable bounds helper.
  static LpProblem with_bounds(int m, double lo, double hi);
};

struct LpSolution {
  LpStatus status = LpStatus::Optimal;
  std::vector<double> x;          // primal values (Optimal only)
  double objective = 0.0;
  std::vector<double> row_duals;  // y with objective == y.b + bound terms (Optimal only)
  std::vector<double> ray;        // unbounded direction over the structurals (Unbounded only)
  double infeasibility = 0.0;     // phase-1 residual (Infeasible only)
  long pivots = 0;
  uint64_t pivot_hash = 0;        // order-sensitive digest of the pivot sequence
};

/// Bounded-variable two-phase primal simplex on a dense tableau.
///
/// Entering variable: most negative reduced cost, ties by lowest index;
/// after a run of degenerate steps the rule switches to Bland's lowest
/// index until progress resumes, which prevents cycling. Leaving variable:
/// ratio test with ties broken by lowest basis column index. The pivot
/// sequence is a pure function of the problem data.
///
/// Tolerances: pivot 1e-9, feasibility 1e-8.
LpSolution solve_lp(const LpProblem& problem);

/// When set, every solved LP is appended to this file, one constraint per
/// line, for external cross-checking (CLI --lp-dump flag). Not thread-safe;
/// intended for single-run debugging only.
void set_lp_debug_dump(std::optional<std::string> path);

/// Solves the fixed-active-set labeling problem twice under the NoisyInput
/// model: once as a linear program with the binary constraint relaxed to
/// F_i in [0,1], and once exactly over binary labelings. Returns both
/// objectives and whether they agree within 1e-7 (they always should:
/// the relaxation admits an integer optimum).
struct IntegralityReport {
  double lp_objective = 0.0;
  double ip_objective = 0.0;
  bool integral = false;
};

IntegralityReport check_integrality(const Dataset& dataset, const ActiveSet& active);

}  // namespace siso
