#include "siso/lp.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <mutex>

#include "siso/exact_solvers.hpp"

namespace siso {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPivotTol = 1e-9;
constexpr double kFeasTol = 1e-8;
constexpr double kRcTol = 1e-9;
constexpr long kMaxPivots = 200000;
constexpr int kDegenerateSwitch = 30;  // consecutive zero-step pivots before Bland

std::mutex g_dump_mutex;
std::optional<std::string> g_dump_path;

void dump_problem(const LpProblem& p) {
  std::lock_guard<std::mutex> lock(g_dump_mutex);
  if (!g_dump_path) return;
  std::ofstream out(*g_dump_path, std::ios::app);
  out << "lp vars=" << p.num_vars() << " rows=" << p.constraints.size() << "\n";
  out << "min";
  for (double c : p.objective) out << " " << c;
  out << "\n";
  for (const auto& row : p.constraints) {
    for (double a : row.coeffs) out << a << " ";
    out << (row.rel == LpRelation::LessEqual ? "<=" : row.rel == LpRelation::Equal ? "==" : ">=");
    out << " " << row.rhs << "\n";
  }
  out << "bounds";
  for (int j = 0; j < p.num_vars(); ++j) out << " [" << p.lower[j] << "," << p.upper[j] << "]";
  out << "\nend\n";
}

enum class VarState : uint8_t { Basic, AtLower, AtUpper, FreeZero };

class Simplex {
 public:
  explicit Simplex(const LpProblem& p) : prob_(p) {
    n_rows_ = static_cast<int>(p.constraints.size());
    n_struct_ = p.num_vars();

    // Column layout: structurals, one slack per inequality row, one
    // artificial per row.
    slack_col_.assign(n_rows_, -1);
    int col = n_struct_;
    for (int r = 0; r < n_rows_; ++r)
      if (p.constraints[r].rel != LpRelation::Equal) slack_col_[r] = col++;
    art_col_.assign(n_rows_, -1);
    for (int r = 0; r < n_rows_; ++r) art_col_[r] = col++;
    n_cols_ = col;

    lo_.assign(n_cols_, 0.0);
    hi_.assign(n_cols_, kInf);
    for (int j = 0; j < n_struct_; ++j) {
      lo_[j] = p.lower[j];
      hi_[j] = p.upper[j];
    }

    // Rows as equalities with slack signs folded into the slack column.
    tableau_.assign(static_cast<size_t>(n_rows_) * n_cols_, 0.0);
    rhs_.assign(n_rows_, 0.0);
    for (int r = 0; r < n_rows_; ++r) {
      const auto& row = p.constraints[r];
      double* t = tab(r);
      for (int j = 0; j < n_struct_; ++j) t[j] = row.coeffs[j];
      if (row.rel == LpRelation::LessEqual) t[slack_col_[r]] = 1.0;
      if (row.rel == LpRelation::GreaterEqual) t[slack_col_[r]] = -1.0;
      rhs_[r] = row.rhs;
    }

    // Nonbasic start: every non-artificial column at a finite bound (or
    // zero when free); artificials basic, absorbing the residuals.
    state_.assign(n_cols_, VarState::AtLower);
    val_.assign(n_cols_, 0.0);
    for (int j = 0; j < n_cols_; ++j) {
      if (std::isfinite(lo_[j])) {
        state_[j] = VarState::AtLower;
        val_[j] = lo_[j];
      } else if (std::isfinite(hi_[j])) {
        state_[j] = VarState::AtUpper;
        val_[j] = hi_[j];
      } else {
        state_[j] = VarState::FreeZero;
        val_[j] = 0.0;
      }
    }

    basis_.assign(n_rows_, -1);
    art_sign_.assign(n_rows_, 1.0);
    beta_.assign(n_rows_, 0.0);
    for (int r = 0; r < n_rows_; ++r) {
      double residual = rhs_[r];
      const double* t = tab(r);
      for (int j = 0; j < n_struct_; ++j) residual -= t[j] * val_[j];

      // Pick the initial basic variable for the row: its own slack when
      // that gives a non-negative value, otherwise an artificial. The row
      // is then sign-normalized so the hosting column (and the artificial
      // column, whose original coefficient is defined as flip * e_r) is +1;
      // the tableau is exactly B^{-1} A for this starting basis.
      double flip;
      bool slack_basic = false;
      double slack_value = 0.0;
      if (slack_col_[r] >= 0) {
        double coef = t[slack_col_[r]];
        slack_value = residual / coef;
        slack_basic = slack_value >= 0.0;
        flip = slack_basic ? coef : (residual >= 0.0 ? 1.0 : -1.0);
      } else {
        flip = residual >= 0.0 ? 1.0 : -1.0;
      }
      if (flip < 0.0) {
        double* row = tab(r);
        for (int j = 0; j < n_cols_; ++j) row[j] = -row[j];
        rhs_[r] = -rhs_[r];
      }
      tab(r)[art_col_[r]] = 1.0;
      art_sign_[r] = flip;
      if (slack_basic) {
        basis_[r] = slack_col_[r];
        state_[slack_col_[r]] = VarState::Basic;
        beta_[r] = slack_value;
        state_[art_col_[r]] = VarState::AtLower;
        val_[art_col_[r]] = 0.0;
      } else {
        basis_[r] = art_col_[r];
        state_[art_col_[r]] = VarState::Basic;
        beta_[r] = flip * residual;  // equals |residual|
      }
    }
  }

  LpSolution run() {
    LpSolution sol;

    // Phase 1: minimize the artificial mass.
    cost_.assign(n_cols_, 0.0);
    for (int r = 0; r < n_rows_; ++r) cost_[art_col_[r]] = 1.0;
    compute_reduced_costs();
    Outcome ph1 = iterate(/*phase1=*/true);
    if (ph1 == Outcome::IterationLimit) throw std::logic_error("solve_lp: phase 1 iteration limit");
    double art_mass = artificial_mass();
    if (art_mass > kFeasTol * std::max(1.0, rhs_scale())) {
      sol.status = LpStatus::Infeasible;
      sol.infeasibility = art_mass;
      sol.pivots = pivots_;
      sol.pivot_hash = pivot_hash_;
      return sol;
    }
    lock_artificials();
    refresh_beta();

    // Phase 2: the real objective.
    cost_.assign(n_cols_, 0.0);
    for (int j = 0; j < n_struct_; ++j) cost_[j] = prob_.objective[j];
    compute_reduced_costs();
    Outcome ph2 = iterate(/*phase1=*/false);
    refresh_beta();
    if (ph2 == Outcome::IterationLimit) throw std::logic_error("solve_lp: phase 2 iteration limit");
    sol.pivots = pivots_;
    sol.pivot_hash = pivot_hash_;
    if (ph2 == Outcome::Unbounded) {
      sol.status = LpStatus::Unbounded;
      sol.ray = unbounded_ray_;
      return sol;
    }

    sol.status = LpStatus::Optimal;
    sol.x.assign(n_struct_, 0.0);
    for (int j = 0; j < n_struct_; ++j) sol.x[j] = current_value(j);
    sol.objective = 0.0;
    for (int j = 0; j < n_struct_; ++j) sol.objective += prob_.objective[j] * sol.x[j];
    // Row duals read off the artificial columns (their tableau columns are
    // B^{-1} after the initial sign normalization).
    sol.row_duals.assign(n_rows_, 0.0);
    for (int r = 0; r < n_rows_; ++r)
      sol.row_duals[r] = -art_sign_[r] * rc_[art_col_[r]];
    return sol;
  }

 private:
  enum class Outcome { OptimalPhase, Unbounded, IterationLimit };

  double* tab(int r) { return tableau_.data() + static_cast<size_t>(r) * n_cols_; }
  const double* tab(int r) const { return tableau_.data() + static_cast<size_t>(r) * n_cols_; }

  double current_value(int j) const {
    if (state_[j] == VarState::Basic) {
      for (int r = 0; r < n_rows_; ++r)
        if (basis_[r] == j) return beta_[r];
    }
    return val_[j];
  }

  double rhs_scale() const {
    double s = 0.0;
    for (double b : rhs_) s = std::max(s, std::abs(b));
    return s;
  }

  double artificial_mass() const {
    double mass = 0.0;
    for (int r = 0; r < n_rows_; ++r) mass += std::abs(current_value(art_col_[r]));
    return mass;
  }

  // Recomputes basic values from the tableau: the artificial columns hold
  // B^{-1}, so x_B = B^{-1} b - sum_j (B^{-1} A_j) v_j over nonbasics.
  // Called at phase boundaries to shed accumulated pivot error.
  void refresh_beta() {
    for (int r = 0; r < n_rows_; ++r) {
      const double* t = tab(r);
      double v = 0.0;
      for (int rr = 0; rr < n_rows_; ++rr) v += t[art_col_[rr]] * rhs_[rr];
      for (int j = 0; j < n_cols_; ++j) {
        if (state_[j] == VarState::Basic) continue;
        double xj = val_[j];
        if (xj != 0.0) v -= t[j] * xj;
      }
      // The artificial block contributes through val_ like any nonbasic.
      beta_[r] = v;
    }
  }

  void compute_reduced_costs() {
    rc_.assign(n_cols_, 0.0);
    // rc_j = c_j - c_B . (B^{-1} A_j); the tableau rows are B^{-1} A.
    for (int j = 0; j < n_cols_; ++j) rc_[j] = cost_[j];
    for (int r = 0; r < n_rows_; ++r) {
      double cb = cost_[basis_[r]];
      if (cb == 0.0) continue;
      const double* t = tab(r);
      for (int j = 0; j < n_cols_; ++j) rc_[j] -= cb * t[j];
    }
    for (int r = 0; r < n_rows_; ++r) rc_[basis_[r]] = 0.0;
  }

  // Entering-variable eligibility: returns movement direction or 0.
  int direction_for(int j) const {
    if (state_[j] == VarState::Basic) return 0;
    if (state_[j] == VarState::AtLower) {
      if (rc_[j] < -kRcTol && (hi_[j] > lo_[j])) return +1;
      return 0;
    }
    if (state_[j] == VarState::AtUpper) {
      if (rc_[j] > kRcTol && (hi_[j] > lo_[j])) return -1;
      return 0;
    }
    // Free at zero: either direction pays.
    if (rc_[j] < -kRcTol) return +1;
    if (rc_[j] > kRcTol) return -1;
    return 0;
  }

  Outcome iterate(bool phase1) {
    int degenerate_run = 0;
    std::vector<char> banned(n_cols_, 0);  // phase-1 columns with no blocking row
    for (;;) {
      if (pivots_ >= kMaxPivots) return Outcome::IterationLimit;

      // Entering choice: Dantzig by default, Bland after a degenerate run.
      int enter = -1, dir = 0;
      if (degenerate_run < kDegenerateSwitch) {
        double best = 0.0;
        for (int j = 0; j < n_cols_; ++j) {
          if (banned[j]) continue;
          int d = direction_for(j);
          if (d == 0) continue;
          double score = std::abs(rc_[j]);
          if (score > best + 1e-15) {
            best = score;
            enter = j;
            dir = d;
          }
        }
      } else {
        for (int j = 0; j < n_cols_; ++j) {
          if (banned[j]) continue;
          int d = direction_for(j);
          if (d != 0) {
            enter = j;
            dir = d;
            break;
          }
        }
      }
      if (enter < 0) return Outcome::OptimalPhase;

      // Ratio test.
      double t_max = kInf;
      int leave_row = -1;
      bool leave_at_upper = false;
      double own_span = hi_[enter] - lo_[enter];
      bool own_flip_possible = std::isfinite(own_span) && state_[enter] != VarState::FreeZero;
      if (own_flip_possible) t_max = own_span;

      for (int r = 0; r < n_rows_; ++r) {
        double alpha = tab(r)[enter];
        if (std::abs(alpha) <= kPivotTol) continue;
        double rate = -dir * alpha;  // d beta_r / dt
        int b = basis_[r];
        double limit;
        bool hits_upper;
        if (rate > 0.0) {
          if (!std::isfinite(hi_[b])) continue;
          limit = (hi_[b] - beta_[r]) / rate;
          hits_upper = true;
        } else {
          if (!std::isfinite(lo_[b])) continue;
          limit = (beta_[r] - lo_[b]) / (-rate);
          hits_upper = false;
        }
        if (limit < 0.0) limit = 0.0;  // numerical guard on degenerate bases
        if (limit < t_max - 1e-12 ||
            (limit < t_max + 1e-12 && leave_row >= 0 && basis_[r] < basis_[leave_row])) {
          t_max = limit;
          leave_row = r;
          leave_at_upper = hits_upper;
        }
      }

      if (!std::isfinite(t_max)) {
        if (phase1) {
          // Phase 1 is bounded below by zero, so a missing blocking row is
          // accumulated round-off in this column; set it aside.
          banned[enter] = 1;
          continue;
        }
        build_ray(enter, dir);
        return Outcome::Unbounded;
      }

      pivots_++;
      if (t_max > 1e-12) std::fill(banned.begin(), banned.end(), 0);
      pivot_hash_ = pivot_hash_ * 1099511628211ULL + static_cast<uint64_t>(enter) * 2654435761ULL +
                    static_cast<uint64_t>(leave_row + 2);
      degenerate_run = (t_max <= 1e-12) ? degenerate_run + 1 : 0;

      if (leave_row < 0) {
        // Bound-to-bound flip of the entering variable.
        for (int r = 0; r < n_rows_; ++r) beta_[r] += -dir * tab(r)[enter] * t_max;
        state_[enter] = (dir > 0) ? VarState::AtUpper : VarState::AtLower;
        val_[enter] = (dir > 0) ? hi_[enter] : lo_[enter];
        continue;
      }

      // Basis change.
      double enter_val = ((state_[enter] == VarState::FreeZero) ? 0.0 : val_[enter]) + dir * t_max;
      int leave = basis_[leave_row];
      for (int r = 0; r < n_rows_; ++r)
        if (r != leave_row) beta_[r] += -dir * tab(r)[enter] * t_max;

      state_[leave] = leave_at_upper ? VarState::AtUpper : VarState::AtLower;
      val_[leave] = leave_at_upper ? hi_[leave] : lo_[leave];
      if (!std::isfinite(val_[leave])) {
        state_[leave] = VarState::FreeZero;  // free variable leaving: park at zero
        val_[leave] = 0.0;
      }

      double piv = tab(leave_row)[enter];
      double* prow = tab(leave_row);
      double inv = 1.0 / piv;
      for (int j = 0; j < n_cols_; ++j) prow[j] *= inv;
      for (int r = 0; r < n_rows_; ++r) {
        if (r == leave_row) continue;
        double factor = tab(r)[enter];
        if (factor == 0.0) continue;
        double* row = tab(r);
        for (int j = 0; j < n_cols_; ++j) row[j] -= factor * prow[j];
      }
      double rc_factor = rc_[enter];
      if (rc_factor != 0.0)
        for (int j = 0; j < n_cols_; ++j) rc_[j] -= rc_factor * prow[j];

      basis_[leave_row] = enter;
      state_[enter] = VarState::Basic;
      beta_[leave_row] = enter_val;
      rc_[enter] = 0.0;
    }
  }

  void lock_artificials() {
    for (int r = 0; r < n_rows_; ++r) {
      int a = art_col_[r];
      hi_[a] = 0.0;
      if (state_[a] != VarState::Basic) {
        state_[a] = VarState::AtLower;
        val_[a] = 0.0;
      }
    }
    // Pivot basic artificials out where the row has any usable column;
    // rows with none are redundant and keep a zero artificial basic.
    for (int r = 0; r < n_rows_; ++r) {
      if (basis_[r] < art_col_[0]) continue;  // artificials are the last column block
      int enter = -1;
      for (int j = 0; j < art_col_[0]; ++j) {
        if (state_[j] == VarState::Basic) continue;
        if (std::abs(tab(r)[j]) > kPivotTol) {
          enter = j;
          break;
        }
      }
      if (enter < 0) continue;
      int leave = basis_[r];
      double piv = tab(r)[enter];
      double* prow = tab(r);
      double inv = 1.0 / piv;
      for (int j = 0; j < n_cols_; ++j) prow[j] *= inv;
      for (int rr = 0; rr < n_rows_; ++rr) {
        if (rr == r) continue;
        double factor = tab(rr)[enter];
        if (factor == 0.0) continue;
        double* row = tab(rr);
        for (int j = 0; j < n_cols_; ++j) row[j] -= factor * prow[j];
      }
      basis_[r] = enter;
      double entering_value = val_[enter];
      state_[enter] = VarState::Basic;
      beta_[r] = entering_value;  // degenerate swap: artificial was at zero
      state_[leave] = VarState::AtLower;
      val_[leave] = 0.0;
      pivots_++;
    }
  }

  void build_ray(int enter, int dir) {
    unbounded_ray_.assign(n_struct_, 0.0);
    if (enter < n_struct_) unbounded_ray_[enter] = dir;
    for (int r = 0; r < n_rows_; ++r) {
      int b = basis_[r];
      if (b < n_struct_) unbounded_ray_[b] = -dir * tab(r)[enter];
    }
  }

  const LpProblem& prob_;
  int n_rows_ = 0, n_struct_ = 0, n_cols_ = 0;
  std::vector<double> tableau_, rhs_, beta_, val_, lo_, hi_, cost_, rc_;
  std::vector<double> art_sign_;
  std::vector<int> basis_, slack_col_, art_col_;
  std::vector<VarState> state_;
  std::vector<double> unbounded_ray_;
  long pivots_ = 0;
  uint64_t pivot_hash_ = 1469598103934665603ULL;
};

}  // namespace

LpProblem LpProblem::with_bounds(int m, double lo, double hi) {
  LpProblem p;
  p.objective.assign(m, 0.0);
  p.lower.assign(m, lo);
  p.upper.assign(m, hi);
  return p;
}

void set_lp_debug_dump(std::optional<std::string> path) {
  std::lock_guard<std::mutex> lock(g_dump_mutex);
  g_dump_path = std::move(path);
}

LpSolution solve_lp(const LpProblem& problem) {
  const int m = problem.num_vars();
  if (static_cast<int>(problem.lower.size()) != m || static_cast<int>(problem.upper.size()) != m)
    throw std::invalid_argument("solve_lp: bounds size mismatch");
  for (const auto& row : problem.constraints)
    if (static_cast<int>(row.coeffs.size()) != m)
      throw std::invalid_argument("solve_lp: constraint width mismatch");
  for (int j = 0; j < m; ++j)
    if (problem.lower[j] > problem.upper[j])
      throw std::invalid_argument("solve_lp: lower bound above upper bound");
  dump_problem(problem);

  Simplex simplex(problem);
  return simplex.run();
}

IntegralityReport check_integrality(const Dataset& dataset, const ActiveSet& active) {
  if (dataset.noise_model() != NoiseModel::NoisyInput)
    throw std::invalid_argument("check_integrality: requires the NoisyInput model");
  const int n = dataset.n();

  // Relaxed labeling problem: minimize sum_{Y=1}(1 - F_i) + sum_{Y=0} F_i
  // over F in [0,1]^n with F_i - F_j <= (number of active coordinates
  // where X_i strictly exceeds X_j), stated for every ordered pair.
  LpProblem lp = LpProblem::with_bounds(n, 0.0, 1.0);
  double constant = 0.0;
  for (int i = 0; i < n; ++i) {
    if (dataset.y(i) == 1.0) {
      lp.objective[i] = -1.0;
      constant += 1.0;
    } else {
      lp.objective[i] = 1.0;
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      int rhs = 0;
      for (int k : active.indices()) rhs += q_indicator(dataset, i, j, k);
      LpConstraint row;
      row.coeffs.assign(n, 0.0);
      row.coeffs[i] = 1.0;
      row.coeffs[j] = -1.0;
      row.rel = LpRelation::LessEqual;
      row.rhs = static_cast<double>(rhs);
      lp.constraints.push_back(std::move(row));
    }
  }

  LpSolution sol = solve_lp(lp);
  if (sol.status != LpStatus::Optimal)
    throw std::logic_error("check_integrality: relaxation should always be feasible and bounded");

  IntegralityReport report;
  report.lp_objective = sol.objective + constant;
  report.ip_objective = solve_binary_labeling(dataset, active).objective;
  report.integral = std::abs(report.lp_objective - report.ip_objective) <= 1e-7;
  return report;
}

}  // namespace siso
