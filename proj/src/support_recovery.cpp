#include "siso/support_recovery.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <unordered_map>

namespace siso {

std::string to_string(RecoveryMethod m) {
  switch (m) {
    case RecoveryMethod::Ipir: return "ipir";
    case RecoveryMethod::Lpsr: return "lpsr";
    case RecoveryMethod::Slpsr: return "slpsr";
  }
  return "?";
}

void RecoveryConfig::validate(int dimension) const {
  for (auto [a, b] : exclusion_pairs) {
    if (a < 0 || b < 0 || a >= dimension || b >= dimension)
      throw std::invalid_argument("RecoveryConfig: exclusion index out of range");
    if (a == b) throw std::invalid_argument("RecoveryConfig: exclusion pair must join two distinct coordinates");
  }
}

std::vector<int> RecoveryConfig::partners_of(int k) const {
  std::vector<int> out;
  for (auto [a, b] : exclusion_pairs) {
    if (a == k) out.push_back(b);
    if (b == k) out.push_back(a);
  }
  return out;
}

namespace detail {

ViolationPatterns build_violation_patterns(const Dataset& dataset, int sample_begin,
                                           int sample_end) {
  const int d = dataset.d();
  ViolationPatterns patterns;
  patterns.d = d;

  std::unordered_map<std::string, int> index;
  std::vector<int> buf;
  std::string key;
  for (int i = sample_begin; i < sample_end; ++i) {
    for (int j = sample_begin; j < sample_end; ++j) {
      if (i == j || !(dataset.y(i) > dataset.y(j))) continue;
      buf.clear();
      for (int k = 0; k < d; ++k)
        if (dataset.x(i, k) > dataset.x(j, k)) buf.push_back(k);
      if (buf.empty()) continue;  // X_i <= X_j everywhere: no constraint
      key.assign(reinterpret_cast<const char*>(buf.data()), buf.size() * sizeof(int));
      auto [it, inserted] = index.try_emplace(key, static_cast<int>(patterns.coords.size()));
      if (inserted) {
        patterns.coords.push_back(buf);
        patterns.weight.push_back(1.0);
      } else {
        patterns.weight[it->second] += 1.0;
      }
    }
  }
  return patterns;
}

ViolationPatterns build_violation_patterns(const Dataset& dataset) {
  return build_violation_patterns(dataset, 0, dataset.n());
}

double correction_mass(const ViolationPatterns& patterns, const std::vector<double>& v,
                       std::vector<double>* subgradient) {
  if (subgradient) subgradient->assign(patterns.d, 0.0);
  double total = 0.0;
  for (size_t p = 0; p < patterns.coords.size(); ++p) {
    double cover = 0.0;
    for (int k : patterns.coords[p]) cover += v[k];
    double deficit = 1.0 - cover;
    if (deficit > 0.0) {
      total += patterns.weight[p] * deficit;
      if (subgradient)
        for (int k : patterns.coords[p]) (*subgradient)[k] -= patterns.weight[p];
    }
  }
  return total;
}

CorrectionLpResult minimize_correction_mass(const ViolationPatterns& patterns_in, int s,
                                            const std::vector<char>& pinned) {
  // The one-shot program over (v, c) projects down to
  //   min_v  sum_pi w_pi * max(0, 1 - pi.v)   over  {sum v = s, 0 <= v <= 1}
  // because each pair's optimal correction is exactly its coverage
  // deficit. That projected LP has one row per pattern, far too many for
  // a dense tableau at production sizes, but its dual has only d rows:
  //   max  sum_pi a_pi + s*b - sum_k g_k
  //   s.t. sum_{pi containing k} a_pi + b - g_k <= 0      (one row per k)
  //        0 <= a_pi <= w_pi,  g_k >= 0,  b free,
  // with the pattern caps living in the variable bounds. We solve that
  // dual with solve_lp and read v off the row duals.
  //
  // Weights are normalized to total one first; they grow like n^2 and
  // would otherwise feed a badly scaled tableau. The minimizer is
  // unchanged and the objective is scaled back on return.
  ViolationPatterns patterns = patterns_in;
  double weight_total = 0.0;
  for (double w : patterns.weight) weight_total += w;
  if (weight_total > 0.0)
    for (double& w : patterns.weight) w /= weight_total;

  const int d = patterns.d;
  std::vector<int> free_coords;
  for (int k = 0; k < d; ++k)
    if (!pinned[k]) free_coords.push_back(k);
  const int free_dim = static_cast<int>(free_coords.size());
  if (free_dim < s) throw std::invalid_argument("support recovery: fewer selectable coordinates than s");

  const int num_patterns = static_cast<int>(patterns.coords.size());
  const double inf = std::numeric_limits<double>::infinity();

  // Variables: a_1..a_P, b, g_1..g_d. Pinned coordinates keep their rows
  // (with v_k = 0 the dual constraint for k is slack via g_k), so the row
  // duals of pinned coordinates are not meaningful and are zeroed below.
  const int nv = num_patterns + 1 + d;
  LpProblem dual = LpProblem::with_bounds(nv, 0.0, inf);
  for (int p = 0; p < num_patterns; ++p) dual.upper[p] = patterns.weight[p];
  dual.lower[num_patterns] = -inf;  // b free
  for (int p = 0; p < num_patterns; ++p) dual.objective[p] = -1.0;
  dual.objective[num_patterns] = -static_cast<double>(s);
  for (int k = 0; k < d; ++k) dual.objective[num_patterns + 1 + k] = 1.0;

  std::vector<std::vector<int>> patterns_at(d);
  for (int p = 0; p < num_patterns; ++p)
    for (int k : patterns.coords[p]) patterns_at[k].push_back(p);

  for (int k = 0; k < d; ++k) {
    if (pinned[k]) continue;  // pinned v_k = 0: drop its dual row entirely
    LpConstraint row;
    row.coeffs.assign(nv, 0.0);
    for (int p : patterns_at[k]) row.coeffs[p] = 1.0;
    row.coeffs[num_patterns] = 1.0;
    row.coeffs[num_patterns + 1 + k] = -1.0;
    row.rel = LpRelation::LessEqual;
    row.rhs = 0.0;
    dual.constraints.push_back(std::move(row));
  }

  LpSolution sol = solve_lp(dual);
  if (sol.status != LpStatus::Optimal)
    throw std::logic_error("support recovery: dual LP must be solvable");

  CorrectionLpResult result;
  result.v.assign(d, 0.0);
  int row = 0;
  double total = 0.0;
  for (int k = 0; k < d; ++k) {
    if (pinned[k]) continue;
    double vk = -sol.row_duals[row++];
    if (vk < -1e-6 || vk > 1.0 + 1e-6)
      throw std::logic_error("support recovery: recovered point out of bounds");
    result.v[k] = std::clamp(vk, 0.0, 1.0);
    total += result.v[k];
  }
  if (std::abs(total - s) > 1e-5)
    throw std::logic_error("support recovery: recovered point off the simplex");
  result.objective = -sol.objective * (weight_total > 0.0 ? weight_total : 1.0);

  // Cross-check: the recovered v must achieve the LP optimum.
  double direct = correction_mass(patterns_in, result.v, nullptr);
  if (std::abs(direct - result.objective) > 1e-6 * std::max(1.0, std::abs(result.objective)) + 1e-6)
    throw std::logic_error("support recovery: primal/dual objective mismatch");
  result.objective = direct;
  return result;
}

CorrectionLpResult minimize_correction_mass_literal(const ViolationPatterns& patterns, int s,
                                                    const std::vector<char>& pinned) {
  const int d = patterns.d;
  int free_dim = 0;
  for (int k = 0; k < d; ++k)
    if (!pinned[k]) free_dim++;
  if (free_dim < s) throw std::invalid_argument("support recovery: fewer selectable coordinates than s");

  // Variables: v_1..v_d then one correction variable per (pattern, member
  // coordinate); corrections on coordinates the pair does not strictly
  // exceed are provably zero at the optimum and are omitted.
  int nc = 0;
  for (const auto& pi : patterns.coords) nc += static_cast<int>(pi.size());
  const int nv = d + nc;
  LpProblem lp = LpProblem::with_bounds(nv, 0.0, std::numeric_limits<double>::infinity());
  for (int k = 0; k < d; ++k) {
    lp.upper[k] = pinned[k] ? 0.0 : 1.0;
    lp.objective[k] = 0.0;
  }
  int c0 = d;
  for (size_t p = 0; p < patterns.coords.size(); ++p) {
    for (size_t t = 0; t < patterns.coords[p].size(); ++t)
      lp.objective[c0 + static_cast<int>(t)] = patterns.weight[p];
    LpConstraint row;
    row.coeffs.assign(nv, 0.0);
    for (size_t t = 0; t < patterns.coords[p].size(); ++t) {
      row.coeffs[patterns.coords[p][t]] = 1.0;
      row.coeffs[c0 + static_cast<int>(t)] = 1.0;
    }
    row.rel = LpRelation::GreaterEqual;
    row.rhs = 1.0;
    lp.constraints.push_back(std::move(row));
    c0 += static_cast<int>(patterns.coords[p].size());
  }
  {
    LpConstraint sum_row;
    sum_row.coeffs.assign(nv, 0.0);
    for (int k = 0; k < d; ++k) sum_row.coeffs[k] = 1.0;
    sum_row.rel = LpRelation::Equal;
    sum_row.rhs = static_cast<double>(s);
    lp.constraints.push_back(std::move(sum_row));
  }

  LpSolution sol = solve_lp(lp);
  if (sol.status != LpStatus::Optimal)
    throw std::logic_error("support recovery: literal LP must be solvable");
  CorrectionLpResult result;
  result.v.assign(sol.x.begin(), sol.x.begin() + d);
  result.objective = sol.objective;

  return result;
}

std::vector<int> select_top_coordinates(const std::vector<double>& v, int s) {
  std::vector<int> order(v.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return v[a] > v[b]; });
  order.resize(s);
  std::sort(order.begin(), order.end());
  return order;
}

}  // namespace detail

namespace {

ActiveSet recover(const Dataset& dataset, int s, const std::vector<char>& pinned_init,
                  const RecoveryConfig* config) {
  const int d = dataset.d();
  if (s < 1 || s > d) throw std::invalid_argument("support recovery: s must satisfy 1 <= s <= d");

  if (config == nullptr) {
    // One-shot LPSR.
    auto patterns = detail::build_violation_patterns(dataset);
    std::vector<char> pinned(d, 0);
    if (patterns.empty()) {
      std::vector<int> first(s);
      std::iota(first.begin(), first.end(), 0);
      return ActiveSet(first, d);
    }
    auto lp = detail::minimize_correction_mass(patterns, s, pinned);
    return ActiveSet(detail::select_top_coordinates(lp.v, s), d);
  }

  // Sequential S-LPSR.
  config->validate(d);
  std::vector<char> pinned = pinned_init;
  std::vector<int> chosen;
  const int n = dataset.n();
  for (int round = 0; round < s; ++round) {
    int selectable = 0;
    for (int k = 0; k < d; ++k)
      if (!pinned[k]) selectable++;
    if (selectable < 1)
      throw std::invalid_argument("slpsr: fewer than s selectable coordinates remain after exclusions");

    detail::ViolationPatterns patterns;
    if (config->fresh_split) {
      int begin = round * n / s, end = (round + 1) * n / s;
      patterns = detail::build_violation_patterns(dataset, begin, end);
    } else {
      patterns = detail::build_violation_patterns(dataset);
    }

    int pick;
    if (patterns.empty()) {
      pick = -1;
      for (int k = 0; k < d; ++k)
        if (!pinned[k]) {
          pick = k;
          break;
        }
    } else {
      auto lp = detail::minimize_correction_mass(patterns, 1, pinned);
      pick = detail::select_top_coordinates(lp.v, 1)[0];
    }
    chosen.push_back(pick);
    pinned[pick] = 1;
    for (int partner : config->partners_of(pick)) pinned[partner] = 1;
  }
  return ActiveSet(chosen, d);
}

}  // namespace

ActiveSet lpsr(const Dataset& dataset, int s) { return recover(dataset, s, {}, nullptr); }

ActiveSet slpsr(const Dataset& dataset, int s, const RecoveryConfig& config) {
  return recover(dataset, s, std::vector<char>(dataset.d(), 0), &config);
}

}  // namespace siso
