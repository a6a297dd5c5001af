// Test-only reference implementations, kept independent of the library's
// solver paths: a cyclic-projection quadratic-program solver for the
// order-constrained least-squares problem, brute-force LP vertex
// enumeration, and exhaustive min-cut search.
#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <vector>

#include "siso/comparability.hpp"
#include "siso/flow.hpp"
#include "siso/lp.hpp"
#include "siso/rng.hpp"
#include "siso/types.hpp"

namespace oracles {

/// Dykstra's alternating projections onto the half-spaces {F_i <= F_j}
/// for every dominance pair and the box [0,1]^n. Converges to the exact
/// projection of Y onto the intersection; run until the cycle moves less
/// than `tol`.
inline std::vector<double> isotonic_qp_dykstra(const siso::Dataset& dataset,
                                               const siso::ActiveSet& active,
                                               double tol = 1e-10, int max_cycles = 200000) {
  const int n = dataset.n();
  siso::BitMatrix dom = siso::build_comparability(dataset, active).dominance_matrix();
  struct Pair {
    int i, j;
  };
  std::vector<Pair> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && dom.get(i, j)) pairs.push_back({i, j});

  const int num_sets = static_cast<int>(pairs.size()) + 1;  // half-spaces + box
  std::vector<double> x(dataset.labels());
  std::vector<std::vector<double>> increments(num_sets, std::vector<double>(n, 0.0));

  for (int cycle = 0; cycle < max_cycles; ++cycle) {
    double moved = 0.0;
    for (int c = 0; c < num_sets; ++c) {
      std::vector<double> z(n);
      for (int t = 0; t < n; ++t) z[t] = x[t] + increments[c][t];
      std::vector<double> projected = z;
      if (c < static_cast<int>(pairs.size())) {
        auto [i, j] = pairs[c];
        if (z[i] > z[j]) {
          double mid = 0.5 * (z[i] + z[j]);
          projected[i] = mid;
          projected[j] = mid;
        }
      } else {
        for (int t = 0; t < n; ++t) projected[t] = std::clamp(z[t], 0.0, 1.0);
      }
      for (int t = 0; t < n; ++t) {
        increments[c][t] = z[t] - projected[t];
        moved += std::abs(projected[t] - x[t]);
        x[t] = projected[t];
      }
    }
    if (moved < tol) break;
  }
  return x;
}

/// Brute-force LP oracle: tries every choice of active constraint set
/// (rows at equality plus variables at bounds), solves the square system,
/// and keeps the best feasible point. Exponential; keep num_vars <= 6.
inline std::optional<double> lp_vertex_enumeration(const siso::LpProblem& p, double feas_tol = 1e-7) {
  const int m = p.num_vars();
  std::vector<std::vector<double>> planes;  // each: coeffs..., rhs
  for (const auto& row : p.constraints) {
    std::vector<double> plane(row.coeffs);
    plane.push_back(row.rhs);
    planes.push_back(std::move(plane));
  }
  for (int j = 0; j < m; ++j) {
    if (std::isfinite(p.lower[j])) {
      std::vector<double> plane(m, 0.0);
      plane[j] = 1.0;
      plane.push_back(p.lower[j]);
      planes.push_back(std::move(plane));
    }
    if (std::isfinite(p.upper[j])) {
      std::vector<double> plane(m, 0.0);
      plane[j] = 1.0;
      plane.push_back(p.upper[j]);
      planes.push_back(std::move(plane));
    }
  }
  const int np = static_cast<int>(planes.size());

  auto feasible = [&](const std::vector<double>& x) {
    for (const auto& row : p.constraints) {
      double lhs = 0.0;
      for (int j = 0; j < m; ++j) lhs += row.coeffs[j] * x[j];
      if (row.rel == siso::LpRelation::LessEqual && lhs > row.rhs + feas_tol) return false;
      if (row.rel == siso::LpRelation::GreaterEqual && lhs < row.rhs - feas_tol) return false;
      if (row.rel == siso::LpRelation::Equal && std::abs(lhs - row.rhs) > feas_tol) return false;
    }
    for (int j = 0; j < m; ++j)
      if (x[j] < p.lower[j] - feas_tol || x[j] > p.upper[j] + feas_tol) return false;
    return true;
  };

  std::optional<double> best;
  std::vector<int> pick(m);
  // Enumerate all m-subsets of planes.
  std::vector<int> idx(m);
  for (int t = 0; t < m; ++t) idx[t] = t;
  if (np < m) return std::nullopt;
  for (;;) {
    // Solve the m x m system via Gaussian elimination.
    std::vector<std::vector<double>> a(m, std::vector<double>(m + 1, 0.0));
    for (int r = 0; r < m; ++r) {
      for (int j = 0; j < m; ++j) a[r][j] = planes[idx[r]][j];
      a[r][m] = planes[idx[r]][m];
    }
    bool singular = false;
    for (int col = 0; col < m && !singular; ++col) {
      int piv = -1;
      double bestval = 1e-9;
      for (int r = col; r < m; ++r)
        if (std::abs(a[r][col]) > bestval) {
          bestval = std::abs(a[r][col]);
          piv = r;
        }
      if (piv < 0) {
        singular = true;
        break;
      }
      std::swap(a[col], a[piv]);
      for (int r = 0; r < m; ++r) {
        if (r == col) continue;
        double f = a[r][col] / a[col][col];
        if (f == 0.0) continue;
        for (int j = col; j <= m; ++j) a[r][j] -= f * a[col][j];
      }
    }
    if (!singular) {
      std::vector<double> x(m);
      for (int r = 0; r < m; ++r) x[r] = a[r][m] / a[r][r];
      bool ok = true;
      for (double v : x)
        if (!std::isfinite(v)) ok = false;
      if (ok && feasible(x)) {
        double obj = 0.0;
        for (int j = 0; j < m; ++j) obj += p.objective[j] * x[j];
        if (!best || obj < *best) best = obj;
      }
    }
    int t = m - 1;
    while (t >= 0 && idx[t] == np - m + t) --t;
    if (t < 0) break;
    idx[t]++;
    for (int u = t + 1; u < m; ++u) idx[u] = idx[u - 1] + 1;
  }
  return best;
}

/// Exhaustive min-cut over all 2^(n-2) partitions of the non-terminal
/// nodes; infinite-capacity arcs crossing the cut disqualify it.
inline double brute_force_min_cut(const siso::FlowNetwork& net) {
  const int n = net.num_nodes;
  std::vector<int> others;
  for (int v = 0; v < n; ++v)
    if (v != net.source && v != net.sink) others.push_back(v);
  double best = std::numeric_limits<double>::infinity();
  for (uint32_t mask = 0; mask < (1u << others.size()); ++mask) {
    std::vector<bool> source_side(n, false);
    source_side[net.source] = true;
    for (size_t t = 0; t < others.size(); ++t)
      if (mask & (1u << t)) source_side[others[t]] = true;
    double cap = 0.0;
    for (const auto& arc : net.arcs)
      if (source_side[arc.from] && !source_side[arc.to]) cap += arc.capacity;
    best = std::min(best, cap);
  }
  return best;
}

/// Uniform random dataset helper for property tests.
inline siso::Dataset random_dataset(siso::Rng& rng, int n, int d, siso::NoiseModel model) {
  siso::Matrix x(n, d);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < d; ++k) x(i, k) = rng.uniform();
  std::vector<double> y(n);
  for (int i = 0; i < n; ++i) {
    if (model == siso::NoiseModel::NoisyInput)
      y[i] = rng.uniform() < 0.5 ? 0.0 : 1.0;
    else
      y[i] = rng.uniform();
  }
  return siso::Dataset(std::move(x), std::move(y), model);
}

}  // namespace oracles
