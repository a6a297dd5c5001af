#include "siso/estimators.hpp"

#include <algorithm>
#include <cmath>

#include "siso/comparability.hpp"
#include "siso/exact_solvers.hpp"

namespace siso {

namespace {

// Lower bound on the fixed-set objective from a greedy matching of
// order-violated pairs: disjoint pairs decouple, and each pair's best
// repair cost is computable in closed form, so their sum (plus the
// per-sample box penalty for labels outside [0,1]) never exceeds the true
// optimum. Used only to prune subsets that cannot beat the incumbent.
class SubsetBound {
 public:
  explicit SubsetBound(const Dataset& dataset) : dataset_(dataset) {
    if (dataset.noise_model() == NoiseModel::NoisyOutput) {
      base_ = 0.0;
      box_cost_.resize(dataset.n());
      for (int i = 0; i < dataset.n(); ++i) {
        double y = dataset.y(i);
        double dist = y > 1.0 ? y - 1.0 : (y < 0.0 ? -y : 0.0);
        box_cost_[i] = dist * dist;
        base_ += box_cost_[i];
      }
    }
  }

  double base() const { return base_; }

  double lower_bound(const BitMatrix& dom) {
    const int n = dataset_.n();
    const bool binary = dataset_.noise_model() == NoiseModel::NoisyInput;
    pairs_.clear();
    for (int i = 0; i < n; ++i) {
      const uint64_t* row = dom.row(i);
      for (int w = 0; w < dom.words_per_row(); ++w) {
        uint64_t bits = row[w];
        while (bits) {
          int j = (w << 6) + __builtin_ctzll(bits);
          bits &= bits - 1;
          if (j == i) continue;
          double yi = dataset_.y(i), yj = dataset_.y(j);
          if (!(yi > yj)) continue;
          double extra;
          if (binary) {
            extra = (yi == 1.0 && yj == 0.0) ? 1.0 : 0.0;
          } else {
            // i precedes j, so the pair's values must satisfy a <= b; the
            // best repair pools at the clipped midpoint.
            double mid = std::clamp(0.5 * (yi + yj), 0.0, 1.0);
            double cost = (yi - mid) * (yi - mid) + (yj - mid) * (yj - mid);
            extra = cost - box_cost_[i] - box_cost_[j];
          }
          if (extra > 1e-15) pairs_.push_back({extra, i, j});
        }
      }
    }
    std::sort(pairs_.begin(), pairs_.end(), [](const Violation& a, const Violation& b) {
      if (a.extra != b.extra) return a.extra > b.extra;
      if (a.i != b.i) return a.i < b.i;
      return a.j < b.j;
    });
    used_.assign(n, false);
    double bound = base_;
    for (const auto& p : pairs_) {
      if (used_[p.i] || used_[p.j]) continue;
      used_[p.i] = used_[p.j] = true;
      bound += p.extra;
    }
    return bound;
  }

 private:
  struct Violation {
    double extra;
    int i, j;
  };

  const Dataset& dataset_;
  double base_ = 0.0;
  std::vector<double> box_cost_;
  std::vector<Violation> pairs_;
  std::vector<bool> used_;
};

uint64_t subset_count(int d, int s) {
  uint64_t count = 1;
  for (int t = 0; t < s; ++t) {
    count = count * static_cast<uint64_t>(d - t) / static_cast<uint64_t>(t + 1);
    if (count > 100000000ULL) return count;  // early out; caller checks the limit
  }
  return count;
}

bool contains_excluded_pair(const std::vector<int>& subset, const RecoveryConfig& config) {
  for (auto [a, b] : config.exclusion_pairs) {
    bool has_a = std::binary_search(subset.begin(), subset.end(), a);
    if (has_a && std::binary_search(subset.begin(), subset.end(), b)) return true;
  }
  return false;
}

}  // namespace

FitResult solve_fixed_active_set(const Dataset& dataset, const ActiveSet& active) {
  if (dataset.noise_model() == NoiseModel::NoisyInput)
    return solve_binary_labeling(dataset, active);
  return solve_l2_isotonic(dataset, active);
}

SparseFit ipir_fit(const Dataset& dataset, int s, InterpolationRule rule,
                   const RecoveryConfig& exclusions) {
  const int d = dataset.d();
  if (s < 1 || s > d) throw std::invalid_argument("ipir_fit: s must satisfy 1 <= s <= d");
  exclusions.validate(d);
  if (subset_count(d, s) > 1000000ULL)
    throw resource_limit_error("ipir_fit: more than 10^6 active sets of size s; refusing");

  const bool binary = dataset.noise_model() == NoiseModel::NoisyInput;
  CoordLeqCache cache(dataset);
  SubsetBound bound(dataset);

  std::vector<int> subset(s);
  for (int t = 0; t < s; ++t) subset[t] = t;

  bool have_best = false;
  double best_obj = 0.0;
  FitResult best{{}, 0.0, ActiveSet(subset, d)};

  for (;;) {
    if (!contains_excluded_pair(subset, exclusions)) {
      BitMatrix dom = cache.dominance_for(subset);
      // Pruned subsets satisfy lb > incumbent, so they can neither improve
      // nor tie; the surviving search is still exact.
      if (!have_best || bound.lower_bound(dom) <= best_obj + 1e-12) {
        ActiveSet active(subset, d);
        FitResult fit = binary ? solve_binary_labeling(dataset, active, dom)
                               : solve_l2_isotonic(dataset, active, dom);
        // Strict improvement only: the lexicographically first optimum wins.
        if (!have_best || fit.objective < best_obj) {
          have_best = true;
          best_obj = fit.objective;
          best = std::move(fit);
        }
      }
    }
    // Advance to the next size-s subset in lexicographic order.
    int t = s - 1;
    while (t >= 0 && subset[t] == d - s + t) --t;
    if (t < 0) break;
    subset[t]++;
    for (int u = t + 1; u < s; ++u) subset[u] = subset[u - 1] + 1;
  }
  if (!have_best)
    throw std::invalid_argument("ipir_fit: every size-s subset contains an excluded pair");

  return SparseFit{std::move(best), rule, dataset.features()};
}

SparseFit tsir_fit(const Dataset& dataset, int s, const RecoveryConfig& recovery,
                   InterpolationRule rule) {
  ActiveSet recovered = recovery.method == RecoveryMethod::Lpsr
                            ? lpsr(dataset, s)
                            : slpsr(dataset, s, recovery);
  FitResult fit = solve_fixed_active_set(dataset, recovered);
  return SparseFit{std::move(fit), rule, dataset.features()};
}

}  // namespace siso
