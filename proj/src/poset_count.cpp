#include "siso/poset_count.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "siso/rng.hpp"

namespace siso {

PointPoset::PointPoset(Matrix points) : points_(std::move(points)) {
  const int n = points_.rows, d = points_.cols;
  if (n < 1 || d < 1) throw std::invalid_argument("PointPoset: need n >= 1, d >= 1");
  if (n > 30) throw resource_limit_error("PointPoset: refusing n > 30");
  leq_ = BitMatrix(n);
  up_.assign(n, 0);
  down_.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      bool le = true;
      for (int k = 0; k < d; ++k) {
        if (points_(i, k) > points_(j, k)) {
          le = false;
          break;
        }
      }
      if (le) {
        leq_.set(i, j);
        up_[i] |= 1u << j;
        down_[j] |= 1u << i;
      }
    }
  }
}

namespace {

class IdealCounter {
 public:
  explicit IdealCounter(const PointPoset& poset) : poset_(poset) {}

  uint64_t count(uint32_t mask) {
    if (mask == 0) return 1;
    auto it = memo_.find(mask);
    if (it != memo_.end()) return it->second;

    // Pivot on the element whose up-set plus down-set removes the most.
    int pivot = -1, best = -1;
    uint32_t rest = mask;
    while (rest) {
      int i = __builtin_ctz(rest);
      rest &= rest - 1;
      int removed = __builtin_popcount((poset_.up_mask(i) | poset_.down_mask(i)) & mask);
      if (removed > best) {
        best = removed;
        pivot = i;
      }
    }
    uint64_t total = count(mask & ~(poset_.up_mask(pivot) & mask)) +
                     count(mask & ~(poset_.down_mask(pivot) & mask));
    memo_.emplace(mask, total);
    return total;
  }

 private:
  const PointPoset& poset_;
  std::unordered_map<uint32_t, uint64_t> memo_;
};

}  // namespace

LabelingCount count_binary_labelings(const PointPoset& poset) {
  IdealCounter counter(poset);
  uint32_t full = poset.n() == 32 ? 0xFFFFFFFFu : ((1u << poset.n()) - 1);
  return LabelingCount{2, BigInt(counter.count(full))};
}

LabelingCount count_binary_labelings_naive(const PointPoset& poset) {
  const int n = poset.n();
  if (n > 20) throw resource_limit_error("count_binary_labelings_naive: refusing n > 20");
  uint64_t count = 0;
  const uint32_t full = (1u << n) - 1;
  for (uint32_t mask = 0;; ++mask) {
    bool ideal = true;
    uint32_t rest = mask;
    while (rest) {
      int i = __builtin_ctz(rest);
      rest &= rest - 1;
      if ((poset.down_mask(i) & ~mask) != 0) {
        ideal = false;
        break;
      }
    }
    if (ideal) count++;
    if (mask == full) break;
  }
  return LabelingCount{2, BigInt(count)};
}

namespace {

constexpr size_t kMaxIdeals = 200000;
constexpr uint64_t kMaxLatticeWork = 400000000ULL;

void enumerate_ideals(const PointPoset& poset, const std::vector<int>& topo, size_t idx,
                      uint32_t current, std::vector<uint32_t>& out) {
  if (idx == topo.size()) {
    out.push_back(current);
    if (out.size() > kMaxIdeals)
      throw resource_limit_error("count_m_labelings: ideal lattice too large");
    return;
  }
  int e = topo[idx];
  enumerate_ideals(poset, topo, idx + 1, current, out);
  // e can join only if everything below it is already in.
  uint32_t below = poset.down_mask(e) & ~(1u << e);
  if ((below & ~current) == 0)
    enumerate_ideals(poset, topo, idx + 1, current | (1u << e), out);
}

}  // namespace

LabelingCount count_m_labelings(const PointPoset& poset, int m) {
  if (m < 1 || m > 6) throw std::invalid_argument("count_m_labelings: need 1 <= m <= 6");
  if (poset.n() > 20) throw resource_limit_error("count_m_labelings: refusing n > 20");
  if (m == 1) return LabelingCount{1, BigInt(1)};

  // Duplicate points (equal both ways) must share a value; counting on one
  // representative per class is equivalent.
  PointPoset condensed = [&] {
    std::vector<int> reps;
    for (int i = 0; i < poset.n(); ++i) {
      bool dup = false;
      for (int r : reps)
        if (poset.leq(i, r) && poset.leq(r, i)) dup = true;
      if (!dup) reps.push_back(i);
    }
    Matrix pts(static_cast<int>(reps.size()), poset.d());
    for (size_t t = 0; t < reps.size(); ++t)
      for (int k = 0; k < poset.d(); ++k) pts(static_cast<int>(t), k) = poset.points()(reps[t], k);
    return PointPoset(std::move(pts));
  }();

  // Topological order by down-set size, ties by index.
  std::vector<int> topo(condensed.n());
  for (int i = 0; i < condensed.n(); ++i) topo[i] = i;
  std::stable_sort(topo.begin(), topo.end(), [&](int a, int b) {
    return __builtin_popcount(condensed.down_mask(a)) < __builtin_popcount(condensed.down_mask(b));
  });

  std::vector<uint32_t> ideals;
  enumerate_ideals(condensed, topo, 0, 0, ideals);
  std::sort(ideals.begin(), ideals.end(), [](uint32_t a, uint32_t b) {
    int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
    return pa != pb ? pa < pb : a < b;
  });

  const size_t num = ideals.size();
  const uint64_t work = static_cast<uint64_t>(num) * num * (m - 2 > 0 ? m - 2 : 0);
  if (work > kMaxLatticeWork)
    throw resource_limit_error("count_m_labelings: lattice DP too large");

  // A monotone map into {1..m} is a chain of m-1 nested ideals
  // (threshold sets). With the counts guarded above, u64 cannot overflow:
  // the result is at most m^n <= 6^20.
  std::vector<uint64_t> level(num, 1);
  for (int t = 2; t <= m - 1; ++t) {
    std::vector<uint64_t> next(num, 0);
    for (size_t a = 0; a < num; ++a) {
      uint64_t acc = 0;
      for (size_t b = 0; b <= a; ++b)
        if ((ideals[b] & ~ideals[a]) == 0) acc += level[b];
      next[a] = acc;
    }
    level.swap(next);
  }
  uint64_t total = 0;
  for (uint64_t v : level) total += v;
  return LabelingCount{m, BigInt(total)};
}

LabelingBoundsResult empirical_labeling_bounds(int n, int d, int trials, uint64_t seed) {
  if (n < 1 || n > 16) throw resource_limit_error("empirical_labeling_bounds: need 1 <= n <= 16");
  if (d < 2 || d > 4) throw std::invalid_argument("empirical_labeling_bounds: need d in {2,3,4}");
  if (trials < 1) throw std::invalid_argument("empirical_labeling_bounds: trials must be >= 1");

  double sum = 0.0;
  for (int t = 0; t < trials; ++t) {
    Rng rng = Rng::stream(seed, static_cast<uint64_t>(t));
    Matrix pts(n, d);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < d; ++k) pts(i, k) = rng.uniform();
    PointPoset poset(std::move(pts));
    sum += static_cast<double>(count_binary_labelings(poset).count);
  }

  LabelingBoundsResult out;
  out.mean_count = sum / trials;
  double factorial = 1.0;
  for (int t = 2; t <= d - 1; ++t) factorial *= t;
  const double n_pow = std::pow(static_cast<double>(n), static_cast<double>(d - 1) / d);
  out.lower_bound = std::exp(std::log(2.0) * (1.0 - std::exp(-1.0)) / factorial * n_pow);
  out.upper_bound = std::exp((std::pow(2.0, d) + 2.0 * std::log(2.0) - 1.0) * n_pow);
  out.within = out.mean_count >= out.lower_bound && out.mean_count <= out.upper_bound;
  return out;
}

}  // namespace siso
