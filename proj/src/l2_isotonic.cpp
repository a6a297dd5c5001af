#include <algorithm>
#include <cmath>
#include <numeric>

#include "siso/exact_solvers.hpp"
#include "siso/flow.hpp"

namespace siso {

namespace {

// Samples that dominate each other both ways must receive equal fitted
// values; they are collapsed into one weighted node up front.
struct Condensed {
  std::vector<int> rep_of;           // sample -> condensed node
  std::vector<double> value;         // weighted mean label per node
  std::vector<double> weight;        // member count per node
  std::vector<std::vector<int>> within;  // node -> member samples
  BitMatrix order;                   // dominance between condensed nodes
};

Condensed condense(const Dataset& dataset, const BitMatrix& dominance) {
  const int n = dataset.n();
  Condensed c;
  c.rep_of.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    if (c.rep_of[i] >= 0) continue;
    int id = static_cast<int>(c.within.size());
    c.within.push_back({});
    for (int j = i; j < n; ++j) {
      if (c.rep_of[j] < 0 && dominance.get(i, j) && dominance.get(j, i)) {
        c.rep_of[j] = id;
        c.within[id].push_back(j);
      }
    }
  }
  const int m = static_cast<int>(c.within.size());
  c.value.resize(m);
  c.weight.resize(m);
  for (int v = 0; v < m; ++v) {
    double sum = 0.0;
    for (int s : c.within[v]) sum += dataset.y(s);
    c.weight[v] = static_cast<double>(c.within[v].size());
    c.value[v] = sum / c.weight[v];
  }
  c.order = BitMatrix(m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (dominance.get(c.within[a][0], c.within[b][0])) c.order.set(a, b);
  return c;
}

// Finds an upper set U of the block maximizing sum of w_i (y_i - mean).
// Positive-gain nodes hang off the source, negative off the sink, and
// order arcs keep U upward closed; the minimal min-cut source side is the
// maximizer. Returns the achieved gain.
double best_upper_split(const Condensed& c, const std::vector<int>& block, double mean,
                        std::vector<int>& upper, std::vector<int>& lower) {
  const int b = static_cast<int>(block.size());
  const int source = b, sink = b + 1;
  FlowNetwork net(b + 2, source, sink);
  double positive_total = 0.0;
  double max_finite = 0.0;
  for (int t = 0; t < b; ++t) {
    double gain = c.weight[block[t]] * (c.value[block[t]] - mean);
    max_finite = std::max(max_finite, std::abs(gain));
    if (gain > 0.0) {
      net.add_arc(source, t, gain);
      positive_total += gain;
    } else if (gain < 0.0) {
      net.add_arc(t, sink, -gain);
    }
  }
  const double big = (b + 1) * std::max(1.0, max_finite);
  for (int a = 0; a < b; ++a)
    for (int t = 0; t < b; ++t)
      if (a != t && c.order.get(block[a], block[t])) net.add_arc(a, t, big);

  MaxFlowResult cut = max_flow(net);
  upper.clear();
  lower.clear();
  for (int t = 0; t < b; ++t) {
    if (cut.source_side[t])
      upper.push_back(block[t]);
    else
      lower.push_back(block[t]);
  }
  return positive_total - cut.value;
}

void refine(const Condensed& c, std::vector<int> block, std::vector<double>& out) {
  double wsum = 0.0, ysum = 0.0;
  for (int v : block) {
    wsum += c.weight[v];
    ysum += c.weight[v] * c.value[v];
  }
  const double mean = ysum / wsum;

  std::vector<int> upper, lower;
  const double gain = best_upper_split(c, block, mean, upper, lower);
  // A gain of zero certifies the block as an optimal level set (no upper
  // set sits above the mean).
  if (gain <= 1e-9 * std::max(1.0, std::abs(mean) * wsum) || upper.empty() || lower.empty()) {
    for (int v : block) out[v] = mean;
    return;
  }
  refine(c, std::move(lower), out);
  refine(c, std::move(upper), out);
}

}  // namespace

FitResult solve_l2_isotonic(const Dataset& dataset, const ActiveSet& active,
                            const BitMatrix& dominance) {
  if (dataset.noise_model() != NoiseModel::NoisyOutput)
    throw std::invalid_argument("solve_l2_isotonic: requires the NoisyOutput model");
  const int n = dataset.n();

  Condensed c = condense(dataset, dominance);
  std::vector<double> node_value(c.value.size(), 0.0);
  std::vector<int> all(c.value.size());
  std::iota(all.begin(), all.end(), 0);
  refine(c, std::move(all), node_value);

  FitResult result{std::vector<double>(n, 0.0), 0.0, active};
  for (int i = 0; i < n; ++i)
    result.fitted[i] = std::clamp(node_value[c.rep_of[i]], 0.0, 1.0);

  for (int i = 0; i < n; ++i) {
    double r = dataset.y(i) - result.fitted[i];
    result.objective += r * r;
  }

  // KKT / feasibility certificate.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (dominance.get(i, j) && result.fitted[i] > result.fitted[j] + 1e-12)
        throw std::logic_error("solve_l2_isotonic: order constraint violated");
  return result;
}

FitResult solve_l2_isotonic(const Dataset& dataset, const ActiveSet& active) {
  return solve_l2_isotonic(dataset, active,
                           build_comparability(dataset, active).dominance_matrix());
}

}  // namespace siso
