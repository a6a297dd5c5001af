#include <algorithm>
#include <cmath>

#include "siso/exact_solvers.hpp"
#include "siso/flow.hpp"

namespace siso {

namespace {

void require_noisy_input(const Dataset& dataset, const char* who) {
  if (dataset.noise_model() != NoiseModel::NoisyInput)
    throw std::invalid_argument(std::string(who) + ": requires the NoisyInput model");
}

}  // namespace

FitResult solve_binary_labeling(const Dataset& dataset, const ActiveSet& active,
                                const BitMatrix& dominance) {
  require_noisy_input(dataset, "solve_binary_labeling");
  const int n = dataset.n();

  // Nodes 0..n-1 are samples; n is the source, n+1 the sink. A labeling is
  // monotone iff its 1-set is upward closed, which the big arcs enforce:
  // cutting i -> j for i <= j would cost more than any labeling. Unit
  // source/sink arcs price the misclassifications.
  const int source = n, sink = n + 1;
  FlowNetwork net(n + 2, source, sink);
  const double big = static_cast<double>(n + 1);  // (n+1) x max finite capacity
  for (int i = 0; i < n; ++i) {
    if (dataset.y(i) == 1.0)
      net.add_arc(source, i, 1.0);
    else
      net.add_arc(i, sink, 1.0);
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && dominance.get(i, j)) net.add_arc(i, j, big);

  MaxFlowResult cut = max_flow(net);

  FitResult result{std::vector<double>(n, 0.0), 0.0, active};
  for (int i = 0; i < n; ++i)
    if (cut.source_side[i]) result.fitted[i] = 1.0;

  // The flow value equals the misclassification count; recount from the
  // labels to return an exact integer-valued objective.
  double errors = 0.0;
  for (int i = 0; i < n; ++i)
    if (result.fitted[i] != dataset.y(i)) errors += 1.0;
  if (std::abs(errors - cut.value) > 1e-6)
    throw std::logic_error("solve_binary_labeling: cut value does not match recounted errors");
  result.objective = errors;
  return result;
}

FitResult solve_binary_labeling(const Dataset& dataset, const ActiveSet& active) {
  require_noisy_input(dataset, "solve_binary_labeling");
  return solve_binary_labeling(dataset, active,
                               build_comparability(dataset, active).dominance_matrix());
}

FitResult brute_force_binary(const Dataset& dataset, const ActiveSet& active) {
  require_noisy_input(dataset, "brute_force_binary");
  const int n = dataset.n();
  if (n > 20) throw resource_limit_error("brute_force_binary: refusing n > 20");

  BitMatrix dom = build_comparability(dataset, active).dominance_matrix();
  // up[i]: mask of samples j with X_i <=_A X_j.
  std::vector<uint32_t> up(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (dom.get(i, j)) up[i] |= 1u << j;

  uint32_t label_mask = 0;
  for (int i = 0; i < n; ++i)
    if (dataset.y(i) == 1.0) label_mask |= 1u << i;

  int best_err = n + 1;
  int best_ones = n + 1;
  uint32_t best = 0;
  const uint32_t full = (n == 32) ? 0xFFFFFFFFu : ((1u << n) - 1);
  for (uint32_t mask = 0; ; ++mask) {
    // Monotone iff the 1-set is upward closed.
    bool ok = true;
    uint32_t rest = mask;
    while (rest) {
      int i = __builtin_ctz(rest);
      rest &= rest - 1;
      if ((up[i] & ~mask) != 0) {
        ok = false;
        break;
      }
    }
    if (ok) {
      int err = __builtin_popcount(mask ^ label_mask);
      int ones = __builtin_popcount(mask);
      if (err < best_err || (err == best_err && ones < best_ones)) {
        best_err = err;
        best_ones = ones;
        best = mask;
      }
    }
    if (mask == full) break;
  }

  FitResult result{std::vector<double>(n, 0.0), static_cast<double>(best_err), active};
  for (int i = 0; i < n; ++i)
    if (best & (1u << i)) result.fitted[i] = 1.0;
  return result;
}

}  // namespace siso
