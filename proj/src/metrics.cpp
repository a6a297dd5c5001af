#include "siso/metrics.hpp"

#include <cmath>

namespace siso {

namespace {

McEstimate mean_with_se(double sum, double sum_sq, int n) {
  McEstimate est;
  est.value = sum / n;
  double var = std::max(0.0, sum_sq / n - est.value * est.value);
  est.std_error = std::sqrt(var / n);
  return est;
}

void require_binary_fit(const SparseFit& fit, const char* who) {
  for (double v : fit.fit.fitted)
    if (v != 0.0 && v != 1.0)
      throw std::invalid_argument(std::string(who) + ": fit must be binary-valued");
}

}  // namespace

McEstimate l2_error_mc(const SparseFit& fit, const AnchorModel& truth, int n_mc, uint64_t seed) {
  if (n_mc < 1) throw std::invalid_argument("l2_error_mc: n_mc must be >= 1");
  if (fit.d() != truth.d()) throw std::invalid_argument("l2_error_mc: dimension mismatch");
  Rng rng(seed);
  const int d = fit.d();
  std::vector<double> x(d);
  double sum = 0.0, sum_sq = 0.0;
  for (int t = 0; t < n_mc; ++t) {
    for (int k = 0; k < d; ++k) x[k] = rng.uniform();
    double gap = predict(fit, x) - (truth.indicator(x) ? 1.0 : 0.0);
    double sq = gap * gap;
    sum += sq;
    sum_sq += sq * sq;
  }
  McEstimate mean = mean_with_se(sum, sum_sq, n_mc);
  McEstimate out;
  out.value = std::sqrt(mean.value);
  out.std_error = mean.value > 0.0 ? mean.std_error / (2.0 * out.value) : 0.0;
  return out;
}

McEstimate discrepancy_mc(const SparseFit& fit_a, const SparseFit& fit_b, int n_mc,
                          uint64_t seed) {
  if (n_mc < 1) throw std::invalid_argument("discrepancy_mc: n_mc must be >= 1");
  if (fit_a.d() != fit_b.d()) throw std::invalid_argument("discrepancy_mc: dimension mismatch");
  require_binary_fit(fit_a, "discrepancy_mc");
  require_binary_fit(fit_b, "discrepancy_mc");
  Rng rng(seed);
  const int d = fit_a.d();
  std::vector<double> x(d);
  double sum = 0.0;
  for (int t = 0; t < n_mc; ++t) {
    for (int k = 0; k < d; ++k) x[k] = rng.uniform();
    if (predict(fit_a, x) != predict(fit_b, x)) sum += 1.0;
  }
  return mean_with_se(sum, sum, n_mc);  // indicator: square equals itself
}

McEstimate misclassification_q_mc(const SparseFit& fit, const AnchorModel& truth, int n_mc,
                                  uint64_t seed) {
  if (n_mc < 1) throw std::invalid_argument("misclassification_q_mc: n_mc must be >= 1");
  if (truth.model != NoiseModel::NoisyInput)
    throw std::invalid_argument("misclassification_q_mc: requires a NoisyInput model");
  if (fit.d() != truth.d()) throw std::invalid_argument("misclassification_q_mc: dimension mismatch");
  require_binary_fit(fit, "misclassification_q_mc");
  Rng rng(seed);
  const int d = fit.d();
  std::vector<double> x(d), shifted(d);
  double sum = 0.0;
  for (int t = 0; t < n_mc; ++t) {
    for (int k = 0; k < d; ++k) {
      x[k] = rng.uniform();
      shifted[k] = x[k] + (truth.noise_sigma > 0.0 ? rng.normal(0.0, truth.noise_sigma) : 0.0);
    }
    double label = truth.indicator(shifted) ? 1.0 : 0.0;
    if (predict(fit, x) != label) sum += 1.0;
  }
  return mean_with_se(sum, sum, n_mc);
}

McEstimate estimate_gap_pk(const AnchorModel& model, int k, int n_pairs, uint64_t seed) {
  if (n_pairs < 1) throw std::invalid_argument("estimate_gap_pk: n_pairs must be >= 1");
  if (k < 0 || k >= model.d()) throw std::invalid_argument("estimate_gap_pk: coordinate out of range");
  Rng rng(seed);
  const int d = model.d();
  std::vector<double> x1(d), x2(d), z1(d), z2(d);
  double sum = 0.0, sum_sq = 0.0;
  for (int t = 0; t < n_pairs; ++t) {
    // Rejection sampling conditions on the pair ordering exactly.
    do {
      for (int c = 0; c < d; ++c) x1[c] = rng.uniform();
      for (int c = 0; c < d; ++c) x2[c] = rng.uniform();
    } while (!(x1[k] > x2[k]));

    double y1, y2;
    if (model.model == NoiseModel::NoisyOutput) {
      y1 = (model.indicator(x1) ? 1.0 : 0.0) + (model.noise_sigma > 0.0 ? rng.normal(0.0, model.noise_sigma) : 0.0);
      y2 = (model.indicator(x2) ? 1.0 : 0.0) + (model.noise_sigma > 0.0 ? rng.normal(0.0, model.noise_sigma) : 0.0);
    } else {
      for (int c = 0; c < d; ++c) {
        z1[c] = x1[c] + (model.noise_sigma > 0.0 ? rng.normal(0.0, model.noise_sigma) : 0.0);
        z2[c] = x2[c] + (model.noise_sigma > 0.0 ? rng.normal(0.0, model.noise_sigma) : 0.0);
      }
      y1 = model.indicator(z1) ? 1.0 : 0.0;
      y2 = model.indicator(z2) ? 1.0 : 0.0;
    }
    double g = y1 > y2 ? 1.0 : (y1 < y2 ? -1.0 : 0.0);
    sum += g;
    sum_sq += g * g;
  }
  return mean_with_se(sum, sum_sq, n_pairs);
}

}  // namespace siso
