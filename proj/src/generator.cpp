#include "siso/generator.hpp"

#include <numeric>

namespace siso {

namespace {

void check_params(int n, int d, int s, int r, double sigma) {
  if (n < 1 || d < 1 || r < 1) throw std::invalid_argument("generator: n, d, r must be positive");
  if (s < 1 || s > d) throw std::invalid_argument("generator: need 1 <= s <= d");
  if (sigma < 0.0) throw std::invalid_argument("generator: sigma must be non-negative");
}

AnchorModel draw_model(int d, int s, int r, double sigma, NoiseModel tag, Rng& rng) {
  Matrix anchors(r, d);
  for (int j = 0; j < r; ++j)
    for (int k = 0; k < d; ++k) anchors(j, k) = rng.uniform();
  std::vector<int> active(s);
  std::iota(active.begin(), active.end(), 0);
  return AnchorModel{std::move(anchors), ActiveSet(active, d), sigma, tag};
}

Matrix draw_samples(int n, int d, Rng& rng) {
  Matrix x(n, d);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < d; ++k) x(i, k) = rng.uniform();
  return x;
}

}  // namespace

std::pair<Dataset, AnchorModel> gen_anchor_instance(int n, int d, int s, int r, double sigma,
                                                    uint64_t seed) {
  check_params(n, d, s, r, sigma);
  Rng rng(seed);
  AnchorModel model = draw_model(d, s, r, sigma, NoiseModel::NoisyOutput, rng);
  Matrix x = draw_samples(n, d, rng);
  std::vector<double> y(n);
  for (int i = 0; i < n; ++i) {
    double base = model.indicator(std::span<const double>(x.row(i), d)) ? 1.0 : 0.0;
    y[i] = base + (sigma > 0.0 ? rng.normal(0.0, sigma) : 0.0);
  }
  Dataset dataset(std::move(x), std::move(y), NoiseModel::NoisyOutput, s);
  return {std::move(dataset), std::move(model)};
}

std::pair<Dataset, AnchorModel> gen_noisy_input_instance(int n, int d, int s, int r, double sigma,
                                                         uint64_t seed) {
  check_params(n, d, s, r, sigma);
  Rng rng(seed);
  AnchorModel model = draw_model(d, s, r, sigma, NoiseModel::NoisyInput, rng);
  Matrix x = draw_samples(n, d, rng);
  std::vector<double> y(n);
  std::vector<double> perturbed(d);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < d; ++k)
      perturbed[k] = x(i, k) + (sigma > 0.0 ? rng.normal(0.0, sigma) : 0.0);
    y[i] = model.indicator(perturbed) ? 1.0 : 0.0;
  }
  Dataset dataset(std::move(x), std::move(y), NoiseModel::NoisyInput, s);
  return {std::move(dataset), std::move(model)};
}

}  // namespace siso
