#include "siso/sparse_fit.hpp"

#include <algorithm>

namespace siso {

std::string to_string(InterpolationRule r) {
  return r == InterpolationRule::Min ? "min" : "max";
}

InterpolationRule interpolation_rule_from_string(const std::string& s) {
  if (s == "min") return InterpolationRule::Min;
  if (s == "max") return InterpolationRule::Max;
  throw std::invalid_argument("unknown interpolation rule: " + s);
}

double predict(const SparseFit& fit, std::span<const double> x) {
  if (static_cast<int>(x.size()) != fit.d())
    throw std::invalid_argument("predict: point dimension does not match training features");
  const auto& active = fit.fit.active.indices();
  const int n = fit.n();

  if (fit.rule == InterpolationRule::Min) {
    // Smallest monotone value consistent with the training points below x.
    double value = 0.0;
    for (int i = 0; i < n; ++i) {
      bool below = true;
      for (int k : active) {
        if (fit.features(i, k) > x[k]) {
          below = false;
          break;
        }
      }
      if (below) value = std::max(value, fit.fit.fitted[i]);
    }
    return value;
  }
  double value = 1.0;
  for (int i = 0; i < n; ++i) {
    bool above = true;
    for (int k : active) {
      if (x[k] > fit.features(i, k)) {
        above = false;
        break;
      }
    }
    if (above) value = std::min(value, fit.fit.fitted[i]);
  }
  return value;
}

std::vector<double> predict(const SparseFit& fit, const Matrix& points) {
  std::vector<double> out;
  out.reserve(points.rows);
  for (int i = 0; i < points.rows; ++i)
    out.push_back(predict(fit, std::span<const double>(points.row(i), points.cols)));
  return out;
}

}  // namespace siso
