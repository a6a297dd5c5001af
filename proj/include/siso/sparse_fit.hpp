#pragma once

#include <span>

#include "siso/types.hpp"

namespace siso {

/// How fitted training values extend to the rest of the space. Min takes
/// the tightest monotone lower envelope (the largest fitted value among
/// training points the query dominates, or 0 when it dominates none);
/// Max takes the upper envelope (smallest fitted value among training
/// points dominating the query, or 1 when none do).
enum class InterpolationRule { Min, Max };

std::string to_string(InterpolationRule r);
InterpolationRule interpolation_rule_from_string(const std::string& s);

/// A fitted sparse monotone estimator: fitted values on the training
/// points plus the interpolation rule, retaining the training features so
/// the estimator is callable anywhere.
struct SparseFit {
  FitResult fit;
  InterpolationRule rule = InterpolationRule::Min;
  Matrix features;  // n x d training features

  int n() const { return features.rows; }
  int d() const { return features.cols; }
};

/// Evaluates the estimator at x (length-d vector). Only the active
/// coordinates of x matter.
double predict(const SparseFit& fit, std::span<const double> x);

/// Batch version.
std::vector<double> predict(const SparseFit& fit, const Matrix& points);

}  // namespace siso
