#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace siso {

/// Thrown when a size guard refuses an oversized request (CLI exit code 3).
class resource_limit_error : public std::runtime_error {
 public:
  explicit resource_limit_error(const std::string& what) : std::runtime_error(what) {}
};

/// Dense row-major matrix of doubles.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(int r, int c, double fill = 0.0) : rows(r), cols(c), data(static_cast<size_t>(r) * c, fill) {}

  double& operator()(int i, int j) { return data[static_cast<size_t>(i) * cols + j]; }
  double operator()(int i, int j) const { return data[static_cast<size_t>(i) * cols + j]; }

  const double* row(int i) const { return data.data() + static_cast<size_t>(i) * cols; }
};

enum class NoiseModel {
  NoisyOutput,  // Y = f(X) + W, W scalar additive noise
  NoisyInput,   // Y = f(X + W), binary labels
};

std::string to_string(NoiseModel m);

/// A set of active coordinate indices (0-based internally; 1-based in all
/// file formats and user-facing output). Always non-empty, sorted, unique,
/// and within [0, d).
class ActiveSet {
 public:
  ActiveSet(std::vector<int> zero_based_indices, int dimension);

  static ActiveSet from_one_based(const std::vector<int>& indices, int dimension);

  const std::vector<int>& indices() const { return indices_; }
  int size() const { return static_cast<int>(indices_.size()); }
  int dimension() const { return dimension_; }
  bool contains(int k) const;
  std::vector<int> one_based() const;

  bool operator==(const ActiveSet& other) const {
    return indices_ == other.indices_ && dimension_ == other.dimension_;
  }

 private:
  std::vector<int> indices_;
  int dimension_ = 0;
};

/// Immutable sample set: n feature vectors in R^d with real labels and a
/// noise-model tag. Copies are cheap (shared storage).
///
/// Label validation depends on the tag: NoisyInput labels must be exactly
/// 0 or 1. NoisyOutput labels are any finite reals; the synthetic
/// generator intentionally produces values outside [0,1], so the nominal
/// [0,1] range is not enforced here.
class Dataset {
 public:
  Dataset(Matrix features, std::vector<double> labels, NoiseModel model,
          std::optional<int> sparsity_hint = std::nullopt);

  int n() const { return features_->rows; }
  int d() const { return features_->cols; }
  double x(int i, int k) const { return (*features_)(i, k); }
  double y(int i) const { return (*labels_)[i]; }

  const Matrix& features() const { return *features_; }
  std::shared_ptr<const Matrix> features_ptr() const { return features_; }
  const std::vector<double>& labels() const { return *labels_; }
  NoiseModel noise_model() const { return model_; }
  std::optional<int> sparsity_hint() const { return sparsity_hint_; }

 private:
  std::shared_ptr<const Matrix> features_;
  std::shared_ptr<const std::vector<double>> labels_;
  NoiseModel model_;
  std::optional<int> sparsity_hint_;
};

/// Result of an inner solve for a fixed active set: fitted values F_1..F_n
/// (monotone-feasible w.r.t. the set's dominance order) and the objective
/// (misclassification count for NoisyInput, sum of squared residuals for
/// NoisyOutput).
struct FitResult {
  std::vector<double> fitted;
  double objective = 0.0;
  ActiveSet active;
};

}  // namespace siso
