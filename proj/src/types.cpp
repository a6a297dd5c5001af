#include "siso/types.hpp"

#include <algorithm>
#include <cmath>

namespace siso {

std::string to_string(NoiseModel m) {
  return m == NoiseModel::NoisyOutput ? "output" : "input";
}

ActiveSet::ActiveSet(std::vector<int> zero_based_indices, int dimension)
    : indices_(std::move(zero_based_indices)), dimension_(dimension) {
  if (dimension_ < 1) throw std::invalid_argument("ActiveSet: dimension must be >= 1");
  if (indices_.empty()) throw std::invalid_argument("ActiveSet: must contain at least one coordinate");
  std::sort(indices_.begin(), indices_.end());
  for (size_t i = 0; i < indices_.size(); ++i) {
    if (indices_[i] < 0 || indices_[i] >= dimension_)
      throw std::invalid_argument("ActiveSet: coordinate index out of range");
    if (i > 0 && indices_[i] == indices_[i - 1])
      throw std::invalid_argument("ActiveSet: duplicate coordinate index");
  }
}

ActiveSet ActiveSet::from_one_based(const std::vector<int>& indices, int dimension) {
  std::vector<int> zero;
  zero.reserve(indices.size());
  for (int k : indices) zero.push_back(k - 1);
  return ActiveSet(std::move(zero), dimension);
}

bool ActiveSet::contains(int k) const {
  return std::binary_search(indices_.begin(), indices_.end(), k);
}

std::vector<int> ActiveSet::one_based() const {
  std::vector<int> out;
  out.reserve(indices_.size());
  for (int k : indices_) out.push_back(k + 1);
  return out;
}

Dataset::Dataset(Matrix features, std::vector<double> labels, NoiseModel model,
                 std::optional<int> sparsity_hint)
    : features_(std::make_shared<const Matrix>(std::move(features))),
      labels_(std::make_shared<const std::vector<double>>(std::move(labels))),
      model_(model),
      sparsity_hint_(sparsity_hint) {
  const Matrix& f = *features_;
  if (f.rows < 1 || f.cols < 1) throw std::invalid_argument("Dataset: need n >= 1 and d >= 1");
  if (static_cast<int>(labels_->size()) != f.rows)
    throw std::invalid_argument("Dataset: label count must equal sample count");
  for (double v : f.data)
    if (!std::isfinite(v)) throw std::invalid_argument("Dataset: non-finite feature value");
  for (double v : *labels_) {
    if (!std::isfinite(v)) throw std::invalid_argument("Dataset: non-finite label");
    if (model_ == NoiseModel::NoisyInput && v != 0.0 && v != 1.0)
      throw std::invalid_argument("Dataset: NoisyInput labels must be 0 or 1");
  }
  if (sparsity_hint_ && (*sparsity_hint_ < 1 || *sparsity_hint_ > f.cols))
    throw std::invalid_argument("Dataset: sparsity hint out of range");
}

}  // namespace siso
