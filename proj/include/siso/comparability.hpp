#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "siso/types.hpp"

namespace siso {

/// Dense n x n bit matrix.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(int n)
      : n_(n), words_per_row_((n + 63) / 64), bits_(static_cast<size_t>(n) * words_per_row_, 0) {}

  int size() const { return n_; }
  int words_per_row() const { return words_per_row_; }

  bool get(int i, int j) const {
    return (bits_[static_cast<size_t>(i) * words_per_row_ + (j >> 6)] >> (j & 63)) & 1ULL;
  }
  void set(int i, int j) {
    bits_[static_cast<size_t>(i) * words_per_row_ + (j >> 6)] |= 1ULL << (j & 63);
  }
  void clear(int i, int j) {
    bits_[static_cast<size_t>(i) * words_per_row_ + (j >> 6)] &= ~(1ULL << (j & 63));
  }

  const uint64_t* row(int i) const { return bits_.data() + static_cast<size_t>(i) * words_per_row_; }
  uint64_t* row(int i) { return bits_.data() + static_cast<size_t>(i) * words_per_row_; }

  bool operator==(const BitMatrix& other) const {
    return n_ == other.n_ && bits_ == other.bits_;
  }

 private:
  int n_ = 0;
  int words_per_row_ = 0;
  std::vector<uint64_t> bits_;
};

/// The pairwise dominance structure of a sample set under a fixed active
/// set A: dominates(i, j) holds iff X_i <= X_j componentwise on A. Ties
/// count as dominance in both directions, so the relation is a preorder
/// (reflexive and transitive), not necessarily a partial order.
///
/// Immutable after construction; safe to share across threads.
class ComparabilityRelation {
 public:
  ComparabilityRelation(std::shared_ptr<const Matrix> features, ActiveSet active, BitMatrix dominance)
      : features_(std::move(features)), active_(std::move(active)), dominance_(std::move(dominance)) {}

  int n() const { return dominance_.size(); }
  const ActiveSet& active() const { return active_; }

  /// X_i <=_A X_j.
  bool dominates(int i, int j) const { return dominance_.get(i, j); }

  /// q(i,j,k): 1 iff X_{i,k} > X_{j,k} strictly. k ranges over all d
  /// coordinates, not just the active ones.
  int strict_coord(int i, int j, int k) const {
    return (*features_)(i, k) > (*features_)(j, k) ? 1 : 0;
  }

  const BitMatrix& dominance_matrix() const { return dominance_; }

 private:
  std::shared_ptr<const Matrix> features_;
  ActiveSet active_;
  BitMatrix dominance_;
};

/// q(i,j,k) = 1 iff X_{i,k} > X_{j,k} (strict). Indices are 0-based.
int q_indicator(const Dataset& dataset, int i, int j, int k);

/// True iff X_{i,k} <= X_{j,k} for every active coordinate k.
bool dominates(const Dataset& dataset, int i, int j, const ActiveSet& active);

/// Materializes the full dominance bit matrix in O(n^2 * |A|).
ComparabilityRelation build_comparability(const Dataset& dataset, const ActiveSet& active);

/// Per-coordinate "<=" bit matrices, precomputed once so that the dominance
/// matrix of any coordinate subset is an AND of rows. This is the hot path
/// of subset enumeration: combining s layers costs O(n^2 * s / 64) word
/// operations instead of O(n^2 * s) comparisons.
class CoordLeqCache {
 public:
  explicit CoordLeqCache(const Dataset& dataset);

  int n() const { return n_; }
  int d() const { return static_cast<int>(layers_.size()); }

  const BitMatrix& layer(int k) const { return layers_[k]; }

  /// AND of the given coordinate layers.
  BitMatrix dominance_for(std::span<const int> coords) const;

 private:
  int n_ = 0;
  std::vector<BitMatrix> layers_;
};

}  // namespace siso
