#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "siso/comparability.hpp"
#include "siso/types.hpp"

namespace siso {

using BigInt = boost::multiprecision::cpp_int;

/// A finite point set under the full coordinate-wise order (all d
/// coordinates). Enumeration guard: n <= 30.
class PointPoset {
 public:
  explicit PointPoset(Matrix points);

  int n() const { return points_.rows; }
  int d() const { return points_.cols; }
  const Matrix& points() const { return points_; }
  bool leq(int i, int j) const { return leq_.get(i, j); }

  /// Bitmask of elements above i (including i).
  uint32_t up_mask(int i) const { return up_[i]; }
  /// Bitmask of elements below i (including i).
  uint32_t down_mask(int i) const { return down_[i]; }

 private:
  Matrix points_;
  BitMatrix leq_;
  std::vector<uint32_t> up_, down_;
};

struct LabelingCount {
  int m = 2;
  BigInt count = 0;
};

/// Exact number of monotone maps into {1, 2}, i.e. the number of order
/// ideals. Counted by a deletion recursion with memoization on the
/// surviving subposet: picking a pivot element x, ideals either avoid x
/// (and live in the poset minus x's up-set) or contain all of x's
/// down-set. n <= 30.
LabelingCount count_binary_labelings(const PointPoset& poset);

/// Exhaustive oracle for the binary count: filters all 2^n labelings.
/// n <= 20.
LabelingCount count_binary_labelings_naive(const PointPoset& poset);

/// Exact number of monotone maps into {1..m}, counted as chains of m-1
/// nested order ideals over the enumerated ideal lattice. Guards:
/// n <= 20, m <= 6, and internal work limits (enumerated ideals, lattice
/// pairs) that refuse pathological antichains.
LabelingCount count_m_labelings(const PointPoset& poset, int m);

struct LabelingBoundsResult {
  double mean_count = 0.0;
  double lower_bound = 0.0;
  double upper_bound = 0.0;
  bool within = false;
};

/// Samples `trials` uniform point sets on [0,1]^d, averages their exact
/// binary labeling counts, and evaluates the theoretical envelope
///   exp[ log(2)(1-1/e)/(d-1)! * n^((d-1)/d) ]
///     <= mean <= exp[ (2^d + 2 log 2 - 1) * n^((d-1)/d) ].
/// Guards: n <= 16, d in {2,3,4}.
LabelingBoundsResult empirical_labeling_bounds(int n, int d, int trials, uint64_t seed);

}  // namespace siso
