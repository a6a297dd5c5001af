#pragma once

#include <span>
#include <utility>

#include "siso/rng.hpp"
#include "siso/types.hpp"

namespace siso {

/// Ground-truth function for synthetic instances: f(x) = 1 iff some anchor
/// point Z_j satisfies Z_j <= x on the active coordinates. By construction
/// f is monotone in the active coordinates and ignores the rest.
struct AnchorModel {
  Matrix anchors;  // r x d points in the unit cube
  ActiveSet active;
  double noise_sigma = 0.0;
  NoiseModel model = NoiseModel::NoisyOutput;

  int r() const { return anchors.rows; }
  int d() const { return anchors.cols; }

  bool indicator(std::span<const double> x) const {
    for (int j = 0; j < anchors.rows; ++j) {
      bool dominated = true;
      for (int k : active.indices()) {
        if (anchors(j, k) > x[k]) {
          dominated = false;
          break;
        }
      }
      if (dominated) return true;
    }
    return false;
  }
};

/// Noisy-output instance: anchors and samples drawn uniformly on [0,1]^d
/// (anchors first, then samples, then noise, so the stream layout is
/// stable); Y_i = f(X_i) + W_i with scalar W_i ~ Normal(0, sigma^2).
/// The labels are deliberately not clipped to [0,1], matching how the
/// generator is defined. Active set is {1..s}.
std::pair<Dataset, AnchorModel> gen_anchor_instance(int n, int d, int s, int r, double sigma,
                                                    uint64_t seed);

/// Noisy-input instance: Y_i = f(X_i + W_i) with W_i having d independent
/// Normal(0, sigma^2) components; labels are exactly 0/1.
std::pair<Dataset, AnchorModel> gen_noisy_input_instance(int n, int d, int s, int r, double sigma,
                                                         uint64_t seed);

}  // namespace siso
