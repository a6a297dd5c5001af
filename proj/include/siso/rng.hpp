#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace siso {

/// Project-wide random number generator.
///
/// All randomness flows through this one generator type so runs are
/// reproducible from a single seed: a std::mt19937_64 whose seed is
/// derived with the SplitMix64 mixing function. Independent streams for
/// parallel trials are split by counter: stream(seed, c) and stream(seed, c')
/// are seeded from different SplitMix64 states and never share draws.
///
/// Uniform doubles use the top 53 bits of one 64-bit draw; normals use
/// Box-Muller on two uniforms (no caching, so every normal consumes
/// exactly two draws).
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(splitmix64(seed)) {}

  /// Independent stream derived from (seed, counter).
  static Rng stream(uint64_t seed, uint64_t counter) {
    return Rng(splitmix64(seed) + counter * 0x9E3779B97F4A7C15ULL);
  }

  uint64_t next_u64() { return engine_(); }

  /// Uniform on [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform on the open interval (0, 1); used where log(0) must be avoided.
  double uniform_open() {
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Standard normal via Box-Muller.
  double normal() {
    double u1 = uniform_open();
    double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.141592653589793238462643383279502884 * u2);
  }

  double normal(double mean, double stddev) { return mean + stddev * normal(); }

  /// Uniform integer in [0, bound); bound >= 1.
  uint64_t below(uint64_t bound) {
    // Rejection to avoid modulo bias.
    uint64_t threshold = (~bound + 1) % bound;
    for (;;) {
      uint64_t r = engine_();
      if (r >= threshold) return r % bound;
    }
  }

  static uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace siso
