#pragma once

#include <cstdint>
#include <random>

namespace aimsyn {

/// Seeded random source. Gaussian and Gumbel variates are generated from raw
/// engine output directly so that a (seed, call sequence) pair reproduces
/// bit-identical streams regardless of the standard library in use.
class RandomSource {
 public:
  explicit RandomSource(uint64_t seed) : engine_(seed) {}

  uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Uniform in (0, 1].
  double uniform_positive() { return 1.0 - uniform(); }

  /// Standard normal via Box-Muller, caching the paired variate.
  double gaussian();

  /// Standard Gumbel: -log(-log(U)).
  double gumbel();

  /// Unbiased integer in [0, n).
  uint64_t below(uint64_t n);

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace aimsyn
