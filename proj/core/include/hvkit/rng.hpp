#pragma once

#include <cstdint>
#include <random>

namespace hvkit {

/// Seedable random source used everywhere randomness is needed.
///
/// Raw 64-bit output comes from std::mt19937_64. All variates are derived
/// from that output through fixed arithmetic (53-bit mantissa scaling for
/// uniforms, Marsaglia polar rejection for normals, threshold rejection for
/// bounded integers), so a seed produces the same stream on every platform
/// and standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1) with 53-bit resolution.
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi) { return lo + uniform01() * (hi - lo); }

  /// Standard normal deviate.
  double normal();

  /// Uniform integer in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
  double spare_normal_ = 0.0;
  bool has_spare_normal_ = false;
};

/// Stateless mix of a master seed and a stream index (splitmix64 finalizer).
/// Distinct indices give statistically independent child seeds.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

}  // namespace hvkit
