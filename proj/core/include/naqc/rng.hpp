#pragma once

#include <cstdint>

namespace naqc {

/// Seeded xoshiro256++ stream with splitmix64 state expansion.
/// The generator, the uniform mapping ((x >> 11) * 2^-53) and the
/// Box-Muller Gaussian pairing are pinned so that identical seeds
/// reproduce identical samples on any platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next_u64();

  /// Uniform double in [0, 1).
  double uniform();

  /// Standard normal. Draws Box-Muller pairs; the second value of each
  /// pair is cached and returned on the next call.
  double gaussian();

 private:
  std::uint64_t state_[4];
  double cached_ = 0.0;
  bool has_cached_ = false;
};

}  // namespace naqc
