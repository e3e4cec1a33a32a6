#pragma once

#include "permharmonic/permutation.hpp"

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace permharmonic {

/**
 * Seeded generator with platform-independent output. The engine is
 * std::mt19937_64, whose sequence the standard fixes; the conversions to
 * doubles and bounded integers are done here rather than through
 * <random> distributions, whose algorithms are implementation-defined.
 */
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform on [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform on {0, ..., bound - 1} by rejection; bound > 0.
  std::uint64_t below(std::uint64_t bound);

  std::vector<double> vector(std::size_t n, double lo = -1.0, double hi = 1.0);

  /// Fisher-Yates shuffle of the identity.
  Permutation permutation(std::size_t n);

private:
  std::mt19937_64 engine_;
};

} // namespace permharmonic
