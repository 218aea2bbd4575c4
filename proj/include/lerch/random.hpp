// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

namespace lerch {

/// SplitMix64. Small, fast, and splittable: split(i) derives an independent
/// stream for sample i, so parallel sweeps draw the same numbers regardless
/// of scheduling.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  SplitMix64 split(std::uint64_t index) const {
    SplitMix64 child(state_ ^ (index * 0xD1B54A32D192ED03ULL + 0x8CB92BA72F3D8DD7ULL));
    child.next();
    return child;
  }

 private:
  std::uint64_t state_;
};

}  // namespace lerch
