#pragma once

#include <cstdint>

namespace ffgeo {

/// SplitMix64 generator. Chosen over <random> engines because its output is
/// fully specified here, so seeded reports are byte-identical across
/// platforms and standard-library versions.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform draw from [0, bound), bound > 0. Rejection sampling keeps the
  /// distribution exact.
  uint64_t below(uint64_t bound) {
    const uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % bound;
  }

  /// Stable stream-splitting: mix(seed, i) seeds an independent generator
  /// per trial so trial order never affects per-trial randomness.
  static uint64_t mix(uint64_t a, uint64_t b) {
    SplitMix64 g(a ^ (0x9e3779b97f4a7c15ull + (b << 1)));
    g.next();
    return g.next();
  }

 private:
  uint64_t state_;
};

}  // namespace ffgeo
