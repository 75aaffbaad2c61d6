// SPDX-License-Identifier: Apache-2.0
//
// Deterministic pseudo-random number generation for seeded sweeps.
//
// Two named, published algorithms are implemented verbatim so that every
// randomized run is replayable from its recorded 64-bit seed alone, on any
// platform:
//   * splitmix64 — expands the user seed into the generator state;
//   * xoshiro256** — the stream generator (Blackman & Vigna's public-domain
//     reference algorithm).
// Both use only fixed-width unsigned arithmetic, so streams are identical
// across compilers and architectures.

#pragma once

#include <bit>
#include <cstdint>

namespace setlab {

/// splitmix64 step: advances `state` and returns the next output word.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// xoshiro256** seeded via splitmix64 from a single 64-bit seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    for (auto& word : s_) word = splitmix64(seed);
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = std::rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = std::rotl(s_[3], 45);
    return result;
  }

  /// Uniform value in [0, bound); bound must be positive.  Uses rejection
  /// sampling, so the distribution is exact and stream-stable.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % bound;
    std::uint64_t v = next_u64();
    while (v >= limit) v = next_u64();
    return v % bound;
  }

  /// True with probability num/den.
  bool chance(std::uint64_t num, std::uint64_t den) {
    return below(den) < num;
  }

  /// Uniform random subset of {0, ..., m-1}.
  std::uint32_t mask_below(std::uint32_t m) {
    return static_cast<std::uint32_t>(next_u64() &
                                      ((m >= 32) ? ~std::uint32_t{0}
                                                 : ((std::uint32_t{1} << m) - 1)));
  }

 private:
  std::uint64_t s_[4];
};

}  // namespace setlab
