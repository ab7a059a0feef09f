#pragma once

#include <cstdint>

#include "common.hpp"

namespace seqbench {

// splitmix64: one 64-bit word of state, the same stream on every platform.
// Constants are the standard gamma / finalizer values.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Unbiased draw in [0, bound) by rejection.
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw config_error("rand_below: bound must be >= 1");
    const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  // Benchmark payload values: nonnegative 62-bit integers, so ordering
  // comparisons never hit the sign boundary.
  Element value62() { return static_cast<Element>(next() & ((1ull << 62) - 1)); }

private:
  std::uint64_t state_;
};

}  // namespace seqbench
