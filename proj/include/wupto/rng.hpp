#pragma once

#include <cstdint>

namespace wupto {

// Deterministic 64-bit generator (splitmix64). Used wherever reproducible,
// platform-independent streams are required; std:: distributions are not
// implementation-stable, so all draws go through the helpers below.
struct SplitMix64 {
  std::uint64_t state = 0;

  explicit SplitMix64(std::uint64_t seed = 0) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound), bound >= 1. Rejection sampling keeps it unbiased.
  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  // Uniform in [lo, hi], inclusive.
  std::uint64_t in_range(std::uint64_t lo, std::uint64_t hi) {
    return lo + below(hi - lo + 1);
  }

  // True with probability p/q, exactly.
  bool bernoulli(std::uint64_t p, std::uint64_t q) { return below(q) < p; }
};

}  // namespace wupto
