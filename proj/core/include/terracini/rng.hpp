#pragma once

#include <cstdint>

namespace terracini {

/// splitmix64: small, portable, deterministic across platforms.  All seeded
/// randomness in the library flows through this so outputs are reproducible.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, n).
  std::uint64_t below(std::uint64_t n) { return next() % n; }
};

/// Derives an independent stream from (seed, salt...) so that, e.g., each
/// sampling trial owns its own deterministic stream.
inline std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t salt) {
  SplitMix64 g(seed ^ (0x9E3779B97F4A7C15ULL * (salt + 1)));
  g.next();
  return g.next();
}

}  // namespace terracini
