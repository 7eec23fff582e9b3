#pragma once

// Deterministic small-state RNG (splitmix64). Every randomized code path in
// the project draws from this generator so that runs are reproducible from a
// single 64-bit seed on any platform.

#include <cstdint>

#include "bigint.hpp"

namespace rlc {

inline std::uint64_t splitmix_mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ULL;
    return splitmix_mix(state);
  }

  // Unbiased draw in [0, bound) by rejection.
  std::uint64_t next_below(std::uint64_t bound) {
    require(bound >= 1, ErrorCode::invalid_argument, "next_below: bound == 0");
    if (bound == 1) return 0;
    const std::uint64_t threshold = (-bound) % bound;  // == 2^64 mod bound
    for (;;) {
      std::uint64_t x = next();
      if (x >= threshold) return x % bound;
    }
  }

  // Unbiased draw in [0, bound) for arbitrary-precision bounds. Words are
  // consumed most-significant first so the stream layout is fixed.
  BigInt next_below_big(const BigInt& bound) {
    require(sgn(bound) > 0, ErrorCode::invalid_argument,
            "next_below_big: bound must be positive");
    if (fits_u64(bound)) return BigInt(next_below(to_u64(bound)));
    const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
    const std::size_t words = (bits + 63) / 64;
    const unsigned top_bits = static_cast<unsigned>(bits - (words - 1) * 64);
    for (;;) {
      BigInt v = 0;
      for (std::size_t w = 0; w < words; ++w) {
        std::uint64_t word = next();
        if (w == 0 && top_bits < 64) word >>= (64 - top_bits);
        v <<= 64;
        v += BigInt(word);
      }
      if (v < bound) return v;
    }
  }
};

// k-th element of the derived seed stream for a master seed: attempt k of a
// search, worker k of a pool, sample k of a Monte Carlo run.
inline std::uint64_t seed_stream(std::uint64_t seed, std::uint64_t k) {
  return splitmix_mix(seed + (k + 1) * 0x9E3779B97F4A7C15ULL);
}

}  // namespace rlc
