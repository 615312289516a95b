// Copyright 2026 The Probkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

namespace probkit {

/// Deterministic 64-bit generator: xorshift64* stream over a splitmix64-mixed
/// seed. Same seed, same stream, on every platform. Instances are cheap to
/// copy; concurrent sampling wants one instance per thread.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(mix(seed)) {
    if (state_ == 0) state_ = 0x9E3779B97F4A7C15ULL;
  }

  std::uint64_t next_u64() {
    std::uint64_t x = state_;
    x ^= x >> 12;
    x ^= x << 25;
    x ^= x >> 27;
    state_ = x;
    return x * 0x2545F4914F6CDD1DULL;
  }

  /// Uniform draw strictly inside (0,1): bin centers of a 2^53 grid.
  double next_unit() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Child generator with a statistically independent stream; advances this one.
  Rng split() { return Rng(next_u64() ^ 0xA0761D6478BD642FULL); }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

}  // namespace probkit
