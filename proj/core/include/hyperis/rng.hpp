#pragma once

#include <cstdint>

namespace hyperis {

/// SplitMix64 (Steele, Lea, Vigna): state advances by the golden-ratio
/// increment 0x9E3779B97F4A7C15 and each output is a 64-bit finalizer mix
/// of the new state. Implemented in-repo so seeds produce the same stream
/// on every platform and in every language that follows this recipe.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform draw from {0, ..., n-1} by rejection (no modulo bias):
  /// discard raw values >= 2^64 - (2^64 mod n), then reduce.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n + 1) % n;
    std::uint64_t r;
    do {
      r = next();
    } while (r > limit);
    return r % n;
  }

  /// Double in [0, 1) from the top 53 bits.
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

}  // namespace hyperis
