#pragma once

#include <cstdint>

namespace hlbench {

// splitmix64 (Steele, Lea, Flood): state advances by 0x9E3779B97F4A7C15 and
// each output is mixed with the multipliers 0xBF58476D1CE4E5B9 and
// 0x94D049BB133111EB (shifts 30, 27, 31). Every seeded object in the library
// draws from this generator so that results are identical on all platforms.
class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

  constexpr std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  constexpr int next_bit() { return static_cast<int>(next() & 1u); }

  // Uniform in [0, bound) by rejection; bound must be positive.
  constexpr std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x = next();
    while (x >= limit) x = next();
    return x % bound;
  }

 private:
  std::uint64_t state_;
};

}  // namespace hlbench
