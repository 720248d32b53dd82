#pragma once

#include <cstdint>

namespace tsg {

// All randomness in the engine flows through the two generators below so that
// a (config, seed) pair determines every output byte on every platform.

inline constexpr std::uint64_t kGolden64 = 0x9E3779B97F4A7C15ull;

/// One step of Vigna's splitmix64: advances `state` by the golden-ratio
/// increment and returns the mixed output.
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
  std::uint64_t z = (state += kGolden64);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/// Stateless convenience: the first splitmix64 output for a given seed.
inline std::uint64_t splitmix64(std::uint64_t seed) { return splitmix64_next(seed); }

/// Per-trial seed: seed_i = splitmix64(master_seed XOR (i+1)*0x9E3779B97F4A7C15).
inline std::uint64_t derive_trial_seed(std::uint64_t master_seed, std::uint64_t trial_index) {
  return splitmix64(master_seed ^ ((trial_index + 1) * kGolden64));
}

/// xoshiro256** 1.0 (Blackman & Vigna), state filled from a splitmix64 stream.
class Xoshiro256ss {
 public:
  explicit Xoshiro256ss(std::uint64_t seed) {
    for (auto& word : state_) word = splitmix64_next(seed);
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  /// Unbiased uniform draw in [0, bound) via Lemire's multiply-shift rejection.
  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t x = next();
    __uint128_t m = static_cast<__uint128_t>(x) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
      const std::uint64_t threshold = (0 - bound) % bound;
      while (low < threshold) {
        x = next();
        m = static_cast<__uint128_t>(x) * bound;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  /// Uniform double in [0, 1) with 53 bits of precision.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

  std::uint64_t state_[4];
};

}  // namespace tsg
