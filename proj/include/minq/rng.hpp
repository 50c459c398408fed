#pragma once

#include <cstdint>

namespace minq {

/// xoshiro256** with explicit integer/real draws. The standard <random>
/// distributions are implementation-defined, which would make reports differ
/// across toolchains; drawing through fixed algorithms keeps every published
/// number reproducible from (seed, stream) alone.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) { reseed(seed); }

  /// Independent stream for one trial: trials seeded this way can run on any
  /// number of worker threads without changing any drawn value.
  static Rng for_stream(std::uint64_t seed, std::uint64_t stream) {
    return Rng(mix64(seed ^ mix64(stream + 0x9E3779B97F4A7C15ULL)));
  }

  std::uint64_t next_u64() {
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

  /// Uniform integer in [0, bound), bound >= 1. Unbiased (Lemire rejection).
  std::uint64_t below(std::uint64_t bound) {
    unsigned __int128 m = static_cast<unsigned __int128>(next_u64()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
      const std::uint64_t threshold = -bound % bound;
      while (low < threshold) {
        m = static_cast<unsigned __int128>(next_u64()) * bound;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  /// Uniform integer in [lo, hi], both ends inclusive.
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) {
    return lo + below(hi - lo + 1);
  }

  /// Uniform double in [0, 1) with 53 random mantissa bits.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  // splitmix64 finalizer; also used to expand the seed into the state.
  static std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  void reseed(std::uint64_t seed) {
    std::uint64_t s = seed;
    bool all_zero = true;
    for (auto& word : state_) {
      s += 0x9E3779B97F4A7C15ULL;
      word = mix64(s);
      all_zero = all_zero && word == 0;
    }
    if (all_zero) state_[0] = 0x6A09E667F3BCC909ULL;
  }

  std::uint64_t state_[4];
};

}  // namespace minq
