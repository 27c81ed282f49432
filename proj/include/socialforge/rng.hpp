#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <string_view>

namespace socialforge {

// All randomness in the pipeline flows from one 64-bit seed. Substreams are
// derived as mix chains over (seed, label, a, b), so every stage and every
// per-entity stream (per node, per edge) is independently reproducible.

/// splitmix64 finalizer; bijective on uint64.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

/// Maps a uint64 to a double in [0, 1) with 53 random bits.
inline double to_unit_double(std::uint64_t x) { return (x >> 11) * 0x1.0p-53; }

/// xoshiro256++ with splitmix64 seeding.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t z = seed;
    for (auto& word : state_) {
      z = mix64(z);
      word = z;
    }
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  /// Uniform in [0, 1).
  double next_double() { return to_unit_double(next_u64()); }

  /// Uniform in [0, bound); unbiased via rejection.
  std::uint64_t next_below(std::uint64_t bound) {
    const std::uint64_t threshold = -bound % bound;
    for (;;) {
      std::uint64_t x = next_u64();
      if (x >= threshold) return x % bound;
    }
  }

  /// Standard normal via Box-Muller; consumes two uniforms per pair.
  double next_gaussian() {
    if (have_cached_) {
      have_cached_ = false;
      return cached_;
    }
    const double u1 = next_double();
    const double u2 = next_double();
    const double r = std::sqrt(-2.0 * std::log1p(-u1));
    const double theta = 2.0 * 3.14159265358979323846 * u2;
    cached_ = r * std::sin(theta);
    have_cached_ = true;
    return r * std::cos(theta);
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

  std::array<std::uint64_t, 4> state_{};
  bool have_cached_ = false;
  double cached_ = 0.0;
};

/// Derived seed for the named substream.
inline std::uint64_t substream_seed(std::uint64_t seed, std::string_view label,
                                    std::uint64_t a = 0, std::uint64_t b = 0) {
  std::uint64_t z = mix64(seed ^ fnv1a64(label));
  z = mix64(z ^ a);
  return mix64(z ^ b);
}

inline Rng substream(std::uint64_t seed, std::string_view label, std::uint64_t a = 0,
                     std::uint64_t b = 0) {
  return Rng(substream_seed(seed, label, a, b));
}

/// Stateless per-pair uniform, shared by the Kronecker samplers: the draw for
/// ordered pair (i, j) depends only on (base, i, j), never on enumeration
/// order.
inline double pair_uniform(std::uint64_t base, std::uint64_t i, std::uint64_t j) {
  return to_unit_double(mix64(mix64(base ^ i) ^ j));
}

}  // namespace socialforge
