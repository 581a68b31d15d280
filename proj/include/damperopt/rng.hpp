#pragma once

#include <cstdint>
#include <cmath>
#include <random>

namespace damperopt {

/// splitmix64 mixing step; used for seed derivation so that related seeds
/// (master ^ run index) produce unrelated generator states.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Derive a stream seed from a master seed and an ordered list of tags.
/// Folds each tag through splitmix64 so every (master, tags...) tuple maps
/// to an independent, reproducible stream.
template <typename... Tags>
std::uint64_t mix_seed(std::uint64_t master, Tags... tags) {
  std::uint64_t s = splitmix64(master);
  ((s = splitmix64(s ^ static_cast<std::uint64_t>(tags))), ...);
  return s;
}

/// Seeded random source with explicit, platform-independent distributions.
///
/// std::uniform_real_distribution and friends are implementation-defined,
/// which would break bit-reproducibility of results across standard
/// libraries. All draws here are defined directly on mt19937_64 output.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform double in [0, 1), 53-bit resolution.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform();
  }

  /// Standard normal via Box-Muller. Consumes exactly two uniform draws per
  /// call; the second variate is discarded so stream accounting stays fixed.
  double normal() {
    double u1 = uniform();
    double u2 = uniform();
    // Guard log(0); u1 = 0 occurs with probability 2^-53.
    while (u1 <= 0.0) u1 = uniform();
    constexpr double two_pi = 6.283185307179586476925286766559;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
  }

  std::uint64_t next_u64() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace damperopt
