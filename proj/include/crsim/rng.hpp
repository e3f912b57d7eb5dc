#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace crsim {

/// Deterministic random stream used by every stochastic operation.
///
/// All variates are derived from 53-bit uniforms taken off a mt19937_64,
/// never from std::*_distribution, so a given seed reproduces the same
/// trajectory on every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  /// Uniform draw on [0, 1).
  double uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  /// True with probability p; consumes one uniform.
  bool bernoulli(double p) { return uniform() < p; }

  /// Exponential variate with the given mean; consumes one uniform.
  double exponential(double mean) {
    // log1p(-u) with u in [0,1) keeps the argument in (0,1], so the
    // result is finite and >= 0.
    return -mean * std::log1p(-uniform());
  }

 private:
  std::mt19937_64 gen_;
};

/// SplitMix64 finalizer; the building block for derived run seeds.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace crsim
