#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace eqvb {

/// Deterministic random source. All randomized routines take one of these (or a
/// seed) so that every run is reproducible under a fixed --seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(split(seed)) {}

  int uniform_int(int lo, int hi) {  // inclusive bounds
    return std::uniform_int_distribution<int>(lo, hi)(engine_);
  }

  double normal() { return std::normal_distribution<double>(0.0, 1.0)(engine_); }

  std::complex<double> complex_gaussian() { return {normal(), normal()}; }

  /// Independent child stream; stable under the order of fork calls.
  Rng fork() { return Rng(engine_()); }

  std::mt19937_64& engine() { return engine_; }

 private:
  // splitmix64 scramble so nearby seeds give unrelated streams
  static std::uint64_t split(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  std::mt19937_64 engine_;
};

}  // namespace eqvb
