#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace levysim {

// Deterministic random stream on top of std::mt19937_64.
//
// All distribution transforms are implemented here rather than through
// <random> distribution objects, whose output is implementation-defined.
// Given a seed, the produced sequence is identical on every platform that
// rounds IEEE doubles the same way.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, 1) with 53 random bits.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Exponential waiting time via inverse CDF: -log(1-U)/rate.
  double exponential(double rate) {
    return -std::log1p(-uniform()) / rate;
  }

  // Standard normal via the Marsaglia polar method; the second deviate of
  // each accepted pair is cached. This choice is fixed: reseeding and
  // replaying yields the identical sequence.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double a, b, s;
    do {
      a = 2.0 * uniform() - 1.0;
      b = 2.0 * uniform() - 1.0;
      s = a * a + b * b;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = b * f;
    have_spare_ = true;
    return a * f;
  }

  double normal(double sigma) { return sigma * normal(); }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

// SplitMix64 finalizer; used to derive independent per-path seeds from a
// master seed so Monte Carlo runs are reproducible regardless of scheduling.
inline std::uint64_t mix_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master + (index + 1) * 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace levysim
