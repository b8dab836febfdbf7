#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace msm {

// Deterministic random helpers on top of mt19937_64. The standard engine's
// output sequence is fully specified, and the derivations below avoid the
// implementation-defined std:: distributions, so a seed pins every dataset
// and every matcher decision to the same values on any platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  // Uniform on [0,1) with 53 random bits.
  double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  // Uniform on (0,1]; safe as a log() argument.
  double uniform01_open0() {
    return static_cast<double>((gen_() >> 11) + 1) * 0x1.0p-53;
  }

  // N(0, stddev^2) via Box-Muller; consumes exactly two draws.
  double normal(double stddev) {
    const double u1 = uniform01_open0();
    const double u2 = uniform01();
    return stddev * std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * 3.14159265358979323846 * u2);
  }

  int bounded(int n) { return static_cast<int>(gen_() % static_cast<std::uint64_t>(n)); }

  // Fisher-Yates; identity permutation shuffled in place.
  std::vector<int> permutation(int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    for (int i = n - 1; i > 0; --i) {
      const int j = bounded(i + 1);
      std::swap(p[i], p[j]);
    }
    return p;
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace msm
