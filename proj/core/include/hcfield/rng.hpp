#pragma once

#include <bit>
#include <cmath>
#include <cstdint>

namespace hcfield {

/// SplitMix64. Per-trial streams are derived from (master seed, trial index),
/// so trial order and worker count never change the draws.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  static uint64_t derive_seed(uint64_t master, uint64_t counter) {
    uint64_t z = master + 0x9e3779b97f4a7c15ULL * (counter + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  static Rng for_trial(uint64_t master, uint64_t trial) {
    return Rng(derive_seed(master, trial));
  }

  uint64_t next_u64() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Exponential with given mean. Inverse transform with an inlined log
  /// (range-reduced atanh series, ~1e-12 relative): the sampler draws two
  /// exponentials per field point, so the libm call would dominate runtime.
  double exponential(double mean) {
    double u = static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;  // (0, 1]
    return -mean * fast_log(u);
  }

  /// Gamma(shape, 1) for integer shape (sum of exponentials).
  double gamma_int(int shape) {
    double s = 0.0;
    for (int i = 0; i < shape; ++i) s += exponential(1.0);
    return s;
  }

 private:
  static double fast_log(double x) {
    uint64_t bits = std::bit_cast<uint64_t>(x);
    int e = static_cast<int>((bits >> 52) & 0x7ff) - 1023;
    double m = std::bit_cast<double>((bits & 0xfffffffffffffULL) | 0x3ff0000000000000ULL);
    if (m > 1.4142135623730951) {  // keep m in [sqrt(1/2), sqrt(2))
      m *= 0.5;
      ++e;
    }
    double t = (m - 1.0) / (m + 1.0);
    double t2 = t * t;
    double p = 2.0 * t *
               (1.0 + t2 * (1.0 / 3.0 +
                            t2 * (1.0 / 5.0 +
                                  t2 * (1.0 / 7.0 +
                                        t2 * (1.0 / 9.0 +
                                              t2 * (1.0 / 11.0 + t2 * (1.0 / 13.0)))))));
    return p + e * 0.6931471805599453;
  }

  uint64_t state_;
};

}  // namespace hcfield
