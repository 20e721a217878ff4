#pragma once

#include <cmath>
#include <cstdint>

namespace ddakit {

/// Deterministic 64-bit generator (splitmix64).  The state advances by the
/// golden-ratio gamma on every draw:
///
///   s   += 0x9E3779B97F4A7C15
///   z    = s
///   z    = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z    = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   out  = z ^ (z >> 31)
///
/// The recurrence uses only 64-bit integer arithmetic, so identical seeds
/// yield identical streams on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1), 53 usable bits.
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  /// Standard normal via Box-Muller; consumes exactly two uniforms per call.
  double gaussian() {
    double u1 = next_double();
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    const double u2 = next_double();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(6.28318530717958647692528676655900577 * u2);
  }

  /// Uniform integer in [0, n); n = 0 returns 0.
  std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

 private:
  std::uint64_t state_;
};

}  // namespace ddakit
