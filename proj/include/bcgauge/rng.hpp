#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace bcg {

/// Splittable counter-based generator.  The i-th output depends only on
/// (key, i), so split streams and parallel consumption stay reproducible
/// for a given seed.  Mixing is the splitmix64 finalizer.
class SplitRng {
 public:
  explicit SplitRng(std::uint64_t seed) : key_(mix(seed ^ 0x9e3779b97f4a7c15ull)) {}

  /// Derives an independent stream; deterministic in (key, stream_id).
  SplitRng split(std::uint64_t stream_id) const {
    SplitRng r(0);
    r.key_ = mix(key_ + 0xbf58476d1ce4e5b9ull * (stream_id + 1));
    r.counter_ = 0;
    return r;
  }

  std::uint64_t next_u64() { return mix(key_ + 0x9e3779b97f4a7c15ull * ++counter_); }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  std::uint64_t uniform_index(std::uint64_t n) { return next_u64() % n; }

  /// Standard normal via Box-Muller.
  double normal() {
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
  }

  std::complex<double> normal_complex(double sigma = 1.0) {
    return {sigma * normal(), sigma * normal()};
  }

  /// Uniform on a dyadic grid: integer multiples of 2^-20 in [-range, range].
  /// Sums and differences of such values are exact in binary64, which the
  /// metric battery relies on for its bit-exactness claims.
  double dyadic(double range = 4.0) {
    const double steps = std::floor(range * 1048576.0);
    const std::int64_t n = static_cast<std::int64_t>(uniform_index(
        static_cast<std::uint64_t>(2.0 * steps + 1.0)));
    return (static_cast<double>(n) - steps) * 0x1.0p-20;
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace bcg
