#pragma once

#include <cstdint>
#include <vector>

namespace pcs {

/// SplitMix64 generator (Steele, Lea, Flood 2014). Chosen over std::mt19937
/// because its output is fully specified here, so sampling results are
/// reproducible across platforms and standard libraries. Sector streams are
/// derived as seed ^ sector_id.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Unbiased draw from [0, bound) via rejection. bound must be > 0.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  /// Uniform double in [0, 1) with 53 bits of precision.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

  /// Standard normal via Box-Muller. Draws two values per call.
  double normal();

  /// Fisher-Yates shuffle of [0, n) index permutation; returns the permutation.
  std::vector<std::size_t> permutation(std::size_t n);

  /// First c entries of a random permutation of [0, n): a uniform draw
  /// without replacement, in draw order.
  std::vector<std::size_t> sample_without_replacement(std::size_t n, std::size_t c);

 private:
  std::uint64_t state_;
};

}  // namespace pcs
