#include "pcs/rng.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

namespace pcs {

double SplitMix64::normal() {
  // Box-Muller, one value per pair of draws. u1 is nudged away from zero so
  // the log stays finite.
  const double u1 = unit();
  const double u2 = unit();
  const double r = std::sqrt(-2.0 * std::log(u1 + 0x1.0p-53));
  return r * std::cos(2.0 * std::numbers::pi * u2);
}

std::vector<std::size_t> SplitMix64::permutation(std::size_t n) {
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const std::size_t j = i + below(n - i);
    std::swap(idx[i], idx[j]);
  }
  return idx;
}

std::vector<std::size_t> SplitMix64::sample_without_replacement(std::size_t n,
                                                                std::size_t c) {
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  for (std::size_t i = 0; i < c && i + 1 < n; ++i) {
    const std::size_t j = i + below(n - i);
    std::swap(idx[i], idx[j]);
  }
  idx.resize(c);
  return idx;
}

}  // namespace pcs
