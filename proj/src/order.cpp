#include "pcs/order.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "pcs/rng.hpp"

namespace pcs {

PointCloud exact_sort(const PointCloud& cloud, Axis axis) {
  const int a = static_cast<int>(axis);
  std::vector<std::size_t> idx(cloud.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t lhs, std::size_t rhs) {
    return cloud.points[lhs][a] < cloud.points[rhs][a];
  });

  PointCloud out;
  out.points.reserve(cloud.size());
  for (std::size_t i : idx) out.points.push_back(cloud.points[i]);
  out.order_tag = OrderTag::exactly_sorted(axis);
  return out;
}

PointCloud bin_approx_sort(const PointCloud& cloud, Axis axis,
                           std::size_t bin_size, std::uint64_t seed) {
  if (bin_size < 1) throw std::invalid_argument("bin_approx_sort: bin_size must be >= 1");
  if (bin_size > cloud.size())
    throw std::invalid_argument("bin_approx_sort: bin_size exceeds cloud size");

  PointCloud out = exact_sort(cloud, axis);
  SplitMix64 rng(seed);
  const std::size_t n = out.size();
  for (std::size_t bin_start = 0; bin_start < n; bin_start += bin_size) {
    const std::size_t len = std::min(bin_size, n - bin_start);
    for (std::size_t i = 0; i + 1 < len; ++i) {
      const std::size_t j = i + rng.below(len - i);
      std::swap(out.points[bin_start + i], out.points[bin_start + j]);
    }
  }
  out.order_tag = OrderTag::approx_sorted(axis, bin_size);
  return out;
}

PointCloud shuffle(const PointCloud& cloud, std::uint64_t seed) {
  SplitMix64 rng(seed);
  const std::vector<std::size_t> perm = rng.permutation(cloud.size());
  PointCloud out;
  out.points.reserve(cloud.size());
  for (std::size_t i : perm) out.points.push_back(cloud.points[i]);
  out.order_tag = OrderTag::unsorted();
  return out;
}

double locality_score(const PointCloud& cloud, Axis axis) {
  const std::size_t n = cloud.size();
  if (n < 2) throw std::invalid_argument("locality_score: need at least 2 points");
  const int a = static_cast<int>(axis);
  std::size_t inversions = 0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (cloud.points[i][a] > cloud.points[i + 1][a]) ++inversions;
  }
  return static_cast<double>(inversions) / static_cast<double>(n - 1);
}

}  // namespace pcs
