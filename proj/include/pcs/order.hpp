#pragma once

#include <cstdint>

#include "pcs/point_cloud.hpp"

namespace pcs {

/// Stable sort by coordinate along axis. Result is tagged exactly_sorted.
PointCloud exact_sort(const PointCloud& cloud, Axis axis);

/// Sort along axis, then shuffle each consecutive block of bin_size points
/// independently (final partial block included). Result is tagged
/// approx_sorted(axis, bin_size): every point in a later bin is >= every
/// point in an earlier bin along the axis, order inside a bin is arbitrary.
PointCloud bin_approx_sort(const PointCloud& cloud, Axis axis,
                           std::size_t bin_size, std::uint64_t seed);

/// Uniform random permutation of the storage order. Result is tagged unsorted.
PointCloud shuffle(const PointCloud& cloud, std::uint64_t seed);

/// Adjacent-inversion rate along axis: fraction of index pairs (i, i+1) with
/// coord[i] > coord[i+1]. 0 for ascending order, 1 for descending, about 0.5
/// when storage order carries no information about the axis. Requires N >= 2.
double locality_score(const PointCloud& cloud, Axis axis);

}  // namespace pcs
