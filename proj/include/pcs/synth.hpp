#pragma once

#include <cstdint>

#include "pcs/point_cloud.hpp"

namespace pcs {

/// Smooth random radius-vs-azimuth profile for the synthetic scanners:
/// r(u) = base * (1 + amplitude * s(u)) where s is a normalized sum of low
/// harmonics with seeded phases, |s| <= 1, u in [0, 1] over the sweep.
/// amplitude = 0 gives a constant range.
struct RangeProfile {
  double base = 10.0;      // meters
  double amplitude = 0.04; // relative variation
  int waves = 2;           // number of harmonic components
};

/// Spinning multi-beam scanner. Azimuth advances strictly monotonically from
/// 180 deg through fov_deg degrees; each point is (r cos az, r sin az, z)
/// with r from the profile plus relative jitter, and z from a fixed fan of
/// beam elevations cycled per step. The sweep starts at 180 deg so that x is
/// non-decreasing for fov <= 180 with a constant range: storage order then
/// carries x-locality without the tag claiming it (tag stays unsorted).
PointCloud gen_scanning_lidar(std::size_t n, double fov_deg,
                              const RangeProfile& profile, double jitter,
                              std::uint64_t seed);

/// 2D scanner raised one layer per step: layer L sits at z = L * z_step
/// exactly, points within a layer sweep a full circle at that height.
/// Result is tagged exactly_sorted(z) and passes validate.
PointCloud gen_stepper_lidar(std::size_t layers, std::size_t points_per_layer,
                             double z_step, std::uint64_t seed);

/// Mixture stress case: (1 - sparse_fraction) * n points in tight Gaussian
/// clusters, the rest uniform in a much larger volume, storage order
/// shuffled. Random samplers tend to miss the sparse region on this cloud.
PointCloud gen_sparse_dense(std::size_t n, std::size_t n_clusters,
                            double sparse_fraction, std::uint64_t seed);

}  // namespace pcs
