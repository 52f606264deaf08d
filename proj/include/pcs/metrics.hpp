#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pcs/point_cloud.hpp"
#include "pcs/sampler_spec.hpp"

namespace pcs {

/// Fill distance: max over all points of the Euclidean distance to the
/// nearest sample. The quantity greedy farthest-point sampling minimizes;
/// lower is better. Exact O(N * |S|) scan.
double coverage_radius(const PointCloud& cloud,
                       std::span<const std::size_t> samples);

/// Minimum pairwise Euclidean distance among the sampled points.
double separation(const PointCloud& cloud,
                  std::span<const std::size_t> samples);

struct MethodRow {
  SamplerSpec spec;
  std::size_t trials = 0;
  double coverage_mean = 0, coverage_std = 0;
  double separation_mean = 0, separation_std = 0;
  double wall_mean = 0, wall_std = 0;
  double dist_evals_mean = 0;
  double dist_writes_mean = 0;
  double argmax_scans_mean = 0;
  double iterations_mean = 0;
};

struct QualityReport {
  std::uint64_t cloud_digest = 0;
  std::size_t n = 0;
  Axis locality_axis = Axis::X;
  double locality = 0;  // locality_score of the input along locality_axis
  std::vector<MethodRow> rows;
};

/// Runs every spec `trials` times with per-trial derived seeds (shared across
/// specs, so identical specs produce identical rows) and aggregates metric
/// means and standard deviations. Wall time covers the sampler call only.
QualityReport compare(const PointCloud& cloud,
                      const std::vector<SamplerSpec>& specs,
                      std::size_t trials, std::uint64_t seed);

std::string report_csv(const QualityReport& report);
std::string report_json(const QualityReport& report);

}  // namespace pcs
