#include "pcs/synth.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "pcs/rng.hpp"

namespace pcs {

namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;

// Beam elevations of the spinning scanner's fan, degrees. They shape z only;
// x and y come from azimuth and range alone.
constexpr double kBeamElevationsDeg[] = {-10.0, -3.0, 3.0, 10.0};
constexpr std::size_t kBeamCount = 4;

// Smooth [-1, 1]-bounded curve: seeded harmonics normalized by the sum of
// their amplitudes.
struct SmoothCurve {
  std::vector<double> amplitudes;
  std::vector<double> phases;

  static SmoothCurve draw(int waves, SplitMix64& rng) {
    SmoothCurve curve;
    double total = 0.0;
    for (int h = 0; h < waves; ++h) {
      curve.amplitudes.push_back(0.25 + rng.unit());
      curve.phases.push_back(rng.uniform(0.0, 2.0 * std::numbers::pi));
      total += curve.amplitudes.back();
    }
    for (double& a : curve.amplitudes) a /= total;
    return curve;
  }

  double eval(double u) const {
    double s = 0.0;
    for (std::size_t h = 0; h < amplitudes.size(); ++h) {
      s += amplitudes[h] *
           std::cos(std::numbers::pi * static_cast<double>(h + 1) * u + phases[h]);
    }
    return s;
  }
};

}  // namespace

PointCloud gen_scanning_lidar(std::size_t n, double fov_deg,
                              const RangeProfile& profile, double jitter,
                              std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("gen_scanning_lidar: n must be >= 2");
  if (!(fov_deg > 0.0) || fov_deg > 360.0)
    throw std::invalid_argument("gen_scanning_lidar: fov must be in (0, 360]");
  if (profile.waves < 1)
    throw std::invalid_argument("gen_scanning_lidar: profile.waves must be >= 1");

  SplitMix64 rng(seed);
  const SmoothCurve curve = SmoothCurve::draw(profile.waves, rng);

  // Sweep starts at 180 deg: cos is increasing on [180, 360], so any
  // fov <= 180 yields x non-decreasing when the range is constant.
  const double theta0 = 180.0 * kDegToRad;
  const double span = fov_deg * kDegToRad;

  PointCloud cloud;
  cloud.points.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double u = static_cast<double>(i) / static_cast<double>(n - 1);
    const double theta = theta0 + span * u;
    // The profile lives on the full circle; a narrow FoV sees a slice of it
    // rather than a compressed copy, keeping dr/dtheta independent of fov.
    double r = profile.base *
               (1.0 + profile.amplitude * curve.eval(u * fov_deg / 360.0));
    if (jitter != 0.0) r *= 1.0 + jitter * (2.0 * rng.unit() - 1.0);
    const double elev = kBeamElevationsDeg[i % kBeamCount] * kDegToRad;
    cloud.points.push_back({r * std::cos(theta), r * std::sin(theta),
                            r * std::tan(elev)});
  }
  cloud.order_tag = OrderTag::unsorted();  // x-locality is emergent, not claimed
  return cloud;
}

PointCloud gen_stepper_lidar(std::size_t layers, std::size_t points_per_layer,
                             double z_step, std::uint64_t seed) {
  if (layers < 1) throw std::invalid_argument("gen_stepper_lidar: layers must be >= 1");
  if (points_per_layer < 1)
    throw std::invalid_argument("gen_stepper_lidar: points_per_layer must be >= 1");

  SplitMix64 rng(seed);
  PointCloud cloud;
  cloud.points.reserve(layers * points_per_layer);
  const double base = 10.0;
  for (std::size_t layer = 0; layer < layers; ++layer) {
    const double z = static_cast<double>(layer) * z_step;
    for (std::size_t j = 0; j < points_per_layer; ++j) {
      const double alpha = 2.0 * std::numbers::pi * static_cast<double>(j) /
                           static_cast<double>(points_per_layer);
      const double r = base * (1.0 + 0.05 * (2.0 * rng.unit() - 1.0));
      cloud.points.push_back({r * std::cos(alpha), r * std::sin(alpha), z});
    }
  }
  cloud.order_tag = OrderTag::exactly_sorted(Axis::Z);
  return cloud;
}

PointCloud gen_sparse_dense(std::size_t n, std::size_t n_clusters,
                            double sparse_fraction, std::uint64_t seed) {
  if (n_clusters < 1) throw std::invalid_argument("gen_sparse_dense: need >= 1 cluster");
  if (n < n_clusters) throw std::invalid_argument("gen_sparse_dense: n < n_clusters");
  if (sparse_fraction < 0.0 || sparse_fraction > 1.0)
    throw std::invalid_argument("gen_sparse_dense: sparse_fraction must be in [0, 1]");

  SplitMix64 rng(seed);
  const std::size_t n_sparse =
      static_cast<std::size_t>(std::llround(sparse_fraction * static_cast<double>(n)));
  const std::size_t n_dense = n - n_sparse;

  // Tight clusters inside a 20 m region; sparse points across a 100 m cube.
  const double cluster_region = 20.0;
  const double cluster_sigma = 0.2;
  const double sparse_extent = 100.0;

  std::vector<Point> centers;
  centers.reserve(n_clusters);
  for (std::size_t i = 0; i < n_clusters; ++i) {
    centers.push_back({rng.uniform(0.0, cluster_region),
                       rng.uniform(0.0, cluster_region),
                       rng.uniform(0.0, cluster_region)});
  }

  // Storage order mirrors a coarse wide-area pass followed by dwells on the
  // dense objects: the sparse background comes first, then the cluster points
  // interleaved round-robin.
  PointCloud cloud;
  cloud.points.reserve(n);
  for (std::size_t i = 0; i < n_sparse; ++i) {
    cloud.points.push_back({rng.uniform(0.0, sparse_extent),
                            rng.uniform(0.0, sparse_extent),
                            rng.uniform(0.0, sparse_extent)});
  }
  for (std::size_t i = 0; i < n_dense; ++i) {
    const Point& c = centers[i % n_clusters];
    cloud.points.push_back({c[0] + cluster_sigma * rng.normal(),
                            c[1] + cluster_sigma * rng.normal(),
                            c[2] + cluster_sigma * rng.normal()});
  }
  cloud.order_tag = OrderTag::unsorted();
  return cloud;
}

}  // namespace pcs
