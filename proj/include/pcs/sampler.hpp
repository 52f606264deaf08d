#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pcs/point_cloud.hpp"
#include "pcs/sampler_spec.hpp"
#include "pcs/sectors.hpp"

namespace pcs {

/// Per-iteration snapshots of the evolving min-distance array, for property
/// tests (monotonicity, zeroing of sampled points). Filled only when a trace
/// is passed to the detail entry points.
struct DistanceTrace {
  std::vector<std::vector<double>> snapshots;
};

namespace detail {

/// Greedy farthest-point loop over one contiguous sector, shared by all FPS
/// variants. The distance array starts at +infinity; each iteration measures
/// squared distances from the newly sampled point over the update window
/// (the whole sector when window_k is empty, the centered clamped k-window
/// otherwise), lowers the array with the rule dist <= d[j], then argmax-scans
/// the whole sector skipping already-sampled indices, lowest index on ties.
///
/// Skipping sampled indices matters under windowed updates: a sampled point
/// that later windows never touch keeps a stale positive distance and would
/// otherwise win again. It also keeps the result duplicate-free on clouds
/// with coincident points. With full windows every sampled point is zeroed
/// anyway, so the exclusion never changes the classic result.
SampleResult local_fps(const PointCloud& cloud, IndexRange sector,
                       std::size_t quota, std::optional<std::size_t> window_k,
                       SeedPolicy seed_policy, std::uint64_t seed,
                       DistanceTrace* trace = nullptr);

}  // namespace detail

/// Classic farthest point sampling. dist_evals = (c-1) * N exactly.
SampleResult fps(const PointCloud& cloud, std::size_t c, SeedPolicy seed_policy,
                 std::uint64_t seed);

/// Uniform draw of c distinct indices without replacement. No distance work.
SampleResult rps(const PointCloud& cloud, std::size_t c, std::uint64_t seed);

/// Sector-partitioned FPS: an independent local FPS per contiguous sector,
/// each with quota c/m (remainder to the first sectors) and its own RNG
/// stream (seed ^ sector_id). Sectors may run on worker threads; results are
/// concatenated in sector order, so the output is schedule-independent.
SampleResult afps(const PointCloud& cloud, std::size_t c, std::size_t m,
                  SeedPolicy seed_policy, std::uint64_t seed,
                  unsigned threads = 1);

/// FPS with the distance pass restricted to the k points stored nearest the
/// newly sampled index. The argmax still scans everything, so untouched
/// points keep the +infinity sentinel and the lowest untouched index wins
/// early scans, spreading samples across storage order.
SampleResult npdu_fps(const PointCloud& cloud, std::size_t c, std::size_t k,
                      SeedPolicy seed_policy, std::uint64_t seed);

/// Windowed updates applied per sector: afps with npdu inside each sector.
SampleResult npdu_afps(const PointCloud& cloud, std::size_t c, std::size_t m,
                       std::size_t k, SeedPolicy seed_policy,
                       std::uint64_t seed, unsigned threads = 1);

/// Voxel-grid baseline: bucket points into a g^3 grid over the bounding box,
/// sample one random point from each of min(c, occupied) randomly chosen
/// occupied voxels, then top up with uniform unsampled points if c exceeds
/// the occupied-voxel count.
SampleResult grid_voxel_sample(const PointCloud& cloud, std::size_t c,
                               std::size_t g, std::uint64_t seed);

/// Dispatch on spec.method. threads only affects AFPS-variant scheduling.
SampleResult run_sampler(const PointCloud& cloud, const SamplerSpec& spec,
                         unsigned threads = 1);

}  // namespace pcs
