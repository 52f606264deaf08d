#include "pcs/sampler.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

#include "pcs/rng.hpp"

namespace pcs {

namespace {

constexpr double kInfinity = std::numeric_limits<double>::infinity();

void check_sample_count(std::size_t c, std::size_t n, const char* who) {
  if (c < 1) throw std::invalid_argument(std::string(who) + ": c must be >= 1");
  if (c > n) throw std::invalid_argument(std::string(who) + ": c exceeds point count");
}

// Runs fn over sector ids [0, m) on up to `threads` workers. Each sector's
// output slot is owned by exactly one worker, so the merge is deterministic.
template <typename Fn>
void for_each_sector(std::size_t m, unsigned threads, const Fn& fn) {
  if (threads <= 1 || m <= 1) {
    for (std::size_t s = 0; s < m; ++s) fn(s);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t s = next.fetch_add(1);
      if (s >= m) return;
      fn(s);
    }
  };
  const unsigned count = static_cast<unsigned>(std::min<std::size_t>(threads, m));
  std::vector<std::thread> pool;
  pool.reserve(count);
  for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
}

SampleResult sectored(const PointCloud& cloud, std::size_t c, std::size_t m,
                      std::optional<std::size_t> window_k, SeedPolicy seed_policy,
                      std::uint64_t seed, unsigned threads) {
  const SectorPlan plan = SectorPlan::make(cloud.size(), c, m);

  std::vector<SampleResult> partial(m);
  std::exception_ptr failure;
  std::mutex failure_mutex;
  for_each_sector(m, threads, [&](std::size_t s) {
    try {
      partial[s] = detail::local_fps(cloud, plan.ranges[s], plan.quotas[s],
                                     window_k, seed_policy,
                                     seed ^ static_cast<std::uint64_t>(s));
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  });
  if (failure) std::rethrow_exception(failure);

  SampleResult out;
  out.indices.reserve(c);
  out.sector_of.reserve(c);
  for (std::size_t s = 0; s < m; ++s) {
    for (std::size_t idx : partial[s].indices) {
      out.indices.push_back(idx);
      out.sector_of.push_back(static_cast<std::uint32_t>(s));
    }
    out.stats += partial[s].stats;
  }
  return out;
}

}  // namespace

namespace detail {

SampleResult local_fps(const PointCloud& cloud, IndexRange sector,
                       std::size_t quota, std::optional<std::size_t> window_k,
                       SeedPolicy seed_policy, std::uint64_t seed,
                       DistanceTrace* trace) {
  if (sector.end > cloud.size() || sector.begin >= sector.end)
    throw std::invalid_argument("local_fps: sector out of range");
  if (quota < 1 || quota > sector.size())
    throw std::invalid_argument("local_fps: quota infeasible for sector");
  if (window_k && *window_k < 1)
    throw std::invalid_argument("local_fps: window size must be >= 1");

  const std::size_t n = sector.size();
  SplitMix64 rng(seed);

  std::vector<double> distance(n, kInfinity);
  std::vector<char> sampled(n, 0);
  const Point* const points = cloud.points.data() + sector.begin;
  double* const d = distance.data();

  SampleResult out;
  out.indices.reserve(quota);

  std::size_t current = seed_policy == SeedPolicy::RandomFirstPoint
                            ? sector.begin + rng.below(n)
                            : sector.begin;
  out.indices.push_back(current);
  sampled[current - sector.begin] = 1;

  std::uint64_t evals = 0, writes = 0;
  for (std::size_t i = 1; i < quota; ++i) {
    const IndexRange window = window_k ? update_window(sector, current, *window_k)
                                       : sector;
    const Point pivot = cloud.points[current];
    const std::size_t wb = window.begin - sector.begin;
    const std::size_t we = window.end - sector.begin;
    for (std::size_t j = wb; j < we; ++j) {
      const double dx = points[j][0] - pivot[0];
      const double dy = points[j][1] - pivot[1];
      const double dz = points[j][2] - pivot[2];
      const double dist = dx * dx + dy * dy + dz * dz;
      const bool lower = dist <= d[j];
      writes += lower;
      d[j] = lower ? dist : d[j];
    }
    evals += we - wb;
    if (trace) trace->snapshots.push_back(distance);

    // Argmax over the whole sector, lowest index on ties, sampled indices
    // skipped. Every sampled point has already been a pivot inside its own
    // window, so it sits at distance 0: the value pass never needs the
    // sampled flags, and the index pass only consults them to resolve
    // all-zero ties on clouds with coincident points.
    double m0 = -kInfinity, m1 = -kInfinity, m2 = -kInfinity, m3 = -kInfinity;
    std::size_t j = 0;
    for (; j + 4 <= n; j += 4) {
      m0 = d[j] > m0 ? d[j] : m0;
      m1 = d[j + 1] > m1 ? d[j + 1] : m1;
      m2 = d[j + 2] > m2 ? d[j + 2] : m2;
      m3 = d[j + 3] > m3 ? d[j + 3] : m3;
    }
    for (; j < n; ++j) m0 = d[j] > m0 ? d[j] : m0;
    const double best_dist = std::max(std::max(m0, m1), std::max(m2, m3));

    std::size_t best = 0;
    for (std::size_t probe = 0; probe < n; ++probe) {
      if (d[probe] == best_dist && !sampled[probe]) {
        best = probe;
        break;
      }
    }
    out.stats.argmax_scans += n;
    ++out.stats.iterations;

    current = sector.begin + best;
    out.indices.push_back(current);
    sampled[best] = 1;
  }
  out.stats.dist_evals = evals;
  out.stats.dist_writes = writes;

  out.sector_of.assign(out.indices.size(), 0);
  return out;
}

}  // namespace detail

SampleResult fps(const PointCloud& cloud, std::size_t c, SeedPolicy seed_policy,
                 std::uint64_t seed) {
  check_sample_count(c, cloud.size(), "fps");
  return detail::local_fps(cloud, {0, cloud.size()}, c, std::nullopt,
                           seed_policy, seed);
}

SampleResult rps(const PointCloud& cloud, std::size_t c, std::uint64_t seed) {
  check_sample_count(c, cloud.size(), "rps");
  SplitMix64 rng(seed);
  SampleResult out;
  out.indices = rng.sample_without_replacement(cloud.size(), c);
  out.sector_of.assign(c, 0);
  return out;
}

SampleResult afps(const PointCloud& cloud, std::size_t c, std::size_t m,
                  SeedPolicy seed_policy, std::uint64_t seed, unsigned threads) {
  check_sample_count(c, cloud.size(), "afps");
  return sectored(cloud, c, m, std::nullopt, seed_policy, seed, threads);
}

SampleResult npdu_fps(const PointCloud& cloud, std::size_t c, std::size_t k,
                      SeedPolicy seed_policy, std::uint64_t seed) {
  check_sample_count(c, cloud.size(), "npdu_fps");
  return detail::local_fps(cloud, {0, cloud.size()}, c, k, seed_policy, seed);
}

SampleResult npdu_afps(const PointCloud& cloud, std::size_t c, std::size_t m,
                       std::size_t k, SeedPolicy seed_policy, std::uint64_t seed,
                       unsigned threads) {
  check_sample_count(c, cloud.size(), "npdu_afps");
  return sectored(cloud, c, m, k, seed_policy, seed, threads);
}

SampleResult grid_voxel_sample(const PointCloud& cloud, std::size_t c,
                               std::size_t g, std::uint64_t seed) {
  check_sample_count(c, cloud.size(), "grid_voxel_sample");
  if (g < 1) throw std::invalid_argument("grid_voxel_sample: g must be >= 1");

  const std::size_t n = cloud.size();
  Point lo = cloud.points[0];
  Point hi = cloud.points[0];
  for (const Point& p : cloud.points) {
    for (int a = 0; a < 3; ++a) {
      lo[a] = std::min(lo[a], p[a]);
      hi[a] = std::max(hi[a], p[a]);
    }
  }

  auto voxel_of = [&](const Point& p) {
    std::uint64_t id = 0;
    for (int a = 0; a < 3; ++a) {
      const double extent = hi[a] - lo[a];
      std::size_t cell = 0;
      if (extent > 0.0) {
        cell = static_cast<std::size_t>((p[a] - lo[a]) / extent *
                                        static_cast<double>(g));
        if (cell >= g) cell = g - 1;  // upper boundary lands in the last cell
      }
      id = id * g + cell;
    }
    return id;
  };

  // Occupied voxels ordered by voxel id: deterministic regardless of point
  // order within a voxel (members stay in storage order).
  std::map<std::uint64_t, std::vector<std::size_t>> voxels;
  for (std::size_t i = 0; i < n; ++i) voxels[voxel_of(cloud.points[i])].push_back(i);

  std::vector<const std::vector<std::size_t>*> occupied;
  occupied.reserve(voxels.size());
  for (const auto& [id, members] : voxels) occupied.push_back(&members);

  SplitMix64 rng(seed);
  SampleResult out;
  out.indices.reserve(c);

  const std::size_t from_voxels = std::min(c, occupied.size());
  std::vector<char> taken(n, 0);
  for (std::size_t pick : rng.sample_without_replacement(occupied.size(), from_voxels)) {
    const std::vector<std::size_t>& members = *occupied[pick];
    const std::size_t idx = members[rng.below(members.size())];
    out.indices.push_back(idx);
    taken[idx] = 1;
  }

  if (from_voxels < c) {
    std::vector<std::size_t> rest;
    rest.reserve(n - from_voxels);
    for (std::size_t i = 0; i < n; ++i)
      if (!taken[i]) rest.push_back(i);
    for (std::size_t pick :
         rng.sample_without_replacement(rest.size(), c - from_voxels)) {
      out.indices.push_back(rest[pick]);
    }
  }

  out.sector_of.assign(c, 0);
  return out;
}

SampleResult run_sampler(const PointCloud& cloud, const SamplerSpec& spec,
                         unsigned threads) {
  switch (spec.method) {
    case Method::Rps:
      return rps(cloud, spec.c, spec.seed);
    case Method::Fps:
      return fps(cloud, spec.c, spec.seed_policy, spec.seed);
    case Method::Afps:
      return afps(cloud, spec.c, spec.m, spec.seed_policy, spec.seed, threads);
    case Method::NpduFps:
      return npdu_fps(cloud, spec.c, spec.k, spec.seed_policy, spec.seed);
    case Method::NpduAfps:
      return npdu_afps(cloud, spec.c, spec.m, spec.k, spec.seed_policy, spec.seed,
                       threads);
    case Method::GridVoxel:
      return grid_voxel_sample(cloud, spec.c, spec.g, spec.seed);
  }
  throw std::invalid_argument("run_sampler: unknown method");
}

}  // namespace pcs
