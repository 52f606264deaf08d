#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "pcs/point_cloud.hpp"
#include "pcs/sampler_spec.hpp"

namespace pcs {

struct BenchOptions {
  std::vector<Method> methods;
  std::vector<std::size_t> n_values;      // one entry per input size
  std::vector<std::size_t> m_values{1};
  std::vector<std::size_t> k_values{1};
  std::size_t c = 1;
  std::size_t g = 40;
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  SeedPolicy seed_policy = SeedPolicy::RandomFirstPoint;
  unsigned threads = 1;
};

/// One row per (configuration, trial). error is empty for successful runs;
/// infeasible configurations keep their row with the message filled in.
struct BenchRow {
  std::string method;
  std::size_t n = 0, c = 0, m = 0, k = 0;
  std::size_t trial = 0;
  double wall_seconds = 0;
  std::uint64_t dist_evals = 0;
  double coverage_radius = 0;
  double separation = 0;
  double locality_score = 0;
  std::string error;
};

using CloudProvider = std::function<PointCloud(std::size_t n)>;

/// Expands methods x n x m x k x trials, fetches one cloud per n from the
/// provider, and runs every row. Rows may execute on worker threads; output
/// order and all non-timing fields are schedule-independent (per-trial seeds
/// depend only on the base seed and trial index). Wall time wraps the
/// sampler call alone.
std::vector<BenchRow> run_bench(const BenchOptions& options,
                                const CloudProvider& provider);

/// Header row + one line per row; '.' decimal separator, UTF-8.
std::string bench_csv(std::span<const BenchRow> rows);

}  // namespace pcs
