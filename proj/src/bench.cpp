#include "pcs/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "pcs/metrics.hpp"
#include "pcs/order.hpp"
#include "pcs/rng.hpp"
#include "pcs/sampler.hpp"

namespace pcs {

namespace {

struct Config {
  Method method;
  std::size_t n_index;  // into clouds
  std::size_t m, k;
};

std::string fmt_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::vector<BenchRow> run_bench(const BenchOptions& options,
                                const CloudProvider& provider) {
  if (options.methods.empty()) throw std::invalid_argument("run_bench: no methods");
  if (options.n_values.empty()) throw std::invalid_argument("run_bench: no input sizes");
  if (options.trials < 1) throw std::invalid_argument("run_bench: trials must be >= 1");

  std::vector<PointCloud> clouds;
  std::vector<double> cloud_locality;
  clouds.reserve(options.n_values.size());
  for (std::size_t n : options.n_values) {
    clouds.push_back(provider(n));
    const PointCloud& cloud = clouds.back();
    const Axis axis = cloud.order_tag.kind == OrderKind::Unsorted
                          ? Axis::X
                          : cloud.order_tag.axis;
    cloud_locality.push_back(cloud.size() >= 2 ? locality_score(cloud, axis) : 0.0);
  }

  std::vector<Config> configs;
  for (Method method : options.methods)
    for (std::size_t ni = 0; ni < clouds.size(); ++ni)
      for (std::size_t m : options.m_values)
        for (std::size_t k : options.k_values) configs.push_back({method, ni, m, k});

  // Per-trial seeds depend only on the base seed and trial index, so row
  // contents are independent of the worker schedule.
  std::vector<std::uint64_t> trial_seeds;
  SplitMix64 rng(options.seed);
  for (std::size_t t = 0; t < options.trials; ++t) trial_seeds.push_back(rng.next());

  std::vector<BenchRow> rows(configs.size() * options.trials);
  auto run_row = [&](std::size_t row_idx) {
    const Config& cfg = configs[row_idx / options.trials];
    const std::size_t trial = row_idx % options.trials;
    const PointCloud& cloud = clouds[cfg.n_index];

    BenchRow& row = rows[row_idx];
    row.method = method_name(cfg.method);
    row.n = cloud.size();
    row.c = options.c;
    row.m = cfg.m;
    row.k = cfg.k;
    row.trial = trial;
    row.locality_score = cloud_locality[cfg.n_index];

    SamplerSpec spec;
    spec.method = cfg.method;
    spec.c = options.c;
    spec.m = cfg.m;
    spec.k = cfg.k;
    spec.g = options.g;
    spec.seed = trial_seeds[trial];
    spec.seed_policy = options.seed_policy;

    try {
      const auto start = std::chrono::steady_clock::now();
      // Sector-level parallelism is excluded here so wall_seconds reflects
      // one core's work; harness parallelism is across rows.
      const SampleResult result = run_sampler(cloud, spec, 1);
      const auto stop = std::chrono::steady_clock::now();
      row.wall_seconds = std::chrono::duration<double>(stop - start).count();
      row.dist_evals = result.stats.dist_evals;
      row.coverage_radius = coverage_radius(cloud, result.indices);
      row.separation =
          result.indices.size() >= 2 ? separation(cloud, result.indices) : 0.0;
    } catch (const std::exception& e) {
      row.error = e.what();
    }
  };

  if (options.threads <= 1) {
    for (std::size_t i = 0; i < rows.size(); ++i) run_row(i);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= rows.size()) return;
        run_row(i);
      }
    };
    std::vector<std::thread> pool;
    const unsigned count = static_cast<unsigned>(
        std::min<std::size_t>(options.threads, rows.size()));
    for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  return rows;
}

std::string bench_csv(std::span<const BenchRow> rows) {
  std::ostringstream out;
  out << "method,n,c,m,k,trial,wall_seconds,dist_evals,coverage_radius,"
         "separation,locality_score,error\n";
  for (const BenchRow& row : rows) {
    out << row.method << ',' << row.n << ',' << row.c << ',' << row.m << ','
        << row.k << ',' << row.trial << ',' << fmt_double(row.wall_seconds) << ','
        << row.dist_evals << ',' << fmt_double(row.coverage_radius) << ','
        << fmt_double(row.separation) << ',' << fmt_double(row.locality_score)
        << ',' << row.error << '\n';
  }
  return out.str();
}

}  // namespace pcs
