#include "pcs/metrics.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "pcs/order.hpp"
#include "pcs/rng.hpp"
#include "pcs/sampler.hpp"

namespace pcs {

double coverage_radius(const PointCloud& cloud,
                       std::span<const std::size_t> samples) {
  if (samples.empty())
    throw std::invalid_argument("coverage_radius: sample set is empty");
  const std::size_t n = cloud.size();
  for (std::size_t s : samples)
    if (s >= n) throw std::invalid_argument("coverage_radius: index out of range");

  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t s : samples) {
      best = std::min(best, squared_dist(cloud.points[i], cloud.points[s]));
      if (best == 0.0) break;
    }
    worst = std::max(worst, best);
  }
  return std::sqrt(worst);
}

double separation(const PointCloud& cloud,
                  std::span<const std::size_t> samples) {
  if (samples.size() < 2)
    throw std::invalid_argument("separation: need at least 2 samples");
  const std::size_t n = cloud.size();
  for (std::size_t s : samples)
    if (s >= n) throw std::invalid_argument("separation: index out of range");

  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < samples.size(); ++i) {
    for (std::size_t j = i + 1; j < samples.size(); ++j) {
      best = std::min(best,
                      squared_dist(cloud.points[samples[i]], cloud.points[samples[j]]));
    }
  }
  return std::sqrt(best);
}

namespace {

struct Accumulator {
  double sum = 0, sum_sq = 0;
  std::size_t count = 0;

  void add(double v) {
    sum += v;
    sum_sq += v * v;
    ++count;
  }
  double mean() const { return count ? sum / static_cast<double>(count) : 0.0; }
  double stddev() const {
    if (count < 2) return 0.0;
    const double m = mean();
    const double var = (sum_sq - static_cast<double>(count) * m * m) /
                       static_cast<double>(count - 1);
    return var > 0.0 ? std::sqrt(var) : 0.0;
  }
};

}  // namespace

QualityReport compare(const PointCloud& cloud,
                      const std::vector<SamplerSpec>& specs,
                      std::size_t trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("compare: trials must be >= 1");

  QualityReport report;
  report.cloud_digest = cloud_digest(cloud);
  report.n = cloud.size();
  report.locality_axis = cloud.order_tag.kind == OrderKind::Unsorted
                             ? Axis::X
                             : cloud.order_tag.axis;
  report.locality =
      cloud.size() >= 2 ? locality_score(cloud, report.locality_axis) : 0.0;

  // One seed per trial, shared across specs: identical specs yield identical
  // rows no matter where they sit in the list.
  std::vector<std::uint64_t> trial_seeds;
  trial_seeds.reserve(trials);
  SplitMix64 rng(seed);
  for (std::size_t t = 0; t < trials; ++t) trial_seeds.push_back(rng.next());

  for (std::size_t spec_idx = 0; spec_idx < specs.size(); ++spec_idx) {
    MethodRow row;
    row.spec = specs[spec_idx];
    row.trials = trials;

    Accumulator coverage, sep, wall, evals, writes, scans, iters;
    for (std::size_t t = 0; t < trials; ++t) {
      SamplerSpec spec = specs[spec_idx];
      spec.seed = trial_seeds[t];
      SampleResult result;
      try {
        const auto start = std::chrono::steady_clock::now();
        result = run_sampler(cloud, spec);
        const auto stop = std::chrono::steady_clock::now();
        wall.add(std::chrono::duration<double>(stop - start).count());
      } catch (const std::exception& e) {
        throw std::invalid_argument("compare: spec " + std::to_string(spec_idx) +
                                    " (" + method_name(spec.method) +
                                    ") failed: " + e.what());
      }
      coverage.add(coverage_radius(cloud, result.indices));
      if (result.indices.size() >= 2) sep.add(separation(cloud, result.indices));
      evals.add(static_cast<double>(result.stats.dist_evals));
      writes.add(static_cast<double>(result.stats.dist_writes));
      scans.add(static_cast<double>(result.stats.argmax_scans));
      iters.add(static_cast<double>(result.stats.iterations));
    }

    row.coverage_mean = coverage.mean();
    row.coverage_std = coverage.stddev();
    row.separation_mean = sep.mean();
    row.separation_std = sep.stddev();
    row.wall_mean = wall.mean();
    row.wall_std = wall.stddev();
    row.dist_evals_mean = evals.mean();
    row.dist_writes_mean = writes.mean();
    row.argmax_scans_mean = scans.mean();
    row.iterations_mean = iters.mean();
    report.rows.push_back(std::move(row));
  }
  return report;
}

namespace {

std::string fmt_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::string report_csv(const QualityReport& report) {
  std::ostringstream out;
  out << "method,params,n,c,trials,coverage_radius_mean,coverage_radius_std,"
         "separation_mean,separation_std,wall_seconds_mean,wall_seconds_std,"
         "dist_evals_mean,dist_writes_mean,argmax_scans_mean,iterations_mean,"
         "locality_axis,locality_score,cloud_digest\n";
  for (const MethodRow& row : report.rows) {
    out << method_name(row.spec.method) << ",\"" << spec_params(row.spec) << "\","
        << report.n << ',' << row.spec.c << ',' << row.trials << ','
        << fmt_double(row.coverage_mean) << ',' << fmt_double(row.coverage_std)
        << ',' << fmt_double(row.separation_mean) << ','
        << fmt_double(row.separation_std) << ',' << fmt_double(row.wall_mean)
        << ',' << fmt_double(row.wall_std) << ','
        << fmt_double(row.dist_evals_mean) << ','
        << fmt_double(row.dist_writes_mean) << ','
        << fmt_double(row.argmax_scans_mean) << ','
        << fmt_double(row.iterations_mean) << ','
        << axis_name(report.locality_axis) << ',' << fmt_double(report.locality)
        << ',' << report.cloud_digest << '\n';
  }
  return out.str();
}

std::string report_json(const QualityReport& report) {
  nlohmann::json j;
  j["cloud_digest"] = report.cloud_digest;
  j["n"] = report.n;
  j["locality_axis"] = axis_name(report.locality_axis);
  j["locality_score"] = report.locality;
  j["rows"] = nlohmann::json::array();
  for (const MethodRow& row : report.rows) {
    nlohmann::json r;
    r["method"] = method_name(row.spec.method);
    r["params"] = {{"c", row.spec.c}, {"m", row.spec.m}, {"k", row.spec.k},
                   {"g", row.spec.g}};
    r["trials"] = row.trials;
    r["coverage_radius"] = {{"mean", row.coverage_mean}, {"std", row.coverage_std}};
    r["separation"] = {{"mean", row.separation_mean}, {"std", row.separation_std}};
    r["wall_seconds"] = {{"mean", row.wall_mean}, {"std", row.wall_std}};
    r["op_counts"] = {{"dist_evals", row.dist_evals_mean},
                      {"dist_writes", row.dist_writes_mean},
                      {"argmax_scans", row.argmax_scans_mean},
                      {"iterations", row.iterations_mean}};
    j["rows"].push_back(std::move(r));
  }
  return j.dump(2) + "\n";
}

}  // namespace pcs
