// pcsample: generate, reorder, subsample, and benchmark 3D point clouds.
//
// Subcommands:
//   gen      synthesize a cloud (scan | stepper | sparse) with optional reordering
//   sample   subsample a cloud file, write the sampled indices
//   bench    sweep sampler configurations, write per-trial CSV rows
//   compare  aggregate quality metrics for several methods (CSV/JSON report)
//
// Exit codes: 0 success, 2 usage error, 1 runtime error.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "pcs/bench.hpp"
#include "pcs/io.hpp"
#include "pcs/metrics.hpp"
#include "pcs/order.hpp"
#include "pcs/sampler.hpp"
#include "pcs/synth.hpp"

using namespace pcs;

namespace {

unsigned default_threads() {
  if (const char* env = std::getenv("PCSAMPLE_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  return 1;
}

CloudFormat format_or_throw(const std::string& name) {
  const auto format = parse_format(name);
  if (!format) throw CLI::ValidationError("--format", "unknown format: " + name);
  return *format;
}

Method method_or_throw(const std::string& name) {
  const auto method = parse_method(name);
  if (!method) throw CLI::ValidationError("--method", "unknown method: " + name);
  return *method;
}

Axis axis_or_throw(const std::string& name) {
  const auto axis = parse_axis(name);
  if (!axis) throw CLI::ValidationError("--axis", "unknown axis: " + name);
  return *axis;
}

// --sort accepts exact | bin:<size> | shuffle.
void check_sort_mode(const std::string& mode) {
  if (mode.empty() || mode == "exact" || mode == "shuffle") return;
  if (mode.rfind("bin:", 0) == 0) {
    try {
      (void)std::stoull(mode.substr(4));
      return;
    } catch (const std::exception&) {
      throw CLI::ValidationError("--sort", "bad bin size in: " + mode);
    }
  }
  throw CLI::ValidationError("--sort", "expected exact, bin:<size>, or shuffle");
}

PointCloud apply_sort(PointCloud cloud, const std::string& sort_mode, Axis axis,
                      std::uint64_t seed) {
  check_sort_mode(sort_mode);
  if (sort_mode.empty()) return cloud;
  if (sort_mode == "exact") return exact_sort(cloud, axis);
  if (sort_mode == "shuffle") return shuffle(cloud, seed);
  return bin_approx_sort(cloud, axis, std::stoull(sort_mode.substr(4)), seed);
}

struct GenArgs {
  std::string kind;
  std::size_t n = 2048;
  double fov = 360.0;
  double jitter = 0.01;
  double base = 10.0;
  double amplitude = 0.04;
  int waves = 2;
  std::size_t layers = 64;
  std::size_t ppl = 32;
  double z_step = 0.1;
  std::size_t clusters = 5;
  double sparse_frac = 0.05;
  std::uint64_t seed = 0;
  std::string sort_mode;
  std::string axis = "x";
  std::string out;
  std::string format = "xyz_text";
};

PointCloud generate(const GenArgs& args) {
  if (args.kind == "scan") {
    RangeProfile profile{args.base, args.amplitude, args.waves};
    return gen_scanning_lidar(args.n, args.fov, profile, args.jitter, args.seed);
  }
  if (args.kind == "stepper")
    return gen_stepper_lidar(args.layers, args.ppl, args.z_step, args.seed);
  if (args.kind == "sparse")
    return gen_sparse_dense(args.n, args.clusters, args.sparse_frac, args.seed);
  throw CLI::ValidationError("gen", "unknown generator: " + args.kind);
}

std::vector<std::size_t> parse_size_list(const std::string& csv, const char* flag) {
  std::vector<std::size_t> out;
  std::size_t pos = 0;
  while (pos < csv.size()) {
    const std::size_t comma = csv.find(',', pos);
    const std::string item = csv.substr(pos, comma == std::string::npos
                                                 ? std::string::npos
                                                 : comma - pos);
    try {
      out.push_back(std::stoull(item));
    } catch (const std::exception&) {
      throw CLI::ValidationError(flag, "bad list item: " + item);
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (out.empty()) throw CLI::ValidationError(flag, "empty list");
  return out;
}

nlohmann::json stats_json(const OpStats& stats, double wall_seconds) {
  return nlohmann::json{{"dist_evals", stats.dist_evals},
                        {"dist_writes", stats.dist_writes},
                        {"argmax_scans", stats.argmax_scans},
                        {"iterations", stats.iterations},
                        {"wall_seconds", wall_seconds}};
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
  if (!out.flush()) throw std::runtime_error("write failed for " + path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"point cloud sampling toolkit"};
  app.require_subcommand(1);

  // ---- gen ----
  GenArgs gen_args;
  CLI::App* gen = app.add_subcommand("gen", "generate a synthetic cloud");
  gen->add_option("kind", gen_args.kind, "scan | stepper | sparse")->required();
  gen->add_option("--n", gen_args.n, "point count (scan, sparse)");
  gen->add_option("--fov", gen_args.fov, "horizontal field of view, degrees");
  gen->add_option("--jitter", gen_args.jitter, "relative range noise");
  gen->add_option("--base", gen_args.base, "base range, meters");
  gen->add_option("--amplitude", gen_args.amplitude, "relative range variation");
  gen->add_option("--waves", gen_args.waves, "range profile harmonics");
  gen->add_option("--layers", gen_args.layers, "stepper layer count");
  gen->add_option("--ppl", gen_args.ppl, "points per layer");
  gen->add_option("--z-step", gen_args.z_step, "layer spacing, meters");
  gen->add_option("--clusters", gen_args.clusters, "cluster count (sparse)");
  gen->add_option("--sparse-frac", gen_args.sparse_frac, "fraction of sparse points");
  gen->add_option("--seed", gen_args.seed, "RNG seed");
  gen->add_option("--sort", gen_args.sort_mode, "exact | bin:<size> | shuffle");
  gen->add_option("--axis", gen_args.axis, "sort axis (x|y|z)");
  gen->add_option("--out", gen_args.out, "output file")->required();
  gen->add_option("--format", gen_args.format, "xyz_text | f32_bin");

  // ---- sample ----
  struct {
    std::string in, format = "xyz_text", method, out, stats_json_path;
    std::size_t c = 1, m = 1, k = 1, g = 40;
    std::uint64_t seed = 0;
    std::string first = "random";
  } sample_args;
  CLI::App* sample = app.add_subcommand("sample", "subsample a cloud file");
  sample->add_option("--in", sample_args.in, "input cloud")->required();
  sample->add_option("--format", sample_args.format, "xyz_text | f32_bin");
  sample->add_option("--method", sample_args.method,
                     "rps | fps | afps | npdu-fps | npdu-afps | grid")->required();
  sample->add_option("--c", sample_args.c, "sample count")->required();
  sample->add_option("--m", sample_args.m, "sector count");
  sample->add_option("--k", sample_args.k, "update-window size");
  sample->add_option("--g", sample_args.g, "grid resolution");
  sample->add_option("--seed", sample_args.seed, "RNG seed");
  sample->add_option("--first", sample_args.first, "random | fixed first point");
  sample->add_option("--out", sample_args.out, "output index list")->required();
  sample->add_option("--stats-json", sample_args.stats_json_path,
                     "also write the stats JSON line to this file");

  // ---- bench ----
  struct {
    std::string sweep = "m";
    std::string methods = "fps";
    std::string in, in_format = "xyz_text";
    std::string gen_kind = "scan";
    std::string sort_mode, axis = "x";
    std::string n_list = "2048", m_list = "1", k_list = "1";
    std::size_t c = 512, g = 40;
    std::size_t trials = 1;
    std::uint64_t seed = 0;
    unsigned threads = default_threads();
    std::string first = "random";
    std::string out;
  } bench_args;
  CLI::App* bench = app.add_subcommand("bench", "sweep sampler configurations");
  bench->add_option("--sweep", bench_args.sweep, "m | k | n | mk");
  bench->add_option("--method", bench_args.methods, "comma-separated methods");
  bench->add_option("--in", bench_args.in, "input cloud (otherwise generated)");
  bench->add_option("--in-format", bench_args.in_format, "input format");
  bench->add_option("--gen", bench_args.gen_kind, "generator when no --in");
  bench->add_option("--sort", bench_args.sort_mode, "exact | bin:<size> | shuffle");
  bench->add_option("--axis", bench_args.axis, "sort axis");
  bench->add_option("--n-list", bench_args.n_list, "input sizes (n sweep)");
  bench->add_option("--m-list", bench_args.m_list, "sector counts (m sweep)");
  bench->add_option("--k-list", bench_args.k_list, "window sizes (k sweep)");
  bench->add_option("--c", bench_args.c, "sample count");
  bench->add_option("--g", bench_args.g, "grid resolution");
  bench->add_option("--trials", bench_args.trials, "trials per configuration");
  bench->add_option("--seed", bench_args.seed, "base RNG seed");
  bench->add_option("--threads", bench_args.threads,
                    "worker threads (default $PCSAMPLE_THREADS or 1)");
  bench->add_option("--first", bench_args.first, "random | fixed first point");
  bench->add_option("--out", bench_args.out, "output CSV")->required();

  // ---- compare ----
  struct {
    std::string in, in_format = "xyz_text";
    std::string gen_kind = "sparse";
    std::string methods = "rps,fps";
    std::size_t n = 1000, c = 64, m = 1, k = 1, g = 40;
    std::size_t trials = 1;
    std::uint64_t seed = 0;
    std::string first = "random";
    std::string out_csv, out_json;
  } cmp_args;
  CLI::App* compare_cmd = app.add_subcommand("compare", "quality report for methods");
  compare_cmd->add_option("--in", cmp_args.in, "input cloud (otherwise generated)");
  compare_cmd->add_option("--in-format", cmp_args.in_format, "input format");
  compare_cmd->add_option("--gen", cmp_args.gen_kind, "generator when no --in");
  compare_cmd->add_option("--n", cmp_args.n, "generated point count");
  compare_cmd->add_option("--method", cmp_args.methods, "comma-separated methods");
  compare_cmd->add_option("--c", cmp_args.c, "sample count");
  compare_cmd->add_option("--m", cmp_args.m, "sector count");
  compare_cmd->add_option("--k", cmp_args.k, "update-window size");
  compare_cmd->add_option("--g", cmp_args.g, "grid resolution");
  compare_cmd->add_option("--trials", cmp_args.trials, "trials per method");
  compare_cmd->add_option("--seed", cmp_args.seed, "base RNG seed");
  compare_cmd->add_option("--first", cmp_args.first, "random | fixed first point");
  compare_cmd->add_option("--out-csv", cmp_args.out_csv, "CSV report path");
  compare_cmd->add_option("--out-json", cmp_args.out_json, "JSON report path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*gen) {
      PointCloud cloud = generate(gen_args);
      cloud = apply_sort(std::move(cloud), gen_args.sort_mode,
                         axis_or_throw(gen_args.axis), gen_args.seed);
      write_cloud(cloud, gen_args.out, format_or_throw(gen_args.format));
      std::cerr << "wrote " << cloud.size() << " points (" << to_string(cloud.order_tag)
                << ") to " << gen_args.out << "\n";
    } else if (*sample) {
      const PointCloud cloud =
          read_cloud(sample_args.in, format_or_throw(sample_args.format));
      SamplerSpec spec;
      spec.method = method_or_throw(sample_args.method);
      spec.c = sample_args.c;
      spec.m = sample_args.m;
      spec.k = sample_args.k;
      spec.g = sample_args.g;
      spec.seed = sample_args.seed;
      if (sample_args.first == "random") {
        spec.seed_policy = SeedPolicy::RandomFirstPoint;
      } else if (sample_args.first == "fixed") {
        spec.seed_policy = SeedPolicy::FixedFirstPoint;
      } else {
        throw CLI::ValidationError("--first", "expected random or fixed");
      }

      const auto start = std::chrono::steady_clock::now();
      const SampleResult result = run_sampler(cloud, spec);
      const auto stop = std::chrono::steady_clock::now();
      const double wall = std::chrono::duration<double>(stop - start).count();

      std::string index_lines;
      for (std::size_t idx : result.indices) {
        index_lines += std::to_string(idx);
        index_lines += '\n';
      }
      write_file(sample_args.out, index_lines);

      const std::string line = stats_json(result.stats, wall).dump();
      std::cout << line << "\n";
      if (!sample_args.stats_json_path.empty())
        write_file(sample_args.stats_json_path, line + "\n");
    } else if (*bench) {
      BenchOptions options;
      std::size_t pos = 0;
      const std::string& methods_csv = bench_args.methods;
      while (pos < methods_csv.size()) {
        const std::size_t comma = methods_csv.find(',', pos);
        const std::string name =
            methods_csv.substr(pos, comma == std::string::npos ? std::string::npos
                                                               : comma - pos);
        options.methods.push_back(method_or_throw(name));
        if (comma == std::string::npos) break;
        pos = comma + 1;
      }
      options.c = bench_args.c;
      options.g = bench_args.g;
      options.trials = bench_args.trials;
      options.seed = bench_args.seed;
      options.threads = bench_args.threads;
      options.seed_policy = bench_args.first == "fixed"
                                ? SeedPolicy::FixedFirstPoint
                                : SeedPolicy::RandomFirstPoint;

      if (bench_args.sweep != "m" && bench_args.sweep != "k" &&
          bench_args.sweep != "n" && bench_args.sweep != "mk")
        throw CLI::ValidationError("--sweep", "expected m, k, n, or mk");
      // every list applies; --sweep names the axis being varied
      options.m_values = parse_size_list(bench_args.m_list, "--m-list");
      options.k_values = parse_size_list(bench_args.k_list, "--k-list");
      options.n_values = parse_size_list(bench_args.n_list, "--n-list");

      CloudProvider provider;
      if (!bench_args.in.empty()) {
        if (bench_args.sweep == "n")
          throw CLI::ValidationError("--sweep", "n sweep needs generated input");
        PointCloud cloud =
            read_cloud(bench_args.in, format_or_throw(bench_args.in_format));
        options.n_values = {cloud.size()};
        provider = [cloud](std::size_t) { return cloud; };
      } else {
        // flag problems must surface as usage errors, not per-row errors
        const Axis axis = axis_or_throw(bench_args.axis);
        if (bench_args.gen_kind != "scan" && bench_args.gen_kind != "stepper" &&
            bench_args.gen_kind != "sparse")
          throw CLI::ValidationError("--gen", "unknown generator: " + bench_args.gen_kind);
        check_sort_mode(bench_args.sort_mode);
        const auto args = bench_args;
        provider = [args, axis](std::size_t n) {
          GenArgs g;
          g.kind = args.gen_kind;
          g.n = n;
          g.seed = args.seed ^ static_cast<std::uint64_t>(n);
          PointCloud cloud = generate(g);
          return apply_sort(std::move(cloud), args.sort_mode, axis, g.seed);
        };
      }

      const std::vector<BenchRow> rows = run_bench(options, provider);
      write_file(bench_args.out, bench_csv(rows));
      std::cerr << "wrote " << rows.size() << " rows to " << bench_args.out
                << " (threads=" << options.threads << ")\n";
    } else if (*compare_cmd) {
      PointCloud cloud;
      if (!cmp_args.in.empty()) {
        cloud = read_cloud(cmp_args.in, format_or_throw(cmp_args.in_format));
      } else {
        GenArgs g;
        g.kind = cmp_args.gen_kind;
        g.n = cmp_args.n;
        g.seed = cmp_args.seed;
        cloud = generate(g);
      }

      std::vector<SamplerSpec> specs;
      std::size_t pos = 0;
      while (pos < cmp_args.methods.size()) {
        const std::size_t comma = cmp_args.methods.find(',', pos);
        const std::string name = cmp_args.methods.substr(
            pos, comma == std::string::npos ? std::string::npos : comma - pos);
        SamplerSpec spec;
        spec.method = method_or_throw(name);
        spec.c = cmp_args.c;
        spec.m = cmp_args.m;
        spec.k = cmp_args.k;
        spec.g = cmp_args.g;
        spec.seed_policy = cmp_args.first == "fixed" ? SeedPolicy::FixedFirstPoint
                                                     : SeedPolicy::RandomFirstPoint;
        specs.push_back(spec);
        if (comma == std::string::npos) break;
        pos = comma + 1;
      }

      const QualityReport report =
          compare(cloud, specs, cmp_args.trials, cmp_args.seed);
      if (!cmp_args.out_csv.empty()) write_file(cmp_args.out_csv, report_csv(report));
      if (!cmp_args.out_json.empty())
        write_file(cmp_args.out_json, report_json(report));
      if (cmp_args.out_csv.empty() && cmp_args.out_json.empty())
        std::cout << report_csv(report);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
