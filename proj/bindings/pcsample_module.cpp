// Python bindings: numpy (N, 3) float64 arrays in, index arrays and stats
// dicts out. Thin conversion layer over the C++ library.

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>

#include "pcs/metrics.hpp"
#include "pcs/order.hpp"
#include "pcs/sampler.hpp"
#include "pcs/synth.hpp"

namespace py = pybind11;
using namespace pcs;

namespace {

using Array = py::array_t<double, py::array::c_style | py::array::forcecast>;

PointCloud cloud_from_array(const Array& array) {
  const auto buf = array.request();
  if (buf.ndim != 2 || buf.shape[1] != 3)
    throw std::invalid_argument("expected an (N, 3) array");
  const auto* data = static_cast<const double*>(buf.ptr);
  PointCloud cloud;
  cloud.points.reserve(static_cast<std::size_t>(buf.shape[0]));
  for (py::ssize_t i = 0; i < buf.shape[0]; ++i)
    cloud.points.push_back({data[i * 3], data[i * 3 + 1], data[i * 3 + 2]});
  return cloud;
}

py::array_t<double> array_from_cloud(const PointCloud& cloud) {
  py::array_t<double> out({static_cast<py::ssize_t>(cloud.size()), py::ssize_t{3}});
  auto view = out.mutable_unchecked<2>();
  for (std::size_t i = 0; i < cloud.size(); ++i)
    for (int a = 0; a < 3; ++a) view(static_cast<py::ssize_t>(i), a) = cloud.points[i][a];
  return out;
}

Axis axis_arg(const std::string& name) {
  const auto axis = parse_axis(name);
  if (!axis) throw std::invalid_argument("axis must be x, y, or z");
  return *axis;
}

SeedPolicy first_arg(const std::string& name) {
  if (name == "random") return SeedPolicy::RandomFirstPoint;
  if (name == "fixed") return SeedPolicy::FixedFirstPoint;
  throw std::invalid_argument("first must be 'random' or 'fixed'");
}

py::dict stats_dict(const OpStats& stats) {
  py::dict d;
  d["dist_evals"] = stats.dist_evals;
  d["dist_writes"] = stats.dist_writes;
  d["argmax_scans"] = stats.argmax_scans;
  d["iterations"] = stats.iterations;
  return d;
}

py::tuple result_tuple(const SampleResult& result) {
  py::array_t<std::int64_t> indices(static_cast<py::ssize_t>(result.indices.size()));
  py::array_t<std::int64_t> sectors(static_cast<py::ssize_t>(result.sector_of.size()));
  auto iv = indices.mutable_unchecked<1>();
  auto sv = sectors.mutable_unchecked<1>();
  for (std::size_t i = 0; i < result.indices.size(); ++i) {
    iv(static_cast<py::ssize_t>(i)) = static_cast<std::int64_t>(result.indices[i]);
    sv(static_cast<py::ssize_t>(i)) = static_cast<std::int64_t>(result.sector_of[i]);
  }
  return py::make_tuple(indices, sectors, stats_dict(result.stats));
}

std::vector<std::size_t> index_vector(const py::array_t<std::int64_t>& array) {
  const auto view = array.unchecked<1>();
  std::vector<std::size_t> out;
  out.reserve(static_cast<std::size_t>(view.shape(0)));
  for (py::ssize_t i = 0; i < view.shape(0); ++i) {
    if (view(i) < 0) throw std::invalid_argument("negative index");
    out.push_back(static_cast<std::size_t>(view(i)));
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "point cloud sampling: FPS, sector-partitioned FPS, windowed "
            "distance updates, baselines, and quality metrics";

  // generators
  m.def(
      "gen_scanning_lidar",
      [](std::size_t n, double fov_deg, std::uint64_t seed, double jitter,
         double base, double amplitude, int waves) {
        return array_from_cloud(gen_scanning_lidar(
            n, fov_deg, RangeProfile{base, amplitude, waves}, jitter, seed));
      },
      py::arg("n"), py::arg("fov_deg") = 360.0, py::arg("seed") = 0,
      py::arg("jitter") = 0.01, py::arg("base") = 10.0,
      py::arg("amplitude") = 0.04, py::arg("waves") = 2);
  m.def(
      "gen_stepper_lidar",
      [](std::size_t layers, std::size_t points_per_layer, double z_step,
         std::uint64_t seed) {
        return array_from_cloud(
            gen_stepper_lidar(layers, points_per_layer, z_step, seed));
      },
      py::arg("layers"), py::arg("points_per_layer"), py::arg("z_step") = 0.1,
      py::arg("seed") = 0);
  m.def(
      "gen_sparse_dense",
      [](std::size_t n, std::size_t n_clusters, double sparse_fraction,
         std::uint64_t seed) {
        return array_from_cloud(gen_sparse_dense(n, n_clusters, sparse_fraction, seed));
      },
      py::arg("n"), py::arg("n_clusters") = 5, py::arg("sparse_fraction") = 0.05,
      py::arg("seed") = 0);

  // orderings
  m.def(
      "exact_sort",
      [](const Array& points, const std::string& axis) {
        return array_from_cloud(exact_sort(cloud_from_array(points), axis_arg(axis)));
      },
      py::arg("points"), py::arg("axis") = "x");
  m.def(
      "bin_approx_sort",
      [](const Array& points, const std::string& axis, std::size_t bin_size,
         std::uint64_t seed) {
        return array_from_cloud(bin_approx_sort(cloud_from_array(points),
                                                axis_arg(axis), bin_size, seed));
      },
      py::arg("points"), py::arg("axis"), py::arg("bin_size"), py::arg("seed") = 0);
  m.def(
      "shuffle",
      [](const Array& points, std::uint64_t seed) {
        return array_from_cloud(shuffle(cloud_from_array(points), seed));
      },
      py::arg("points"), py::arg("seed") = 0);
  m.def(
      "locality_score",
      [](const Array& points, const std::string& axis) {
        return locality_score(cloud_from_array(points), axis_arg(axis));
      },
      py::arg("points"), py::arg("axis") = "x");

  // samplers: each returns (indices, sector_of, stats_dict)
  m.def(
      "fps",
      [](const Array& points, std::size_t c, std::uint64_t seed,
         const std::string& first) {
        return result_tuple(fps(cloud_from_array(points), c, first_arg(first), seed));
      },
      py::arg("points"), py::arg("c"), py::arg("seed") = 0,
      py::arg("first") = "random");
  m.def(
      "rps",
      [](const Array& points, std::size_t c, std::uint64_t seed) {
        return result_tuple(rps(cloud_from_array(points), c, seed));
      },
      py::arg("points"), py::arg("c"), py::arg("seed") = 0);
  m.def(
      "afps",
      [](const Array& points, std::size_t c, std::size_t m, std::uint64_t seed,
         const std::string& first, unsigned threads) {
        return result_tuple(
            afps(cloud_from_array(points), c, m, first_arg(first), seed, threads));
      },
      py::arg("points"), py::arg("c"), py::arg("m"), py::arg("seed") = 0,
      py::arg("first") = "random", py::arg("threads") = 1);
  m.def(
      "npdu_fps",
      [](const Array& points, std::size_t c, std::size_t k, std::uint64_t seed,
         const std::string& first) {
        return result_tuple(
            npdu_fps(cloud_from_array(points), c, k, first_arg(first), seed));
      },
      py::arg("points"), py::arg("c"), py::arg("k"), py::arg("seed") = 0,
      py::arg("first") = "random");
  m.def(
      "npdu_afps",
      [](const Array& points, std::size_t c, std::size_t m, std::size_t k,
         std::uint64_t seed, const std::string& first, unsigned threads) {
        return result_tuple(npdu_afps(cloud_from_array(points), c, m, k,
                                      first_arg(first), seed, threads));
      },
      py::arg("points"), py::arg("c"), py::arg("m"), py::arg("k"),
      py::arg("seed") = 0, py::arg("first") = "random", py::arg("threads") = 1);
  m.def(
      "grid_voxel_sample",
      [](const Array& points, std::size_t c, std::size_t g, std::uint64_t seed) {
        return result_tuple(grid_voxel_sample(cloud_from_array(points), c, g, seed));
      },
      py::arg("points"), py::arg("c"), py::arg("g") = 40, py::arg("seed") = 0);

  // metrics
  m.def(
      "coverage_radius",
      [](const Array& points, const py::array_t<std::int64_t>& samples) {
        return coverage_radius(cloud_from_array(points), index_vector(samples));
      },
      py::arg("points"), py::arg("samples"));
  m.def(
      "separation",
      [](const Array& points, const py::array_t<std::int64_t>& samples) {
        return separation(cloud_from_array(points), index_vector(samples));
      },
      py::arg("points"), py::arg("samples"));
}
