#include "pcs/point_cloud.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <limits>

namespace pcs {

const char* axis_name(Axis axis) {
  switch (axis) {
    case Axis::X: return "x";
    case Axis::Y: return "y";
    case Axis::Z: return "z";
  }
  return "?";
}

std::optional<Axis> parse_axis(std::string_view name) {
  if (name == "x") return Axis::X;
  if (name == "y") return Axis::Y;
  if (name == "z") return Axis::Z;
  return std::nullopt;
}

std::string to_string(const OrderTag& tag) {
  switch (tag.kind) {
    case OrderKind::Unsorted:
      return "unsorted";
    case OrderKind::ApproxSorted:
      return std::string("approx_sorted(") + axis_name(tag.axis) + ",b=" +
             std::to_string(tag.bin_size) + ")";
    case OrderKind::ExactlySorted:
      return std::string("exactly_sorted(") + axis_name(tag.axis) + ")";
  }
  return "?";
}

std::optional<Violation> validate(const PointCloud& cloud) {
  const std::size_t n = cloud.size();
  if (n == 0) return Violation{0, "cloud is empty (N must be >= 1)"};

  for (std::size_t i = 0; i < n; ++i) {
    for (int a = 0; a < 3; ++a) {
      if (!std::isfinite(cloud.points[i][a])) {
        return Violation{i, std::string("non-finite coordinate on axis ") +
                                axis_name(static_cast<Axis>(a))};
      }
    }
  }

  const auto& tag = cloud.order_tag;
  const int axis = static_cast<int>(tag.axis);
  if (tag.kind == OrderKind::ExactlySorted) {
    for (std::size_t i = 1; i < n; ++i) {
      if (cloud.points[i][axis] < cloud.points[i - 1][axis]) {
        return Violation{i, std::string("exactly_sorted(") + axis_name(tag.axis) +
                                ") violated: coordinate decreases"};
      }
    }
  } else if (tag.kind == OrderKind::ApproxSorted) {
    if (tag.bin_size < 1) return Violation{0, "approx_sorted bin_size must be >= 1"};
    const std::size_t b = tag.bin_size;
    // Every coordinate in bin j+1 must be >= every coordinate in bin j,
    // i.e. running max over earlier bins <= each point of the current bin.
    double prev_bins_max = -std::numeric_limits<double>::infinity();
    for (std::size_t bin_start = 0; bin_start < n; bin_start += b) {
      const std::size_t bin_end = std::min(bin_start + b, n);
      double bin_max = -std::numeric_limits<double>::infinity();
      for (std::size_t i = bin_start; i < bin_end; ++i) {
        const double v = cloud.points[i][axis];
        if (v < prev_bins_max) {
          return Violation{i, std::string("approx_sorted(") + axis_name(tag.axis) +
                                  ",b=" + std::to_string(b) +
                                  ") violated: point below an earlier bin's max"};
        }
        bin_max = std::max(bin_max, v);
      }
      prev_bins_max = std::max(prev_bins_max, bin_max);
    }
  }
  return std::nullopt;
}

std::uint64_t cloud_digest(const PointCloud& cloud) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const Point& p : cloud.points) {
    unsigned char bytes[sizeof(double) * 3];
    std::memcpy(bytes, p.data(), sizeof(bytes));
    for (unsigned char byte : bytes) {
      h ^= byte;
      h *= 0x100000001b3ULL;
    }
  }
  return h;
}

}  // namespace pcs
