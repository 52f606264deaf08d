#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pcs {

using Point = std::array<double, 3>;

enum class Axis : int { X = 0, Y = 1, Z = 2 };

const char* axis_name(Axis axis);
std::optional<Axis> parse_axis(std::string_view name);

enum class OrderKind { Unsorted, ApproxSorted, ExactlySorted };

/// Descriptive metadata about the storage order of a cloud. Never trusted for
/// correctness; validate() checks whether the data actually satisfies it.
struct OrderTag {
  OrderKind kind = OrderKind::Unsorted;
  Axis axis = Axis::X;
  std::size_t bin_size = 0;  // ApproxSorted only

  static OrderTag unsorted() { return {}; }
  static OrderTag approx_sorted(Axis axis, std::size_t bin_size) {
    return {OrderKind::ApproxSorted, axis, bin_size};
  }
  static OrderTag exactly_sorted(Axis axis) {
    return {OrderKind::ExactlySorted, axis, 0};
  }

  bool operator==(const OrderTag&) const = default;
};

std::string to_string(const OrderTag& tag);

/// Dense ordered sequence of 3D points (meters, double precision). The
/// storage order is semantically meaningful: sector partitioning and window
/// updates operate on storage indices, so reordering a cloud changes what the
/// samplers do with it.
struct PointCloud {
  std::vector<Point> points;
  OrderTag order_tag;

  std::size_t size() const { return points.size(); }
};

inline double squared_dist(const Point& a, const Point& b) {
  const double dx = a[0] - b[0];
  const double dy = a[1] - b[1];
  const double dz = a[2] - b[2];
  return dx * dx + dy * dy + dz * dz;
}

struct Violation {
  std::size_t index = 0;
  std::string message;
};

/// Checks finiteness, N >= 1, and consistency of the order tag with the data.
/// Returns the first violation found, or nullopt if the cloud is valid.
std::optional<Violation> validate(const PointCloud& cloud);

/// FNV-1a hash over the raw coordinate bytes, in storage order.
std::uint64_t cloud_digest(const PointCloud& cloud);

}  // namespace pcs
