#pragma once

#include <cstdint>

namespace pcs {

/// Exact operation counters for one sampling run. Deterministic given
/// (cloud, spec); the platform-independent complexity measure used by the
/// benchmark harness.
struct OpStats {
  std::uint64_t dist_evals = 0;    // geometric distance evaluations
  std::uint64_t dist_writes = 0;   // distance-array overwrites
  std::uint64_t argmax_scans = 0;  // elements examined across all argmax passes
  std::uint64_t iterations = 0;    // update+select iterations performed

  OpStats& operator+=(const OpStats& other) {
    dist_evals += other.dist_evals;
    dist_writes += other.dist_writes;
    argmax_scans += other.argmax_scans;
    iterations += other.iterations;
    return *this;
  }

  bool operator==(const OpStats&) const = default;
};

}  // namespace pcs
