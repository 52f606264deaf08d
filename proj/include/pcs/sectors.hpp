#pragma once

#include <cstdint>
#include <vector>

namespace pcs {

/// Half-open interval of storage indices.
struct IndexRange {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - begin; }
  bool contains(std::size_t i) const { return i >= begin && i < end; }
  bool operator==(const IndexRange&) const = default;
};

/// Splits [0, n) into m contiguous intervals in storage order. The first
/// n % m intervals get ceil(n/m) points, the rest floor(n/m).
std::vector<IndexRange> partition_sectors(std::size_t n, std::size_t m);

/// Splits c samples over m sectors with the same remainder rule; sums to c.
std::vector<std::size_t> allocate_samples(std::size_t c, std::size_t m);

struct SectorPlan {
  std::vector<IndexRange> ranges;
  std::vector<std::size_t> quotas;

  /// Combines partition_sectors and allocate_samples and rejects any sector
  /// whose quota exceeds its size.
  static SectorPlan make(std::size_t n, std::size_t c, std::size_t m);
};

/// Centered update window [sample_idx - k/2, sample_idx + (k+1)/2) clamped to
/// the sector. Not re-extended at boundaries, so a clamped window holds fewer
/// than k points.
IndexRange update_window(IndexRange sector, std::size_t sample_idx, std::size_t k);

}  // namespace pcs
