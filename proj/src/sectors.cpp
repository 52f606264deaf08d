#include "pcs/sectors.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace pcs {

std::vector<IndexRange> partition_sectors(std::size_t n, std::size_t m) {
  if (m < 1) throw std::invalid_argument("partition_sectors: m must be >= 1");
  if (m > n) throw std::invalid_argument("partition_sectors: m exceeds point count");

  const std::size_t base = n / m;
  const std::size_t remainder = n % m;
  std::vector<IndexRange> ranges;
  ranges.reserve(m);
  std::size_t begin = 0;
  for (std::size_t s = 0; s < m; ++s) {
    const std::size_t len = base + (s < remainder ? 1 : 0);
    ranges.push_back({begin, begin + len});
    begin += len;
  }
  return ranges;
}

std::vector<std::size_t> allocate_samples(std::size_t c, std::size_t m) {
  if (m < 1) throw std::invalid_argument("allocate_samples: m must be >= 1");
  if (m > c) throw std::invalid_argument("allocate_samples: m exceeds sample count");

  const std::size_t base = c / m;
  const std::size_t remainder = c % m;
  std::vector<std::size_t> quotas;
  quotas.reserve(m);
  for (std::size_t s = 0; s < m; ++s) quotas.push_back(base + (s < remainder ? 1 : 0));
  return quotas;
}

SectorPlan SectorPlan::make(std::size_t n, std::size_t c, std::size_t m) {
  SectorPlan plan;
  plan.ranges = partition_sectors(n, m);
  plan.quotas = allocate_samples(c, m);
  for (std::size_t s = 0; s < m; ++s) {
    if (plan.quotas[s] > plan.ranges[s].size()) {
      throw std::invalid_argument(
          "sector " + std::to_string(s) + " holds " +
          std::to_string(plan.ranges[s].size()) + " points but owes " +
          std::to_string(plan.quotas[s]) + " samples");
    }
  }
  return plan;
}

IndexRange update_window(IndexRange sector, std::size_t sample_idx, std::size_t k) {
  const std::size_t half_down = k / 2;
  const std::size_t half_up = (k + 1) / 2;
  const std::size_t begin =
      std::max(sector.begin,
               sample_idx >= half_down ? sample_idx - half_down : std::size_t{0});
  const std::size_t end = std::min(sector.end, sample_idx + half_up);
  return {begin, end};
}

}  // namespace pcs
