#include "bbfm/kernels.hpp"

#include <algorithm>
#include <cstddef>

#include "bbfm/error.hpp"

namespace bbfm::kernels {

std::vector<double> sample_serial(const AggregatedMembership& agg, std::span<const double> grid) {
  const auto compact = agg.compacted();
  std::vector<double> out(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) out[i] = compact(grid[i]);
  return out;
}

std::vector<double> sample_parallel(const AggregatedMembership& agg, std::span<const double> grid) {
  const auto compact = agg.compacted();
  std::vector<double> out(grid.size());
  const auto n = static_cast<std::ptrdiff_t>(grid.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = compact(grid[i]);
  return out;
}

std::vector<double> pointwise_max(std::span<const std::vector<double>> sampled) {
  if (sampled.empty()) return {};
  std::vector<double> out = sampled.front();
  for (const auto& s : sampled.subspan(1)) {
    if (s.size() != out.size()) throw InputError("pointwise_max: length mismatch");
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::max(out[i], s[i]);
  }
  return out;
}

}  // namespace bbfm::kernels
