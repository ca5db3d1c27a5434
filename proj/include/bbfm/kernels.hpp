#pragma once

// Grid sampling of aggregated output sets. Every fusion step reduces to
// these loops, so both a serial reference and an OpenMP version exist; the
// two must agree bitwise (only min/max are involved, so ordering is moot).

#include <span>
#include <vector>

#include "bbfm/fuzzy.hpp"

namespace bbfm::kernels {

/// Reference loop: out[i] = agg(grid[i]).
std::vector<double> sample_serial(const AggregatedMembership& agg, std::span<const double> grid);

/// Same values, grid points split across OpenMP threads.
std::vector<double> sample_parallel(const AggregatedMembership& agg, std::span<const double> grid);

/// Pointwise max of several sampled functions of equal length.
std::vector<double> pointwise_max(std::span<const std::vector<double>> sampled);

}  // namespace bbfm::kernels
