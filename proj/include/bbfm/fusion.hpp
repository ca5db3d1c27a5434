#pragma once

// Lexicographic command fusion. Each behavior's aggregated output sets are
// objectives; u and omega are solved as two independent priority-ordered
// maximisation problems over discrete grids.

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "bbfm/fuzzy.hpp"

namespace bbfm {

struct VelocityCommand {
  double u = 0.0;      // m/s
  double omega = 0.0;  // rad/s, positive turns left
  bool operator==(const VelocityCommand&) const = default;
};

/// Ascending samples lo..hi with spacing close to `step`. Endpoints are
/// exact and the grid is mirror-symmetric when lo == -hi.
std::vector<double> make_grid(double lo, double hi, double step);

struct CommandDomain {
  std::vector<double> u_grid;
  std::vector<double> omega_grid;
  double epsilon = 1e-9;

  /// Throws InputError on empty or non-ascending grids or negative epsilon.
  void validate() const;

  static CommandDomain uniform(Interval u, double step_u, Interval omega, double step_omega, double epsilon = 1e-9);
};

/// Indices into `candidates` order preserved: those whose value is within
/// epsilon of the best. `values` is indexed by grid position.
std::vector<std::size_t> argmax_set(std::span<const double> values, std::span<const std::size_t> candidates,
                                    double epsilon);

/// Grid-level convenience: {y in grid : f(y) >= max f - epsilon}.
std::vector<double> argmax_set(const std::function<double(double)>& f, std::span<const double> grid, double epsilon);

/// Y_0 = whole grid, Y_i = argmax of objective i over Y_{i-1}; stops as soon
/// as a single point remains. Objectives are sampled on the grid, highest
/// priority first. Returns grid indices, never empty.
std::vector<std::size_t> lexicographic_solve(std::span<const std::vector<double>> objectives, std::size_t grid_size,
                                             double epsilon);

/// Tie-breaks among a final candidate set.
std::size_t pick_greatest(std::span<const std::size_t> candidates, std::span<const double> grid);
std::size_t pick_smallest_magnitude(std::span<const std::size_t> candidates, std::span<const double> grid);

/// Per-behavior output pair, as produced by one rule base evaluation.
struct BehaviorOutput {
  AggregatedMembership u;
  AggregatedMembership omega;
};

/// Fuses behavior outputs given in priority order (most important first).
/// u* takes the greatest u among ties; omega* the smallest |omega|, positive
/// on an exact +/- tie.
VelocityCommand fuse(std::span<const BehaviorOutput> by_priority, const CommandDomain& domain);

/// fuse() on already-sampled objectives (one vector per behavior, per
/// variable, same priority order).
VelocityCommand fuse_sampled(std::span<const std::vector<double>> u_objectives,
                             std::span<const std::vector<double>> omega_objectives, const CommandDomain& domain);

}  // namespace bbfm
