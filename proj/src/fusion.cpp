#include "bbfm/fusion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "bbfm/error.hpp"
#include "bbfm/kernels.hpp"

namespace bbfm {

std::vector<double> make_grid(double lo, double hi, double step) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || !std::isfinite(step) || step <= 0.0 || hi < lo) {
    throw InputError("grid needs lo <= hi and step > 0");
  }
  const auto intervals = static_cast<std::size_t>(std::llround((hi - lo) / step));
  if (intervals == 0) return {lo};
  std::vector<double> g(intervals + 1);
  const auto n = static_cast<double>(intervals);
  for (std::size_t i = 0; i <= intervals; ++i) {
    const auto k = static_cast<double>(i);
    g[i] = (lo * (n - k) + hi * k) / n;
  }
  g.front() = lo;
  g.back() = hi;
  return g;
}

void CommandDomain::validate() const {
  auto check = [](const std::vector<double>& g, const char* name) {
    if (g.empty()) throw InputError(std::string(name) + " grid is empty");
    for (std::size_t i = 1; i < g.size(); ++i) {
      if (!(g[i] > g[i - 1])) throw InputError(std::string(name) + " grid is not strictly ascending");
    }
  };
  check(u_grid, "u");
  check(omega_grid, "omega");
  if (!(epsilon >= 0.0)) throw InputError("fusion epsilon must be >= 0");
}

CommandDomain CommandDomain::uniform(Interval u, double step_u, Interval omega, double step_omega, double epsilon) {
  CommandDomain d{make_grid(u.lo, u.hi, step_u), make_grid(omega.lo, omega.hi, step_omega), epsilon};
  d.validate();
  return d;
}

std::vector<std::size_t> argmax_set(std::span<const double> values, std::span<const std::size_t> candidates,
                                    double epsilon) {
  double best = -std::numeric_limits<double>::infinity();
  for (auto i : candidates) best = std::max(best, values[i]);
  std::vector<std::size_t> keep;
  for (auto i : candidates) {
    if (values[i] >= best - epsilon) keep.push_back(i);
  }
  return keep;
}

std::vector<double> argmax_set(const std::function<double(double)>& f, std::span<const double> grid, double epsilon) {
  std::vector<double> values(grid.size());
  std::transform(grid.begin(), grid.end(), values.begin(), f);
  std::vector<std::size_t> all(grid.size());
  std::iota(all.begin(), all.end(), std::size_t{0});
  std::vector<double> out;
  for (auto i : argmax_set(values, all, epsilon)) out.push_back(grid[i]);
  return out;
}

std::vector<std::size_t> lexicographic_solve(std::span<const std::vector<double>> objectives, std::size_t grid_size,
                                             double epsilon) {
  std::vector<std::size_t> current(grid_size);
  std::iota(current.begin(), current.end(), std::size_t{0});
  for (const auto& f : objectives) {
    if (current.size() <= 1) break;
    if (f.size() != grid_size) throw InputError("objective sampled on a different grid");
    current = argmax_set(f, current, epsilon);
  }
  return current;
}

std::size_t pick_greatest(std::span<const std::size_t> candidates, std::span<const double> grid) {
  return *std::max_element(candidates.begin(), candidates.end(),
                           [&](std::size_t a, std::size_t b) { return grid[a] < grid[b]; });
}

std::size_t pick_smallest_magnitude(std::span<const std::size_t> candidates, std::span<const double> grid) {
  std::size_t best = candidates.front();
  for (auto i : candidates) {
    const double a = std::abs(grid[i]);
    const double b = std::abs(grid[best]);
    if (a < b || (a == b && grid[i] > grid[best])) best = i;
  }
  return best;
}

VelocityCommand fuse_sampled(std::span<const std::vector<double>> u_objectives,
                             std::span<const std::vector<double>> omega_objectives, const CommandDomain& domain) {
  const auto u_set = lexicographic_solve(u_objectives, domain.u_grid.size(), domain.epsilon);
  const auto w_set = lexicographic_solve(omega_objectives, domain.omega_grid.size(), domain.epsilon);
  return {domain.u_grid[pick_greatest(u_set, domain.u_grid)],
          domain.omega_grid[pick_smallest_magnitude(w_set, domain.omega_grid)]};
}

VelocityCommand fuse(std::span<const BehaviorOutput> by_priority, const CommandDomain& domain) {
  std::vector<std::vector<double>> u_obj;
  std::vector<std::vector<double>> w_obj;
  for (const auto& b : by_priority) {
    u_obj.push_back(kernels::sample_serial(b.u, domain.u_grid));
    w_obj.push_back(kernels::sample_serial(b.omega, domain.omega_grid));
  }
  return fuse_sampled(u_obj, w_obj, domain);
}

}  // namespace bbfm
