#include "bbfm/baselines.hpp"

#include "bbfm/error.hpp"
#include "bbfm/kernels.hpp"

namespace bbfm {

std::string_view strategy_key(Strategy s) {
  switch (s) {
    case Strategy::Bbfm:
      return "bbfm";
    case Strategy::DefuzzifyThenCombine:
      return "fig4a";
    case Strategy::CombineThenDefuzzify:
      return "fig4b";
  }
  return "?";
}

std::optional<Strategy> parse_strategy(std::string_view key) {
  if (key == "bbfm") return Strategy::Bbfm;
  if (key == "fig4a" || key == "defuzzify-then-combine") return Strategy::DefuzzifyThenCombine;
  if (key == "fig4b" || key == "combine-then-defuzzify") return Strategy::CombineThenDefuzzify;
  return std::nullopt;
}

double centroid(std::span<const double> values, std::span<const double> grid) {
  if (grid.empty() || values.size() != grid.size()) throw InputError("centroid: grid and values must match");
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    num += grid[i] * values[i];
    den += values[i];
  }
  if (den == 0.0) return 0.5 * (grid.front() + grid.back());
  return num / den;
}

double centroid_defuzzify(const AggregatedMembership& agg, std::span<const double> grid) {
  return centroid(kernels::sample_serial(agg, grid), grid);
}

VelocityCommand fuse_baseline(const BaselineStrategy& strategy, std::span<const BehaviorOutput> outputs,
                              const CommandDomain& domain) {
  if (outputs.empty()) throw InputError("fuse_baseline needs at least one behavior");
  switch (strategy.variant) {
    case Strategy::DefuzzifyThenCombine: {
      std::vector<double> w = strategy.weights;
      if (w.empty()) w.assign(outputs.size(), 1.0);
      if (w.size() != outputs.size()) throw InputError("one weight per behavior required");
      double total = 0.0;
      for (double x : w) {
        if (!(x >= 0.0)) throw InputError("baseline weights must be non-negative");
        total += x;
      }
      if (total == 0.0) throw InputError("baseline weights must not all be zero");
      VelocityCommand cmd;
      for (std::size_t i = 0; i < outputs.size(); ++i) {
        cmd.u += w[i] * centroid_defuzzify(outputs[i].u, domain.u_grid);
        cmd.omega += w[i] * centroid_defuzzify(outputs[i].omega, domain.omega_grid);
      }
      cmd.u /= total;
      cmd.omega /= total;
      return cmd;
    }
    case Strategy::CombineThenDefuzzify: {
      std::vector<std::vector<double>> us;
      std::vector<std::vector<double>> ws;
      for (const auto& b : outputs) {
        us.push_back(kernels::sample_serial(b.u, domain.u_grid));
        ws.push_back(kernels::sample_serial(b.omega, domain.omega_grid));
      }
      return {centroid(kernels::pointwise_max(us), domain.u_grid),
              centroid(kernels::pointwise_max(ws), domain.omega_grid)};
    }
    case Strategy::Bbfm:
      break;
  }
  throw InputError("fuse_baseline called with the lexicographic strategy");
}

}  // namespace bbfm
