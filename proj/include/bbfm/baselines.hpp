#pragma once

// Conventional fuzzy command fusion, kept for comparison:
//   DefuzzifyThenCombine - centroid per behavior, then weighted average;
//   CombineThenDefuzzify - pointwise max of the behaviors, then centroid.

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "bbfm/fusion.hpp"

namespace bbfm {

enum class Strategy { Bbfm, DefuzzifyThenCombine, CombineThenDefuzzify };

std::string_view strategy_key(Strategy s);  // "bbfm", "fig4a", "fig4b"
std::optional<Strategy> parse_strategy(std::string_view key);

struct BaselineStrategy {
  Strategy variant = Strategy::CombineThenDefuzzify;
  std::vector<double> weights;  // DefuzzifyThenCombine only; empty = equal
};

/// sum(y * mu(y)) / sum(mu(y)) over grid samples; grid midpoint if the set
/// is empty everywhere.
double centroid(std::span<const double> values, std::span<const double> grid);
double centroid_defuzzify(const AggregatedMembership& agg, std::span<const double> grid);

/// Throws InputError for a non-baseline variant, weights of the wrong
/// length, negative weights or all-zero weights.
VelocityCommand fuse_baseline(const BaselineStrategy& strategy, std::span<const BehaviorOutput> outputs,
                              const CommandDomain& domain);

}  // namespace bbfm
