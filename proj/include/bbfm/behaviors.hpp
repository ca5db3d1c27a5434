#pragma once

// Crisp navigation inputs and the three behavior rule bases.
//
// Variable names used throughout: d_l, d_f, d_r, alpha, rho, e_d (inputs)
// and u, omega (outputs). Sensors are indexed right-to-left, so d_r groups
// sensors 1-3, d_f sensors 4-5 and d_l sensors 6-8.

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bbfm/fuzzy.hpp"
#include "bbfm/geometry.hpp"

namespace bbfm {

inline constexpr std::size_t kSensorCount = 8;

struct NavInputs {
  double d_l = 0.0;    // m
  double d_f = 0.0;    // m
  double d_r = 0.0;    // m
  double alpha = 0.0;  // rad, target bearing relative to heading, [-pi, pi]
  double rho = 0.0;    // m, distance to target
  double e_d = 0.0;    // m, change of rho since the previous step

  CrispInputs as_crisp() const;
  bool operator==(const NavInputs&) const = default;
};

/// prev_rho absent means first step, giving e_d = 0. Throws InputError on a
/// reading count other than 8 or non-finite values.
NavInputs compute_nav_inputs(const Pose& pose, const Pose& target, std::optional<double> prev_rho,
                             std::span<const double> readings);

enum class BehaviorKind { LocalMinimumAvoidance, ObstacleAvoidance, GoalReaching };

std::string_view behavior_key(BehaviorKind kind);  // "local_minimum", ...
std::optional<BehaviorKind> parse_behavior(std::string_view key);

struct BehaviorSpec {
  BehaviorKind kind;
  int priority;  // 1 = most important
  RuleBase rules;
};

/// Default linguistic variables for every input and output name above.
VariableSet default_vocabulary();

BehaviorSpec build_obstacle_avoidance(const VariableSet& vocab = default_vocabulary());
BehaviorSpec build_goal_reaching(const VariableSet& vocab = default_vocabulary());
BehaviorSpec build_local_minimum(const VariableSet& vocab = default_vocabulary());

/// All three, sorted by priority (LM, OA, GR).
std::vector<BehaviorSpec> default_behaviors(const VariableSet& vocab = default_vocabulary());

}  // namespace bbfm
