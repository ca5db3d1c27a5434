#pragma once

// Structured-text (JSON) configuration for membership parameters, rule
// bases, fusion grids, robot, sensors and episode limits. Any subset of
// keys may be given; missing keys keep the built-in defaults.
//
//   {
//     "variables": { "<name>": { "universe": [lo, hi],
//                                "terms": { "<label>": {"type": "gaussian", "c": .., "sigma": ..}
//                                         | {"type": "sigmoid", "a": .., "b": ..} } } },
//     "behaviors": [ { "name": "local_minimum" | "obstacle_avoidance" | "goal_reaching",
//                      "priority": 1, "inputs": [..], "outputs": ["u", "omega"],
//                      "rules": [ {"if": {"d_l": "N", ..}, "then": {"u": "S", "omega": "Po"}} ] } ],
//     "fusion":  { "grid_step_u": 0.01, "grid_step_omega": 0.01, "epsilon": 1e-9 },
//     "robot":   { "wheel_radius": .., "axle_length": .., "body_radius": ..,
//                  "u_limits": [lo, hi], "omega_limits": [lo, hi] },
//     "sensors": { "mount_angles_deg": [8 values], "half_angle_deg": 7.5,
//                  "min_range": 0, "max_range": 4, "rays_per_cone": 5 },
//     "episode": { "dt": 0.1, "max_steps": 5000, "stop_radius": 0.05 }
//   }

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

#include "bbfm/behaviors.hpp"
#include "bbfm/fusion.hpp"
#include "bbfm/sim.hpp"

namespace bbfm {

using Json = nlohmann::ordered_json;

struct FusionSettings {
  double grid_step_u = 0.01;
  double grid_step_omega = 0.01;
  double epsilon = 1e-9;
};

struct Config {
  VariableSet vocabulary;
  std::vector<BehaviorSpec> behaviors;  // priority order
  FusionSettings fusion;
  RobotParams robot;
  SensorConfig sensors;
  EpisodeLimits limits;

  /// Grids spanning the robot's actuator limits.
  CommandDomain domain() const;
};

Config default_config();

Json to_json(const Config& cfg);

/// Applies `j` on top of `base`. Errors name `source` and the offending key.
Config apply_config(Config base, const Json& j, const std::string& source = "<config>");

/// Parses a JSON file, throwing ConfigError with the path on failure.
Json read_json_file(const std::filesystem::path& path);

Config load_config(const std::filesystem::path& path);

Json world_to_json(const World& world);
World world_from_json(const Json& j, const std::string& source = "<world>");

}  // namespace bbfm
