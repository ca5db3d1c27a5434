#pragma once

// Scenario execution: bundled and file-based scenarios, episode metrics,
// CSV traces, SVG plots and a batch runner for independent episodes.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "bbfm/baselines.hpp"
#include "bbfm/config.hpp"
#include "bbfm/navigator.hpp"
#include "bbfm/sim.hpp"

namespace bbfm {

struct ScenarioConfig {
  std::string name;
  std::string description;
  World world;
  Pose start;
  Pose target;
  Strategy strategy = Strategy::Bbfm;
  std::set<BehaviorKind> disabled;
  Config config = default_config();
  std::uint64_t seed = 0;  // reserved; the pipeline is deterministic
};

std::vector<std::string> bundled_scenario_names();
/// Throws ConfigError for an unknown name.
ScenarioConfig bundled_scenario(std::string_view name);

/// Scenario JSON: {"name", "description", "world": <path or inline world>,
/// "start": [x, y, theta_deg], "target": [x, y, theta_deg], "strategy",
/// "disable": [behavior names], "config": <path or inline overrides>, "seed"}.
/// Relative paths resolve against the scenario file's directory.
ScenarioConfig load_scenario(const std::filesystem::path& path);
Json scenario_to_json(const ScenarioConfig& sc);

/// A bundled name or a path to a scenario file.
ScenarioConfig resolve_scenario(const std::string& name_or_path);

Navigator make_navigator(const ScenarioConfig& sc);

struct Metrics {
  double traveled_distance = 0.0;  // m
  double elapsed_time = 0.0;       // s
  double smoothness = 0.0;         // deg per step, mean |d theta|
  double target_error = 0.0;       // m, final rho
  Outcome outcome = Outcome::Timeout;
  bool operator==(const Metrics&) const = default;
};

/// Throws InputError for an empty trace.
Metrics compute_metrics(const TrajectoryTrace& trace);

/// Process exit status for an outcome: 0 success, 2 collision, 3 timeout.
int exit_code(Outcome outcome);
inline constexpr int kExitConfigError = 4;

void write_trace_csv(std::ostream& out, const TrajectoryTrace& trace);
/// Parses a trace written by write_trace_csv. The outcome is inferred:
/// success if the final rho is within stop_radius, timeout if max_steps
/// transitions ran, collision otherwise.
TrajectoryTrace read_trace_csv(std::istream& in, const EpisodeLimits& limits = {});

std::string render_svg(const ScenarioConfig& sc, const TrajectoryTrace& trace);
Json metrics_to_json(const Metrics& m);

struct ScenarioResult {
  TrajectoryTrace trace;
  Metrics metrics;
  std::vector<std::filesystem::path> artifacts;
};

/// Runs one episode; with an output directory also writes trace.csv,
/// plot.svg and metrics.json there.
ScenarioResult run_scenario(const ScenarioConfig& sc, const std::optional<std::filesystem::path>& out_dir = {});

/// Independent episodes, run concurrently with OpenMP. Results keep the
/// order of the input; the first failure is rethrown.
std::vector<ScenarioResult> run_batch(std::span<const ScenarioConfig> scenarios);

}  // namespace bbfm
