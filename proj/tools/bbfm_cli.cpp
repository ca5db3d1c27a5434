// bbfm: run navigation scenarios, compare fusion strategies, dump the
// default configuration and recompute metrics from recorded traces.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "bbfm/error.hpp"
#include "bbfm/harness.hpp"

namespace {

struct Overrides {
  std::string scenario = "open-field";
  std::string config_file;
  std::vector<std::string> disabled;
  std::optional<double> grid_step_u;
  std::optional<double> grid_step_omega;
  std::optional<double> dt;
  std::optional<int> max_steps;
  std::optional<double> stop_radius;
};

void add_scenario_flags(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--scenario", o.scenario, "Bundled scenario name or scenario JSON file")->capture_default_str();
  cmd->add_option("--config", o.config_file, "JSON configuration overrides");
  cmd->add_option("--disable-behavior", o.disabled, "local_minimum | obstacle_avoidance | goal_reaching (repeatable)");
  cmd->add_option("--grid-step-u", o.grid_step_u, "u grid resolution (m/s)");
  cmd->add_option("--grid-step-omega", o.grid_step_omega, "omega grid resolution (rad/s)");
  cmd->add_option("--dt", o.dt, "Integration step (s)");
  cmd->add_option("--max-steps", o.max_steps, "Step budget before timeout");
  cmd->add_option("--stop-radius", o.stop_radius, "Success radius around the target (m)");
}

bbfm::ScenarioConfig build_scenario(const Overrides& o) {
  auto sc = bbfm::resolve_scenario(o.scenario);
  if (!o.config_file.empty()) sc.config = bbfm::load_config(o.config_file);
  for (const auto& name : o.disabled) {
    const auto kind = bbfm::parse_behavior(name);
    if (!kind) throw bbfm::ConfigError("--disable-behavior: unknown behavior '" + name + "'");
    sc.disabled.insert(*kind);
  }
  auto& c = sc.config;
  if (o.grid_step_u) c.fusion.grid_step_u = *o.grid_step_u;
  if (o.grid_step_omega) c.fusion.grid_step_omega = *o.grid_step_omega;
  if (o.dt) c.limits.dt = *o.dt;
  if (o.max_steps) c.limits.max_steps = *o.max_steps;
  if (o.stop_radius) c.limits.stop_radius = *o.stop_radius;
  if (!(c.fusion.grid_step_u > 0 && c.fusion.grid_step_omega > 0 && c.limits.dt > 0 && c.limits.max_steps >= 0)) {
    throw bbfm::ConfigError("grid steps and dt must be > 0, max-steps >= 0");
  }
  return sc;
}

void print_metrics(const std::string& label, const bbfm::Metrics& m) {
  std::printf("%-8s %-10s %10.3f %10.2f %10.3f %10.3f\n", label.c_str(), std::string(outcome_name(m.outcome)).c_str(),
              m.traveled_distance, m.elapsed_time, m.smoothness, m.target_error);
}

void print_header() {
  std::printf("%-8s %-10s %10s %10s %10s %10s\n", "strategy", "outcome", "dist(m)", "time(s)", "smooth(deg)",
              "err(m)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Behavior-based navigation with fuzzy behaviors and lexicographic command fusion"};
  app.require_subcommand(1);

  Overrides run_opts;
  std::string strategy = "bbfm";
  std::string run_out;
  auto* run = app.add_subcommand("run", "Run a single scenario");
  add_scenario_flags(run, run_opts);
  run->add_option("--strategy", strategy, "bbfm | fig4a | fig4b")->capture_default_str();
  run->add_option("--out-dir", run_out, "Write trace.csv, plot.svg and metrics.json here");

  Overrides cmp_opts;
  std::string cmp_out;
  auto* compare = app.add_subcommand("compare", "Run one scenario under every fusion strategy");
  add_scenario_flags(compare, cmp_opts);
  compare->add_option("--out-dir", cmp_out, "Per-strategy artifacts go to <dir>/<strategy>/");

  std::string dump_scenario;
  auto* dump = app.add_subcommand("dump-config", "Print the default configuration (or a scenario) as JSON");
  dump->add_option("--scenario", dump_scenario, "Dump this scenario instead, with its world inline");

  std::string csv_path;
  bbfm::EpisodeLimits replay_limits;
  auto* replay = app.add_subcommand("replay", "Recompute metrics from a trace CSV");
  replay->add_option("trace", csv_path, "Trace CSV written by 'run'")->required();
  replay->add_option("--stop-radius", replay_limits.stop_radius, "Success radius used for outcome inference")
      ->capture_default_str();
  replay->add_option("--max-steps", replay_limits.max_steps, "Step budget used for outcome inference")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) {
      auto sc = build_scenario(run_opts);
      const auto s = bbfm::parse_strategy(strategy);
      if (!s) throw bbfm::ConfigError("--strategy: expected bbfm, fig4a or fig4b");
      sc.strategy = *s;
      std::optional<std::filesystem::path> out;
      if (!run_out.empty()) out = run_out;
      const auto res = bbfm::run_scenario(sc, out);
      print_header();
      print_metrics(std::string(bbfm::strategy_key(sc.strategy)), res.metrics);
      for (const auto& a : res.artifacts) std::printf("wrote %s\n", a.string().c_str());
      return bbfm::exit_code(res.metrics.outcome);
    }
    if (*compare) {
      const auto base = build_scenario(cmp_opts);
      std::vector<bbfm::ScenarioConfig> all;
      for (auto s : {bbfm::Strategy::Bbfm, bbfm::Strategy::DefuzzifyThenCombine, bbfm::Strategy::CombineThenDefuzzify}) {
        all.push_back(base);
        all.back().strategy = s;
      }
      const auto results = bbfm::run_batch(all);
      std::printf("scenario: %s\n", base.name.c_str());
      print_header();
      for (std::size_t i = 0; i < all.size(); ++i) {
        const auto key = std::string(bbfm::strategy_key(all[i].strategy));
        print_metrics(key, results[i].metrics);
        if (!cmp_out.empty()) {
          const auto dir = std::filesystem::path(cmp_out) / key;
          std::filesystem::create_directories(dir);
          std::ofstream csv(dir / "trace.csv");
          bbfm::write_trace_csv(csv, results[i].trace);
          std::ofstream(dir / "plot.svg") << bbfm::render_svg(all[i], results[i].trace);
          std::ofstream(dir / "metrics.json") << bbfm::metrics_to_json(results[i].metrics).dump(2) << '\n';
        }
      }
      return 0;
    }
    if (*dump) {
      if (dump_scenario.empty()) {
        std::cout << bbfm::to_json(bbfm::default_config()).dump(2) << '\n';
      } else {
        std::cout << bbfm::scenario_to_json(bbfm::resolve_scenario(dump_scenario)).dump(2) << '\n';
      }
      return 0;
    }
    if (*replay) {
      std::ifstream in(csv_path);
      if (!in) throw bbfm::ConfigError(csv_path + ": cannot open");
      const auto trace = bbfm::read_trace_csv(in, replay_limits);
      print_header();
      print_metrics("replay", bbfm::compute_metrics(trace));
      return 0;
    }
  } catch (const bbfm::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return bbfm::kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
