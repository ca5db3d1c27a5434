#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

#include "bbfm/error.hpp"
#include "bbfm/harness.hpp"

namespace bbfm {

namespace {

Pose pose_deg(double x, double y, double theta_deg) { return {x, y, wrap_angle(deg2rad(theta_deg))}; }

void rect(World& w, double x0, double y0, double x1, double y1) {
  const std::vector<Point> pts = {{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}};
  w.add_polygon(pts);
}

void wall(World& w, double x0, double y0, double x1, double y1) { w.add_segment({x0, y0}, {x1, y1}); }

// Hand-authored maps. No coordinates are published for the benchmark
// environments, so each is an approximation of the situation it names.

ScenarioConfig open_field() {
  ScenarioConfig sc;
  sc.name = "open-field";
  sc.description = "No obstacles; target 5 m straight ahead.";
  sc.world = World({-1.0, -3.0, 6.0, 3.0});
  sc.start = pose_deg(0.0, 0.0, 0.0);
  sc.target = pose_deg(5.0, 0.0, 0.0);
  return sc;
}

ScenarioConfig corridor() {
  ScenarioConfig sc;
  sc.name = "corridor";
  sc.description = "2.4 m wide corridor with a dog-leg; target at the far end.";
  sc.world = World({-1.0, -2.5, 11.0, 4.5});
  wall(sc.world, -1.0, -1.2, 6.0, -1.2);
  wall(sc.world, 6.0, -1.2, 6.0, 0.8);
  wall(sc.world, 6.0, 0.8, 10.5, 0.8);
  wall(sc.world, -1.0, 1.2, 3.6, 1.2);
  wall(sc.world, 3.6, 1.2, 3.6, 3.2);
  wall(sc.world, 3.6, 3.2, 10.5, 3.2);
  sc.start = pose_deg(0.0, 0.0, 0.0);
  sc.target = pose_deg(9.5, 2.0, 0.0);
  return sc;
}

// Office-like room: outer walls, bulkheads jutting from them and a cabinet
// straddling the direct line from start to target.
ScenarioConfig office_like() {
  ScenarioConfig sc;
  sc.name = "office-like";
  sc.description = "Walled office with bulkheads and a cabinet between start and target.";
  sc.world = World({-8.5, -7.5, -0.5, 0.5});
  rect(sc.world, -8.5, -7.5, -0.5, 0.5);
  wall(sc.world, -5.8, -7.5, -5.8, -5.6);  // bulkhead from the south wall
  wall(sc.world, -8.5, -2.4, -6.8, -2.4);  // stub from the west wall
  wall(sc.world, -3.0, 0.5, -3.0, -0.8);   // bulkhead from the north wall
  wall(sc.world, -0.5, -4.0, -2.0, -4.0);  // stub from the east wall
  rect(sc.world, -4.6, -4.0, -3.8, -3.2);  // cabinet
  sc.start = pose_deg(-7.5, -6.5, 45.0);
  sc.target = pose_deg(-1.5, -0.5, 0.0);
  return sc;
}

// U-shaped trap opening towards the start, with the target behind its base.
void u_shape(World& w, double half_width, double depth, double base_y) {
  const std::vector<Point> u = {
      {-half_width, base_y - depth}, {-half_width, base_y}, {half_width, base_y}, {half_width, base_y - depth}};
  w.add_polyline(u);
}

ScenarioConfig u_trap() {
  ScenarioConfig sc;
  sc.name = "u-trap";
  sc.description = "4 m wide, 3.5 m deep U opening towards the start; target 2.5 m behind its base.";
  sc.world = World({-6.0, -7.0, 6.0, 5.0});
  u_shape(sc.world, 2.0, 3.5, 0.0);
  sc.start = pose_deg(0.0, -5.0, 90.0);
  sc.target = pose_deg(0.0, 2.5, 0.0);
  return sc;
}

ScenarioConfig nested_trap() {
  ScenarioConfig sc = u_trap();
  sc.name = "nested-trap";
  sc.description = "The u-trap inside a wider, deeper U; target 2 m behind the outer base.";
  sc.world = World({-7.0, -7.0, 7.0, 5.0});
  u_shape(sc.world, 2.0, 3.5, 0.0);
  u_shape(sc.world, 3.5, 5.5, 1.2);
  sc.target = pose_deg(0.0, 3.2, 0.0);
  return sc;
}

ScenarioConfig obstacle_field() {
  ScenarioConfig sc;
  sc.name = "obstacle-field";
  sc.description = "Scattered box obstacles; start and target of the first benchmark scenario.";
  sc.world = World({-7.5, -6.0, -0.5, 0.0});
  rect(sc.world, -3.6, -3.2, -3.0, -2.6);
  rect(sc.world, -5.2, -3.0, -4.6, -2.2);
  rect(sc.world, -4.6, -4.8, -4.0, -4.2);
  sc.start = pose_deg(-2.0, -1.8, 180.0);
  sc.target = pose_deg(-6.0, -4.8, 0.0);
  return sc;
}

const std::map<std::string, std::function<ScenarioConfig()>, std::less<>>& registry() {
  static const std::map<std::string, std::function<ScenarioConfig()>, std::less<>> r = {
      {"open-field", open_field}, {"corridor", corridor},       {"office-like", office_like},
      {"u-trap", u_trap},         {"nested-trap", nested_trap}, {"obstacle-field", obstacle_field},
  };
  return r;
}

Json pose_json(const Pose& p) { return Json::array({p.x, p.y, rad2deg(p.theta)}); }

Pose pose_from(const Json& j, const std::string& source, const char* key) {
  if (!j.is_array() || j.size() != 3 || !j[0].is_number() || !j[1].is_number() || !j[2].is_number()) {
    throw ConfigError(source + ": " + key + ": expected [x, y, theta_deg]");
  }
  return pose_deg(j[0].get<double>(), j[1].get<double>(), j[2].get<double>());
}

}  // namespace

std::vector<std::string> bundled_scenario_names() {
  std::vector<std::string> names;
  for (const auto& [n, _] : registry()) names.push_back(n);
  return names;
}

ScenarioConfig bundled_scenario(std::string_view name) {
  const auto it = registry().find(name);
  if (it == registry().end()) throw ConfigError("unknown bundled scenario '" + std::string(name) + "'");
  return it->second();
}

Json scenario_to_json(const ScenarioConfig& sc) {
  Json disabled = Json::array();
  for (auto b : sc.disabled) disabled.push_back(std::string(behavior_key(b)));
  return Json{{"name", sc.name},
              {"description", sc.description},
              {"world", world_to_json(sc.world)},
              {"start", pose_json(sc.start)},
              {"target", pose_json(sc.target)},
              {"strategy", std::string(strategy_key(sc.strategy))},
              {"disable", disabled},
              {"config", to_json(sc.config)},
              {"seed", sc.seed}};
}

ScenarioConfig load_scenario(const std::filesystem::path& path) {
  const auto j = read_json_file(path);
  const auto source = path.string();
  if (!j.is_object()) throw ConfigError(source + ": expected a JSON object");
  const auto dir = path.parent_path();
  auto nested = [&](const Json& v) -> std::pair<Json, std::string> {
    if (v.is_string()) {
      const auto p = dir / v.get<std::string>();
      return {read_json_file(p), p.string()};
    }
    return {v, source};
  };

  ScenarioConfig sc;
  sc.name = j.value("name", path.stem().string());
  sc.description = j.value("description", "");
  if (!j.contains("world")) throw ConfigError(source + ": world: missing");
  {
    const auto [w, src] = nested(j.at("world"));
    sc.world = world_from_json(w, src);
  }
  if (!j.contains("start")) throw ConfigError(source + ": start: missing");
  if (!j.contains("target")) throw ConfigError(source + ": target: missing");
  sc.start = pose_from(j.at("start"), source, "start");
  sc.target = pose_from(j.at("target"), source, "target");
  if (j.contains("strategy")) {
    const auto s = j.at("strategy");
    const auto parsed = s.is_string() ? parse_strategy(s.get<std::string>()) : std::nullopt;
    if (!parsed) throw ConfigError(source + ": strategy: expected bbfm, fig4a or fig4b");
    sc.strategy = *parsed;
  }
  if (j.contains("disable")) {
    for (const auto& b : j.at("disable")) {
      const auto kind = b.is_string() ? parse_behavior(b.get<std::string>()) : std::nullopt;
      if (!kind) throw ConfigError(source + ": disable: unknown behavior " + b.dump());
      sc.disabled.insert(*kind);
    }
  }
  if (j.contains("config")) {
    const auto [c, src] = nested(j.at("config"));
    sc.config = apply_config(default_config(), c, src);
  }
  if (j.contains("seed")) {
    if (!j.at("seed").is_number_unsigned()) throw ConfigError(source + ": seed: expected a non-negative integer");
    sc.seed = j.at("seed").get<std::uint64_t>();
  }
  return sc;
}

ScenarioConfig resolve_scenario(const std::string& name_or_path) {
  if (registry().contains(name_or_path)) return bundled_scenario(name_or_path);
  if (!std::filesystem::exists(name_or_path)) {
    std::string known;
    for (const auto& n : bundled_scenario_names()) known += " " + n;
    throw ConfigError("scenario '" + name_or_path + "' is neither a bundled name nor a file (bundled:" + known + ")");
  }
  return load_scenario(name_or_path);
}

}  // namespace bbfm
