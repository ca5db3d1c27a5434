#include "bbfm/config.hpp"

#include <algorithm>
#include <fstream>

#include "bbfm/error.hpp"

namespace bbfm {

namespace {

[[noreturn]] void fail(const std::string& source, const std::string& key, const std::string& what) {
  throw ConfigError(source + ": " + key + ": " + what);
}

double number(const Json& j, const std::string& source, const std::string& key) {
  if (!j.is_number()) fail(source, key, "expected a number");
  return j.get<double>();
}

std::string text(const Json& j, const std::string& source, const std::string& key) {
  if (!j.is_string()) fail(source, key, "expected a string");
  return j.get<std::string>();
}

Interval interval(const Json& j, const std::string& source, const std::string& key) {
  if (!j.is_array() || j.size() != 2) fail(source, key, "expected [lo, hi]");
  Interval r{number(j[0], source, key + "[0]"), number(j[1], source, key + "[1]")};
  if (!(r.lo < r.hi)) fail(source, key, "interval must satisfy lo < hi");
  return r;
}

void read_number(const Json& obj, const char* name, double& out, const std::string& source, const std::string& key) {
  if (obj.contains(name)) out = number(obj.at(name), source, key + "." + name);
}

Json mf_to_json(const MembershipFunction& mf) {
  if (const auto* g = std::get_if<Gaussian>(&mf.shape())) {
    return Json{{"type", "gaussian"}, {"c", g->center}, {"sigma", g->width}};
  }
  const auto& s = std::get<Sigmoid>(mf.shape());
  return Json{{"type", "sigmoid"}, {"a", s.slope}, {"b", s.inflection}};
}

MembershipFunction mf_from_json(const Json& j, const std::string& source, const std::string& key) {
  if (!j.is_object() || !j.contains("type")) fail(source, key, "expected {\"type\": ...}");
  const auto type = text(j.at("type"), source, key + ".type");
  auto param = [&](const char* n) {
    if (!j.contains(n)) fail(source, key, std::string("missing parameter '") + n + "'");
    return number(j.at(n), source, key + "." + n);
  };
  try {
    if (type == "gaussian") return MembershipFunction::gaussian(param("c"), param("sigma"));
    if (type == "sigmoid") return MembershipFunction::sigmoid(param("a"), param("b"));
  } catch (const InputError& e) {
    fail(source, key, e.what());
  }
  fail(source, key + ".type", "unknown membership type '" + type + "'");
}

LinguisticVariable variable_from_json(const std::string& name, const Json& j, const std::string& source,
                                      const std::string& key) {
  if (!j.is_object() || !j.contains("universe") || !j.contains("terms")) {
    fail(source, key, "variable needs 'universe' and 'terms'");
  }
  const auto& terms = j.at("terms");
  if (!terms.is_object() || terms.empty()) fail(source, key + ".terms", "expected a non-empty object");
  std::vector<LinguisticVariable::Term> out;
  for (const auto& [label, mf] : terms.items()) {
    out.emplace_back(label, mf_from_json(mf, source, key + ".terms." + label));
  }
  try {
    return LinguisticVariable(name, interval(j.at("universe"), source, key + ".universe"), std::move(out));
  } catch (const ConfigError& e) {
    fail(source, key, e.what());
  }
}

Json rule_to_json(const Rule& r) {
  Json ante = Json::object();
  for (const auto& [k, v] : r.antecedent) ante[k] = v;
  Json cons = Json::object();
  for (const auto& [k, v] : r.consequent) cons[k] = v;
  return Json{{"if", ante}, {"then", cons}};
}

std::map<std::string, std::string> label_map(const Json& j, const std::string& source, const std::string& key) {
  if (!j.is_object()) fail(source, key, "expected an object of variable -> term");
  std::map<std::string, std::string> m;
  for (const auto& [k, v] : j.items()) m.emplace(k, text(v, source, key + "." + k));
  return m;
}

std::vector<std::string> names(const Json& j, const std::string& source, const std::string& key) {
  if (!j.is_array()) fail(source, key, "expected an array of names");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(text(j[i], source, key + "[" + std::to_string(i) + "]"));
  return out;
}

// Rule base description detached from a vocabulary so it can be rebuilt
// when membership parameters change.
struct RuleBaseDraft {
  BehaviorKind kind;
  int priority;
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
  std::vector<Rule> rules;
};

RuleBaseDraft draft_of(const BehaviorSpec& b) {
  RuleBaseDraft d{b.kind, b.priority, {}, {}, b.rules.rules()};
  for (const auto& v : b.rules.inputs()) d.inputs.push_back(v.name());
  for (const auto& v : b.rules.outputs()) d.outputs.push_back(v.name());
  return d;
}

BehaviorSpec build(const RuleBaseDraft& d, const VariableSet& vocab, const std::string& source,
                   const std::string& key) {
  auto lookup = [&](const std::vector<std::string>& ns) {
    std::vector<LinguisticVariable> out;
    for (const auto& n : ns) {
      const auto it = vocab.find(n);
      if (it == vocab.end()) fail(source, key, "unknown variable '" + n + "'");
      out.push_back(it->second);
    }
    return out;
  };
  try {
    return {d.kind, d.priority, RuleBase(lookup(d.inputs), lookup(d.outputs), d.rules)};
  } catch (const ConfigError& e) {
    fail(source, key, e.what());
  }
}

}  // namespace

CommandDomain Config::domain() const {
  return CommandDomain::uniform(robot.u_limits, fusion.grid_step_u, robot.omega_limits, fusion.grid_step_omega,
                                fusion.epsilon);
}

Config default_config() {
  Config c;
  c.vocabulary = default_vocabulary();
  c.behaviors = default_behaviors(c.vocabulary);
  c.sensors = SensorConfig::defaults();
  return c;
}

Json to_json(const Config& cfg) {
  Json j;
  Json vars = Json::object();
  // Stable, readable order: inputs as they appear in rule tables, then outputs.
  std::vector<std::string> order = {"d_l", "d_f", "d_r", "alpha", "rho", "e_d", "u", "omega"};
  for (const auto& [name, v] : cfg.vocabulary) {
    if (std::find(order.begin(), order.end(), name) == order.end()) order.push_back(name);
  }
  for (const auto& name : order) {
    const auto it = cfg.vocabulary.find(name);
    if (it == cfg.vocabulary.end()) continue;
    Json terms = Json::object();
    for (const auto& [label, mf] : it->second.terms()) terms[label] = mf_to_json(mf);
    vars[name] = Json{{"universe", {it->second.universe().lo, it->second.universe().hi}}, {"terms", terms}};
  }
  j["variables"] = vars;

  Json behaviors = Json::array();
  for (const auto& b : cfg.behaviors) {
    const auto d = draft_of(b);
    Json rules = Json::array();
    for (const auto& r : d.rules) rules.push_back(rule_to_json(r));
    behaviors.push_back(Json{{"name", std::string(behavior_key(b.kind))},
                             {"priority", b.priority},
                             {"inputs", d.inputs},
                             {"outputs", d.outputs},
                             {"rules", rules}});
  }
  j["behaviors"] = behaviors;
  j["fusion"] = {{"grid_step_u", cfg.fusion.grid_step_u},
                 {"grid_step_omega", cfg.fusion.grid_step_omega},
                 {"epsilon", cfg.fusion.epsilon}};
  j["robot"] = {{"wheel_radius", cfg.robot.wheel_radius},
                {"axle_length", cfg.robot.axle_length},
                {"body_radius", cfg.robot.body_radius},
                {"u_limits", {cfg.robot.u_limits.lo, cfg.robot.u_limits.hi}},
                {"omega_limits", {cfg.robot.omega_limits.lo, cfg.robot.omega_limits.hi}}};
  Json mounts = Json::array();
  for (double a : cfg.sensors.mount_angles) mounts.push_back(rad2deg(a));
  j["sensors"] = {{"mount_angles_deg", mounts},
                  {"half_angle_deg", rad2deg(cfg.sensors.half_angle)},
                  {"min_range", cfg.sensors.min_range},
                  {"max_range", cfg.sensors.max_range},
                  {"rays_per_cone", cfg.sensors.rays_per_cone}};
  j["episode"] = {{"dt", cfg.limits.dt}, {"max_steps", cfg.limits.max_steps}, {"stop_radius", cfg.limits.stop_radius}};
  return j;
}

Config apply_config(Config base, const Json& j, const std::string& source) {
  if (!j.is_object()) fail(source, "<root>", "expected a JSON object");
  for (const auto& [key, _] : j.items()) {
    static const std::vector<std::string> known = {"variables", "behaviors", "fusion", "robot", "sensors", "episode"};
    if (std::find(known.begin(), known.end(), key) == known.end()) fail(source, key, "unknown key");
  }

  std::vector<RuleBaseDraft> drafts;
  for (const auto& b : base.behaviors) drafts.push_back(draft_of(b));

  if (j.contains("variables")) {
    const auto& vars = j.at("variables");
    if (!vars.is_object()) fail(source, "variables", "expected an object");
    for (const auto& [name, v] : vars.items()) {
      base.vocabulary.insert_or_assign(name, variable_from_json(name, v, source, "variables." + name));
    }
  }

  if (j.contains("behaviors")) {
    const auto& list = j.at("behaviors");
    if (!list.is_array()) fail(source, "behaviors", "expected an array");
    for (std::size_t i = 0; i < list.size(); ++i) {
      const auto key = "behaviors[" + std::to_string(i) + "]";
      const auto& b = list[i];
      if (!b.is_object() || !b.contains("name")) fail(source, key, "behavior needs a 'name'");
      const auto kind = parse_behavior(text(b.at("name"), source, key + ".name"));
      if (!kind) fail(source, key + ".name", "unknown behavior");
      auto it = std::find_if(drafts.begin(), drafts.end(), [&](const RuleBaseDraft& d) { return d.kind == *kind; });
      if (it == drafts.end()) it = drafts.insert(drafts.end(), RuleBaseDraft{*kind, 0, {}, {}, {}});
      if (b.contains("priority")) {
        if (!b.at("priority").is_number_integer()) fail(source, key + ".priority", "expected an integer");
        it->priority = b.at("priority").get<int>();
      }
      if (b.contains("inputs")) it->inputs = names(b.at("inputs"), source, key + ".inputs");
      if (b.contains("outputs")) it->outputs = names(b.at("outputs"), source, key + ".outputs");
      if (b.contains("rules")) {
        const auto& rules = b.at("rules");
        if (!rules.is_array()) fail(source, key + ".rules", "expected an array");
        it->rules.clear();
        for (std::size_t k = 0; k < rules.size(); ++k) {
          const auto rk = key + ".rules[" + std::to_string(k) + "]";
          if (!rules[k].is_object() || !rules[k].contains("then")) fail(source, rk, "rule needs 'then'");
          Rule r;
          if (rules[k].contains("if")) r.antecedent = label_map(rules[k].at("if"), source, rk + ".if");
          r.consequent = label_map(rules[k].at("then"), source, rk + ".then");
          it->rules.push_back(std::move(r));
        }
      }
    }
  }

  base.behaviors.clear();
  for (const auto& d : drafts) {
    base.behaviors.push_back(build(d, base.vocabulary, source, "behaviors." + std::string(behavior_key(d.kind))));
  }
  std::stable_sort(base.behaviors.begin(), base.behaviors.end(),
                   [](const BehaviorSpec& a, const BehaviorSpec& b) { return a.priority < b.priority; });
  for (std::size_t i = 1; i < base.behaviors.size(); ++i) {
    if (base.behaviors[i].priority == base.behaviors[i - 1].priority) {
      fail(source, "behaviors", "priorities must be unique");
    }
  }

  if (j.contains("fusion")) {
    const auto& f = j.at("fusion");
    read_number(f, "grid_step_u", base.fusion.grid_step_u, source, "fusion");
    read_number(f, "grid_step_omega", base.fusion.grid_step_omega, source, "fusion");
    read_number(f, "epsilon", base.fusion.epsilon, source, "fusion");
    if (!(base.fusion.grid_step_u > 0 && base.fusion.grid_step_omega > 0 && base.fusion.epsilon >= 0)) {
      fail(source, "fusion", "grid steps must be > 0 and epsilon >= 0");
    }
  }
  if (j.contains("robot")) {
    const auto& r = j.at("robot");
    read_number(r, "wheel_radius", base.robot.wheel_radius, source, "robot");
    read_number(r, "axle_length", base.robot.axle_length, source, "robot");
    read_number(r, "body_radius", base.robot.body_radius, source, "robot");
    if (r.contains("u_limits")) base.robot.u_limits = interval(r.at("u_limits"), source, "robot.u_limits");
    if (r.contains("omega_limits")) {
      base.robot.omega_limits = interval(r.at("omega_limits"), source, "robot.omega_limits");
    }
    try {
      base.robot.validate();
    } catch (const InputError& e) {
      fail(source, "robot", e.what());
    }
  }
  if (j.contains("sensors")) {
    const auto& s = j.at("sensors");
    if (s.contains("mount_angles_deg")) {
      const auto& m = s.at("mount_angles_deg");
      if (!m.is_array() || m.size() != kSensorCount) fail(source, "sensors.mount_angles_deg", "expected 8 angles");
      for (std::size_t i = 0; i < kSensorCount; ++i) {
        base.sensors.mount_angles[i] = deg2rad(number(m[i], source, "sensors.mount_angles_deg"));
      }
    }
    if (s.contains("half_angle_deg")) {
      base.sensors.half_angle = deg2rad(number(s.at("half_angle_deg"), source, "sensors.half_angle_deg"));
    }
    read_number(s, "min_range", base.sensors.min_range, source, "sensors");
    read_number(s, "max_range", base.sensors.max_range, source, "sensors");
    if (s.contains("rays_per_cone")) {
      if (!s.at("rays_per_cone").is_number_integer()) fail(source, "sensors.rays_per_cone", "expected an integer");
      base.sensors.rays_per_cone = s.at("rays_per_cone").get<int>();
    }
    try {
      base.sensors.validate();
    } catch (const InputError& e) {
      fail(source, "sensors", e.what());
    }
  }
  if (j.contains("episode")) {
    const auto& e = j.at("episode");
    read_number(e, "dt", base.limits.dt, source, "episode");
    read_number(e, "stop_radius", base.limits.stop_radius, source, "episode");
    if (e.contains("max_steps")) {
      if (!e.at("max_steps").is_number_integer()) fail(source, "episode.max_steps", "expected an integer");
      base.limits.max_steps = e.at("max_steps").get<int>();
    }
    if (!(base.limits.dt > 0 && base.limits.stop_radius >= 0 && base.limits.max_steps >= 0)) {
      fail(source, "episode", "need dt > 0, stop_radius >= 0, max_steps >= 0");
    }
  }
  return base;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path.string() + ": cannot open file");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

Config load_config(const std::filesystem::path& path) {
  return apply_config(default_config(), read_json_file(path), path.string());
}

Json world_to_json(const World& world) {
  Json obstacles = Json::array();
  for (const auto& s : world.segments()) {
    obstacles.push_back(Json{{"segment", {{s.a.x, s.a.y}, {s.b.x, s.b.y}}}});
  }
  const auto& b = world.bounds();
  return Json{{"bounds", {b.xmin, b.ymin, b.xmax, b.ymax}}, {"obstacles", obstacles}};
}

World world_from_json(const Json& j, const std::string& source) {
  if (!j.is_object()) fail(source, "<root>", "expected a JSON object");
  World w;
  if (j.contains("bounds")) {
    const auto& b = j.at("bounds");
    if (!b.is_array() || b.size() != 4) fail(source, "bounds", "expected [xmin, ymin, xmax, ymax]");
    w.set_bounds({number(b[0], source, "bounds"), number(b[1], source, "bounds"), number(b[2], source, "bounds"),
                  number(b[3], source, "bounds")});
  }
  if (!j.contains("obstacles")) return w;
  const auto& obs = j.at("obstacles");
  if (!obs.is_array()) fail(source, "obstacles", "expected an array");
  for (std::size_t i = 0; i < obs.size(); ++i) {
    const auto key = "obstacles[" + std::to_string(i) + "]";
    const auto& o = obs[i];
    if (!o.is_object() || o.size() != 1) fail(source, key, "expected one of polygon / polyline / segment");
    const std::string kind = o.begin().key();
    const auto& pts_json = o.begin().value();
    if (!pts_json.is_array()) fail(source, key + "." + kind, "expected an array of [x, y]");
    std::vector<Point> pts;
    for (const auto& p : pts_json) {
      if (!p.is_array() || p.size() != 2) fail(source, key + "." + kind, "points are [x, y]");
      pts.push_back({number(p[0], source, key), number(p[1], source, key)});
    }
    try {
      if (kind == "polygon") {
        w.add_polygon(pts);
      } else if (kind == "polyline") {
        w.add_polyline(pts);
      } else if (kind == "segment") {
        if (pts.size() != 2) fail(source, key, "segment needs exactly 2 points");
        w.add_segment(pts[0], pts[1]);
      } else {
        fail(source, key, "unknown obstacle kind '" + kind + "'");
      }
    } catch (const InputError& e) {
      fail(source, key, e.what());
    }
  }
  return w;
}

}  // namespace bbfm
