#include "bbfm/behaviors.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>

#include "bbfm/error.hpp"

namespace bbfm {

CrispInputs NavInputs::as_crisp() const {
  return {{"d_l", d_l}, {"d_f", d_f}, {"d_r", d_r}, {"alpha", alpha}, {"rho", rho}, {"e_d", e_d}};
}

NavInputs compute_nav_inputs(const Pose& pose, const Pose& target, std::optional<double> prev_rho,
                             std::span<const double> readings) {
  if (readings.size() != kSensorCount) {
    throw InputError("expected 8 sensor readings, got " + std::to_string(readings.size()));
  }
  for (double d : readings) {
    if (!std::isfinite(d) || d < 0.0) throw InputError("sensor reading must be finite and >= 0");
  }
  if (!std::isfinite(pose.x) || !std::isfinite(pose.y) || !std::isfinite(pose.theta) || !std::isfinite(target.x) ||
      !std::isfinite(target.y)) {
    throw InputError("pose and target must be finite");
  }
  NavInputs in;
  in.rho = distance(pose.position(), target.position());
  in.alpha = wrap_angle(std::atan2(target.y - pose.y, target.x - pose.x) - pose.theta);
  in.e_d = prev_rho ? in.rho - *prev_rho : 0.0;
  in.d_r = std::min({readings[0], readings[1], readings[2]});
  in.d_f = std::min(readings[3], readings[4]);
  in.d_l = std::min({readings[5], readings[6], readings[7]});
  return in;
}

std::string_view behavior_key(BehaviorKind kind) {
  switch (kind) {
    case BehaviorKind::LocalMinimumAvoidance:
      return "local_minimum";
    case BehaviorKind::ObstacleAvoidance:
      return "obstacle_avoidance";
    case BehaviorKind::GoalReaching:
      return "goal_reaching";
  }
  return "?";
}

std::optional<BehaviorKind> parse_behavior(std::string_view key) {
  if (key == "local_minimum" || key == "lm") return BehaviorKind::LocalMinimumAvoidance;
  if (key == "obstacle_avoidance" || key == "oa") return BehaviorKind::ObstacleAvoidance;
  if (key == "goal_reaching" || key == "gr") return BehaviorKind::GoalReaching;
  return std::nullopt;
}

namespace {

using MF = MembershipFunction;

LinguisticVariable distance_variable(std::string name) {
  return {std::move(name),
          {0.0, 4.0},
          {{"N", MF::sigmoid(-10.0, 1.1)}, {"M", MF::gaussian(1.3, 0.5)}, {"F", MF::sigmoid(7.0, 1.8)}}};
}

// A row of a rule table: antecedent labels in column order ("-" is a
// don't-care), then u and omega labels.
struct Row {
  std::vector<const char*> in;
  const char* u;
  const char* omega;
};

std::vector<Rule> to_rules(std::initializer_list<const char*> columns, std::initializer_list<Row> rows) {
  std::vector<Rule> rules;
  for (const auto& row : rows) {
    Rule r;
    auto label = row.in.begin();
    for (const char* var : columns) {
      if (std::string_view(*label) != "-") r.antecedent.emplace(var, *label);
      ++label;
    }
    r.consequent = {{"u", row.u}, {"omega", row.omega}};
    rules.push_back(std::move(r));
  }
  return rules;
}

std::vector<LinguisticVariable> pick(const VariableSet& vocab, std::initializer_list<const char*> names) {
  std::vector<LinguisticVariable> out;
  for (const char* n : names) {
    const auto it = vocab.find(n);
    if (it == vocab.end()) throw ConfigError(std::string("vocabulary lacks variable '") + n + "'");
    out.push_back(it->second);
  }
  return out;
}

}  // namespace

VariableSet default_vocabulary() {
  VariableSet v;
  for (const char* d : {"d_l", "d_f", "d_r"}) v.emplace(d, distance_variable(d));
  const double pi = std::numbers::pi;
  v.emplace("alpha", LinguisticVariable("alpha", {-pi, pi},
                                        {{"LN", MF::sigmoid(-4.0, -1.2)},
                                         {"N", MF::gaussian(-0.6, 0.35)},
                                         {"Z", MF::gaussian(0.0, 0.25)},
                                         {"P", MF::gaussian(0.6, 0.35)},
                                         {"LP", MF::sigmoid(4.0, 1.2)}}));
  v.emplace("rho", LinguisticVariable("rho", {0.0, 20.0},
                                      {{"N", MF::sigmoid(-8.0, 0.8)},
                                       {"M", MF::gaussian(2.5, 1.0)},
                                       {"F", MF::sigmoid(2.0, 4.5)}}));
  v.emplace("e_d", LinguisticVariable("e_d", {-1.0, 1.0}, {{"PT", MF::sigmoid(30.0, 0.02)}}));
  v.emplace("u", LinguisticVariable("u", {0.0, 1.3},
                                    {{"S", MF::gaussian(0.15, 0.12)},
                                     {"M", MF::gaussian(0.55, 0.18)},
                                     {"L", MF::sigmoid(8.0, 0.9)}}));
  v.emplace("omega", LinguisticVariable("omega", {-4.3, 4.3},
                                        {{"LNo", MF::sigmoid(-3.0, -2.2)},
                                         {"No", MF::gaussian(-1.2, 0.5)},
                                         {"Zo", MF::gaussian(0.0, 0.4)},
                                         {"Po", MF::gaussian(1.2, 0.5)},
                                         {"LPo", MF::sigmoid(3.0, 2.2)}}));
  return v;
}

// Transcribed rule tables. Normalisations applied to the published labels:
//   "Lpo" -> LPo, "LN0" -> LNo, "Lno" -> LNo, "LN _o" -> LNo;
//   obstacle-avoidance rule 4 lists u = "N", outside {S, M, L}: taken as S.
// Rules 1/5 and 4/9 of obstacle avoidance share antecedents with different
// consequents; both are kept and max-min aggregation composes them.

BehaviorSpec build_obstacle_avoidance(const VariableSet& vocab) {
  auto rules = to_rules({"d_l", "d_f", "d_r", "alpha"},
                        {
                            {{"N", "N", "F", "-"}, "S", "Po"},    // 1
                            {{"F", "N", "N", "-"}, "M", "Po"},    // 2
                            {{"M", "N", "N", "-"}, "M", "Po"},    // 3
                            {{"F", "N", "M", "-"}, "S", "LPo"},   // 4 (u "N" -> S)
                            {{"N", "N", "F", "-"}, "M", "LNo"},   // 5 ("LN0")
                            {{"N", "N", "M", "-"}, "M", "No"},    // 6
                            {{"F", "N", "F", "-"}, "M", "LPo"},   // 7 ("Lpo")
                            {{"M", "N", "F", "-"}, "M", "No"},    // 8
                            {{"F", "N", "M", "-"}, "M", "Po"},    // 9
                            {{"N", "M", "N", "-"}, "M", "Po"},    // 10
                            {{"N", "N", "N", "-"}, "S", "Po"},    // 11
                            {{"M", "N", "M", "-"}, "S", "Po"},    // 12
                            {{"N", "M", "M", "-"}, "M", "No"},    // 13
                            {{"N", "M", "F", "-"}, "M", "No"},    // 14
                            {{"N", "F", "M", "-"}, "M", "No"},    // 15
                            {{"N", "F", "F", "LN"}, "S", "LNo"},  // 16 ("Lno")
                            {{"N", "F", "F", "N"}, "S", "No"},    // 17
                            {{"N", "F", "F", "Z"}, "L", "Zo"},    // 18
                            {{"N", "N", "N", "LP"}, "L", "Zo"},   // 19
                            {{"N", "F", "F", "P"}, "L", "Zo"},    // 20
                            {{"M", "M", "N", "-"}, "M", "Po"},    // 21
                            {{"F", "M", "N", "-"}, "M", "Po"},    // 22
                            {{"M", "F", "N", "-"}, "M", "Po"},    // 23
                            {{"F", "F", "N", "LN"}, "L", "Zo"},   // 24
                            {{"F", "F", "N", "N"}, "L", "Zo"},    // 25
                            {{"F", "F", "N", "Z"}, "L", "Zo"},    // 26
                            {{"F", "F", "N", "LP"}, "S", "LPo"},  // 27 ("Lpo")
                            {{"F", "F", "N", "P"}, "S", "LPo"},   // 28
                        });
  return {BehaviorKind::ObstacleAvoidance, 2,
          RuleBase(pick(vocab, {"d_l", "d_f", "d_r", "alpha"}), pick(vocab, {"u", "omega"}), std::move(rules))};
}

BehaviorSpec build_goal_reaching(const VariableSet& vocab) {
  auto rules = to_rules({"rho", "alpha"},
                        {
                            {{"N", "Z"}, "S", "Zo"},    // 1
                            {{"N", "N"}, "S", "No"},    // 2
                            {{"N", "LN"}, "S", "LNo"},  // 3
                            {{"N", "P"}, "S", "Po"},    // 4
                            {{"N", "LP"}, "S", "LPo"},  // 5
                            {{"M", "Z"}, "M", "Zo"},    // 6
                            {{"M", "N"}, "M", "No"},    // 7
                            {{"M", "LN"}, "M", "LNo"},  // 8
                            {{"M", "P"}, "M", "Po"},    // 9
                            {{"M", "LP"}, "M", "LPo"},  // 10
                            {{"F", "Z"}, "L", "Zo"},    // 11
                            {{"F", "N"}, "L", "No"},    // 12
                            {{"F", "LN"}, "L", "LNo"},  // 13
                            {{"F", "P"}, "L", "Po"},    // 14
                            {{"F", "LP"}, "L", "LPo"},  // 15
                        });
  return {BehaviorKind::GoalReaching, 3,
          RuleBase(pick(vocab, {"rho", "alpha"}), pick(vocab, {"u", "omega"}), std::move(rules))};
}

BehaviorSpec build_local_minimum(const VariableSet& vocab) {
  auto rules = to_rules({"d_l", "d_f", "d_r", "e_d", "alpha"},
                        {
                            {{"N", "N", "N", "-", "Z"}, "S", "Po"},     // 1
                            {{"F", "N", "N", "-", "P"}, "M", "Po"},     // 2
                            {{"F", "N", "N", "-", "LP"}, "S", "LPo"},   // 3
                            {{"F", "F", "N", "PT", "P"}, "M", "Zo"},    // 4
                            {{"F", "F", "N", "PT", "LP"}, "M", "Zo"},   // 5
                            {{"F", "F", "F", "PT", "P"}, "M", "Zo"},    // 6
                            {{"F", "F", "F", "PT", "LP"}, "M", "LNo"},  // 7 ("LN _o")
                        });
  return {BehaviorKind::LocalMinimumAvoidance, 1,
          RuleBase(pick(vocab, {"d_l", "d_f", "d_r", "e_d", "alpha"}), pick(vocab, {"u", "omega"}),
                   std::move(rules))};
}

std::vector<BehaviorSpec> default_behaviors(const VariableSet& vocab) {
  std::vector<BehaviorSpec> all;
  all.push_back(build_local_minimum(vocab));
  all.push_back(build_obstacle_avoidance(vocab));
  all.push_back(build_goal_reaching(vocab));
  return all;
}

}  // namespace bbfm
