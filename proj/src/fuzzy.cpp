#include "bbfm/fuzzy.hpp"

#include <algorithm>
#include <cmath>

#include "bbfm/error.hpp"

namespace bbfm {

MembershipFunction MembershipFunction::gaussian(double center, double width) {
  if (!std::isfinite(center) || !std::isfinite(width) || width <= 0.0) {
    throw InputError("gaussian membership needs finite center and width > 0");
  }
  return MembershipFunction(Gaussian{center, width});
}

MembershipFunction MembershipFunction::sigmoid(double slope, double inflection) {
  if (!std::isfinite(slope) || !std::isfinite(inflection)) {
    throw InputError("sigmoid membership needs finite slope and inflection");
  }
  return MembershipFunction(Sigmoid{slope, inflection});
}

double MembershipFunction::operator()(double x) const {
  if (!std::isfinite(x)) throw InputError("membership evaluated at a non-finite value");
  if (const auto* g = std::get_if<Gaussian>(&shape_)) {
    const double d = x - g->center;
    return std::exp(-(d * d) / (2.0 * g->width * g->width));
  }
  const auto& s = std::get<Sigmoid>(shape_);
  // exp overflow to +inf yields exactly 0, which is the correct tail.
  return 1.0 / (1.0 + std::exp(-s.slope * (x - s.inflection)));
}

LinguisticVariable::LinguisticVariable(std::string name, Interval universe, std::vector<Term> terms)
    : name_(std::move(name)), universe_(universe), terms_(std::move(terms)) {
  if (!std::isfinite(universe_.lo) || !std::isfinite(universe_.hi) || !(universe_.lo < universe_.hi)) {
    throw ConfigError("variable '" + name_ + "': universe must satisfy lo < hi");
  }
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (terms_[i].first == terms_[j].first) {
        throw ConfigError("variable '" + name_ + "': duplicate term '" + terms_[i].first + "'");
      }
    }
  }
}

bool LinguisticVariable::has_term(const std::string& label) const {
  return std::any_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.first == label; });
}

const MembershipFunction& LinguisticVariable::term(const std::string& label) const {
  for (const auto& [l, mf] : terms_) {
    if (l == label) return mf;
  }
  throw ConfigError("variable '" + name_ + "' has no term '" + label + "'");
}

double LinguisticVariable::degree(const std::string& label, double x) const {
  if (!std::isfinite(x)) throw InputError("variable '" + name_ + "': non-finite input");
  return term(label)(universe_.clamp(x));
}

AggregatedMembership::AggregatedMembership(std::string variable, Interval universe,
                                           std::vector<ClippedConsequent> parts)
    : variable_(std::move(variable)), universe_(universe), parts_(std::move(parts)) {}

double AggregatedMembership::operator()(double y) const {
  double best = 0.0;
  for (const auto& p : parts_) best = std::max(best, std::min(p.strength, p.mf(y)));
  return best;
}

double AggregatedMembership::max_strength() const {
  double best = 0.0;
  for (const auto& p : parts_) best = std::max(best, p.strength);
  return best;
}

AggregatedMembership AggregatedMembership::compacted() const {
  std::vector<ClippedConsequent> merged;
  for (const auto& p : parts_) {
    auto it = std::find_if(merged.begin(), merged.end(), [&](const ClippedConsequent& m) { return m.mf == p.mf; });
    if (it == merged.end()) {
      merged.push_back(p);
    } else {
      it->strength = std::max(it->strength, p.strength);
    }
  }
  return AggregatedMembership(variable_, universe_, std::move(merged));
}

double firing_strength(const Rule& rule, const CrispInputs& inputs, const VariableSet& vars) {
  double h = 1.0;
  for (const auto& [var, label] : rule.antecedent) {
    const auto v = vars.find(var);
    if (v == vars.end()) throw ConfigError("rule references unknown variable '" + var + "'");
    const auto x = inputs.find(var);
    if (x == inputs.end()) throw InputError("missing crisp input for '" + var + "'");
    h = std::min(h, v->second.degree(label, x->second));
  }
  return h;
}

RuleBase::RuleBase(std::vector<LinguisticVariable> inputs, std::vector<LinguisticVariable> outputs,
                   std::vector<Rule> rules)
    : inputs_(std::move(inputs)), outputs_(std::move(outputs)), rules_(std::move(rules)) {
  for (const auto& v : inputs_) vars_.emplace(v.name(), v);
  for (const auto& v : outputs_) {
    if (!vars_.emplace(v.name(), v).second) {
      throw ConfigError("variable '" + v.name() + "' declared twice in rule base");
    }
  }
  if (vars_.size() != inputs_.size() + outputs_.size()) throw ConfigError("duplicate input variable in rule base");

  auto is_input = [&](const std::string& n) {
    return std::any_of(inputs_.begin(), inputs_.end(), [&](const auto& v) { return v.name() == n; });
  };
  for (std::size_t k = 0; k < rules_.size(); ++k) {
    const auto where = "rule " + std::to_string(k + 1) + ": ";
    for (const auto& [var, label] : rules_[k].antecedent) {
      if (!is_input(var)) throw ConfigError(where + "antecedent uses undeclared input '" + var + "'");
      if (!vars_.at(var).has_term(label)) throw ConfigError(where + "'" + var + "' has no term '" + label + "'");
    }
    if (rules_[k].consequent.size() != outputs_.size()) {
      throw ConfigError(where + "consequent must assign every output variable exactly once");
    }
    for (const auto& out : outputs_) {
      const auto c = rules_[k].consequent.find(out.name());
      if (c == rules_[k].consequent.end()) throw ConfigError(where + "consequent misses '" + out.name() + "'");
      if (!out.has_term(c->second)) throw ConfigError(where + "'" + out.name() + "' has no term '" + c->second + "'");
    }
  }
}

std::vector<double> RuleBase::firing_strengths(const CrispInputs& inputs) const {
  std::vector<double> h;
  h.reserve(rules_.size());
  for (const auto& r : rules_) h.push_back(firing_strength(r, inputs, vars_));
  return h;
}

std::map<std::string, AggregatedMembership> RuleBase::evaluate(const CrispInputs& inputs) const {
  const auto h = firing_strengths(inputs);
  std::map<std::string, AggregatedMembership> out;
  for (const auto& var : outputs_) {
    std::vector<ClippedConsequent> parts;
    parts.reserve(rules_.size());
    for (std::size_t k = 0; k < rules_.size(); ++k) {
      parts.push_back({h[k], var.term(rules_[k].consequent.at(var.name()))});
    }
    out.emplace(var.name(), AggregatedMembership(var.name(), var.universe(), std::move(parts)));
  }
  return out;
}

}  // namespace bbfm
