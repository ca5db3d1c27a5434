#pragma once

// Fuzzification and max-min inference that stops before defuzzification.
// A rule base evaluates to one AggregatedMembership per output variable;
// those functions are the objectives handed to command fusion.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace bbfm {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double clamp(double x) const { return x < lo ? lo : (x > hi ? hi : x); }
  bool contains(double x) const { return x >= lo && x <= hi; }
  bool operator==(const Interval&) const = default;
};

struct Gaussian {
  double center = 0.0;
  double width = 1.0;  // sigma, > 0
  bool operator==(const Gaussian&) const = default;
};

struct Sigmoid {
  double slope = 1.0;  // sign gives direction
  double inflection = 0.0;
  bool operator==(const Sigmoid&) const = default;
};

class MembershipFunction {
 public:
  using Shape = std::variant<Gaussian, Sigmoid>;

  /// Throws InputError unless width > 0 and both parameters are finite.
  static MembershipFunction gaussian(double center, double width);
  /// Throws InputError unless both parameters are finite.
  static MembershipFunction sigmoid(double slope, double inflection);

  /// Degree of membership in [0, 1]. Non-finite x is an InputError.
  double operator()(double x) const;

  const Shape& shape() const { return shape_; }
  bool operator==(const MembershipFunction&) const = default;

 private:
  explicit MembershipFunction(Shape shape) : shape_(shape) {}
  Shape shape_;
};

inline double eval_mf(const MembershipFunction& mf, double x) { return mf(x); }

class LinguisticVariable {
 public:
  using Term = std::pair<std::string, MembershipFunction>;

  LinguisticVariable(std::string name, Interval universe, std::vector<Term> terms);

  const std::string& name() const { return name_; }
  const Interval& universe() const { return universe_; }
  const std::vector<Term>& terms() const { return terms_; }

  bool has_term(const std::string& label) const;
  /// Throws ConfigError for an unknown label.
  const MembershipFunction& term(const std::string& label) const;

  /// Membership of a crisp value, clamped into the universe first.
  double degree(const std::string& label, double x) const;

  bool operator==(const LinguisticVariable&) const = default;

 private:
  std::string name_;
  Interval universe_;
  std::vector<Term> terms_;
};

using VariableSet = std::map<std::string, LinguisticVariable>;
using CrispInputs = std::map<std::string, double>;

struct Rule {
  std::map<std::string, std::string> antecedent;  // absent variable = don't-care
  std::map<std::string, std::string> consequent;

  bool operator==(const Rule&) const = default;
};

struct ClippedConsequent {
  double strength = 0.0;
  MembershipFunction mf;
};

/// Lazily evaluated output fuzzy set: y -> max_k min(H_k, mu_k(y)).
class AggregatedMembership {
 public:
  AggregatedMembership(std::string variable, Interval universe, std::vector<ClippedConsequent> parts);

  double operator()(double y) const;

  const std::string& variable() const { return variable_; }
  const Interval& universe() const { return universe_; }
  const std::vector<ClippedConsequent>& parts() const { return parts_; }

  /// Largest firing strength; an upper bound on the function.
  double max_strength() const;

  /// Equivalent function with one part per distinct consequent, keeping the
  /// largest strength of each. Exact: min/max commute with the merge.
  AggregatedMembership compacted() const;

 private:
  std::string variable_;
  Interval universe_;
  std::vector<ClippedConsequent> parts_;
};

/// Min over the rule's specified antecedent memberships. Don't-care
/// variables are skipped; an empty antecedent fires with strength 1.
double firing_strength(const Rule& rule, const CrispInputs& inputs, const VariableSet& vars);

class RuleBase {
 public:
  /// Validates that every rule references declared variables and terms and
  /// that every consequent covers all outputs. Throws ConfigError.
  RuleBase(std::vector<LinguisticVariable> inputs, std::vector<LinguisticVariable> outputs, std::vector<Rule> rules);

  const std::vector<LinguisticVariable>& inputs() const { return inputs_; }
  const std::vector<LinguisticVariable>& outputs() const { return outputs_; }
  const std::vector<Rule>& rules() const { return rules_; }
  const VariableSet& variables() const { return vars_; }

  /// Strength of every rule, in rule order.
  std::vector<double> firing_strengths(const CrispInputs& inputs) const;

  /// One aggregated function per output variable. Throws InputError if an
  /// input referenced by some antecedent is missing or non-finite.
  std::map<std::string, AggregatedMembership> evaluate(const CrispInputs& inputs) const;

 private:
  std::vector<LinguisticVariable> inputs_;
  std::vector<LinguisticVariable> outputs_;
  std::vector<Rule> rules_;
  VariableSet vars_;
};

inline std::map<std::string, AggregatedMembership> evaluate_rulebase(const RuleBase& rb, const CrispInputs& inputs) {
  return rb.evaluate(inputs);
}

}  // namespace bbfm
