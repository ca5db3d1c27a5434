#pragma once

#include <set>
#include <vector>

#include "bbfm/baselines.hpp"
#include "bbfm/behaviors.hpp"
#include "bbfm/fusion.hpp"
#include "bbfm/sim.hpp"

namespace bbfm {

/// Evaluates the active behaviors on each step and fuses their outputs with
/// the selected strategy. Immutable; decide() is safe to call concurrently.
class Navigator {
 public:
  /// Behaviors are ordered by priority; priorities must be unique.
  Navigator(std::vector<BehaviorSpec> behaviors, CommandDomain domain, Strategy strategy = Strategy::Bbfm,
            std::set<BehaviorKind> disabled = {}, std::vector<double> baseline_weights = {});

  /// Outputs of the active behaviors, most important first.
  std::vector<BehaviorOutput> evaluate(const NavInputs& in) const;

  ControlDecision decide(const NavInputs& in) const;

  Controller controller() const {
    return [this](const NavInputs& in) { return decide(in); };
  }

  const std::vector<BehaviorSpec>& behaviors() const { return behaviors_; }
  const CommandDomain& domain() const { return domain_; }
  Strategy strategy() const { return strategy_; }
  bool enabled(BehaviorKind kind) const { return !disabled_.contains(kind); }

 private:
  std::vector<BehaviorSpec> behaviors_;
  CommandDomain domain_;
  Strategy strategy_;
  std::set<BehaviorKind> disabled_;
  std::vector<double> weights_;
};

}  // namespace bbfm
