#include "bbfm/navigator.hpp"

#include <algorithm>

#include "bbfm/error.hpp"

namespace bbfm {

Navigator::Navigator(std::vector<BehaviorSpec> behaviors, CommandDomain domain, Strategy strategy,
                     std::set<BehaviorKind> disabled, std::vector<double> baseline_weights)
    : behaviors_(std::move(behaviors)),
      domain_(std::move(domain)),
      strategy_(strategy),
      disabled_(std::move(disabled)),
      weights_(std::move(baseline_weights)) {
  domain_.validate();
  std::stable_sort(behaviors_.begin(), behaviors_.end(),
                   [](const BehaviorSpec& a, const BehaviorSpec& b) { return a.priority < b.priority; });
  for (std::size_t i = 1; i < behaviors_.size(); ++i) {
    if (behaviors_[i].priority == behaviors_[i - 1].priority) throw ConfigError("behavior priorities must be unique");
  }
  const auto active = std::count_if(behaviors_.begin(), behaviors_.end(),
                                    [&](const BehaviorSpec& b) { return enabled(b.kind); });
  if (active == 0) throw ConfigError("at least one behavior must be enabled");
  if (!weights_.empty() && weights_.size() != static_cast<std::size_t>(active)) {
    throw ConfigError("baseline weights must match the number of enabled behaviors");
  }
}

std::vector<BehaviorOutput> Navigator::evaluate(const NavInputs& in) const {
  const auto crisp = in.as_crisp();
  std::vector<BehaviorOutput> out;
  for (const auto& b : behaviors_) {
    if (!enabled(b.kind)) continue;
    auto agg = b.rules.evaluate(crisp);
    out.push_back({agg.at("u"), agg.at("omega")});
  }
  return out;
}

ControlDecision Navigator::decide(const NavInputs& in) const {
  const auto outputs = evaluate(in);
  ControlDecision d;
  std::size_t k = 0;
  for (const auto& b : behaviors_) {
    if (!enabled(b.kind)) continue;
    const double h = std::max(outputs[k].u.max_strength(), outputs[k].omega.max_strength());
    ++k;
    switch (b.kind) {
      case BehaviorKind::LocalMinimumAvoidance:
        d.h_lm = h;
        break;
      case BehaviorKind::ObstacleAvoidance:
        d.h_oa = h;
        break;
      case BehaviorKind::GoalReaching:
        d.h_gr = h;
        break;
    }
  }
  d.command = strategy_ == Strategy::Bbfm ? fuse(outputs, domain_)
                                          : fuse_baseline({strategy_, weights_}, outputs, domain_);
  return d;
}

}  // namespace bbfm
