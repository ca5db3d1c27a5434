// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "bbfm/baselines.hpp"
#include "bbfm/behaviors.hpp"
#include "bbfm/config.hpp"
#include "bbfm/fusion.hpp"
#include "bbfm/harness.hpp"
#include "bbfm/navigator.hpp"
#include "oracles.hpp"

using namespace bbfm;

namespace {

struct Verdict {
  bool ok = true;
  std::string detail;
};

// Records the first failure; later checks still run.
struct Check {
  Verdict v;
  void expect(bool cond, const std::string& what) {
    if (!cond && v.ok) {
      v.ok = false;
      v.detail = what;
    }
  }
};

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

CommandDomain default_domain() { return default_config().domain(); }

Verdict membership() {
  Check c;
  const auto g = MembershipFunction::gaussian(0.3, 0.7);
  c.expect(g(0.3) == 1.0, "gaussian peak");
  c.expect(std::abs(g(1.0) - std::exp(-0.5)) <= 1e-12 && std::abs(g(-0.4) - std::exp(-0.5)) <= 1e-12, "one sigma");
  const auto s = MembershipFunction::sigmoid(-4.0, 1.2);
  c.expect(std::abs(s(1.2) - 0.5) <= 1e-12, "sigmoid inflection");
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> x(-50, 50);
  std::vector<MembershipFunction> mfs;
  for (const auto& [_, var] : default_vocabulary()) {
    for (const auto& [__, mf] : var.terms()) mfs.push_back(mf);
  }
  for (int i = 0; i < 100000; ++i) {
    const double y = mfs[static_cast<std::size_t>(i) % mfs.size()](x(rng));
    if (!(y >= 0.0 && y <= 1.0)) c.expect(false, fmt("out of range value %g", y));
  }
  return c.v;
}

Verdict inference_oracle() {
  Check c;
  const auto d = default_domain();
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> dist(0, 4), ang(-std::numbers::pi, std::numbers::pi), rho(0, 20), ed(-1, 1);
  for (const auto& b : default_behaviors()) {
    for (int t = 0; t < 200; ++t) {
      const CrispInputs in = NavInputs{dist(rng), dist(rng), dist(rng), ang(rng), rho(rng), ed(rng)}.as_crisp();
      const auto agg = b.rules.evaluate(in);
      for (const auto& [out, grid] : {std::pair{"u", &d.u_grid}, std::pair{"omega", &d.omega_grid}}) {
        const auto want = oracle::max_min(b.rules, in, out, *grid);
        for (std::size_t i = 0; i < grid->size(); ++i) {
          if (agg.at(out)((*grid)[i]) != want[i]) {
            c.expect(false, std::string(behavior_key(b.kind)) + " " + out + fmt(" differs at y=%g", (*grid)[i]));
            break;
          }
        }
      }
    }
  }
  return c.v;
}

Verdict table_fidelity() {
  Check c;
  oracle::Tables t;
  try {
    t = oracle::load_tables(std::string(BBFM_TEST_DATA) + "/rule_tables.tsv");
  } catch (const std::exception& e) {
    return {false, e.what()};
  }
  c.expect(t.rules["obstacle_avoidance"].size() == 28 && t.rules["goal_reaching"].size() == 15 &&
               t.rules["local_minimum"].size() == 7,
           "transcription row counts");
  c.expect(t.normalized == 6, fmt("expected 6 normalized cells, got %g", t.normalized));
  for (const auto& b : default_behaviors()) {
    const auto& want = t.rules[std::string(behavior_key(b.kind))];
    const auto& got = b.rules.rules();
    c.expect(got.size() == want.size(), std::string(behavior_key(b.kind)) + " rule count");
    for (std::size_t i = 0; i < std::min(got.size(), want.size()); ++i) {
      c.expect(got[i] == want[i], std::string(behavior_key(b.kind)) + fmt(" rule %g", static_cast<double>(i + 1)));
    }
  }
  return c.v;
}

std::vector<double> leveled(std::mt19937_64& rng, std::size_t n) {
  const int levels = std::uniform_int_distribution<int>(1, 6)(rng);
  std::uniform_int_distribution<int> pick(0, levels);
  std::vector<double> f(n);
  for (auto& v : f) v = static_cast<double>(pick(rng)) / levels;
  return f;
}

std::vector<double> spaced(std::size_t n, double lo, double hi) {
  std::vector<double> g(n);
  for (std::size_t i = 0; i < n; ++i) g[i] = n == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / (n - 1);
  return g;
}

Verdict lexicographic_oracle() {
  Check c;
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::size_t> size(1, 1000);
  for (int t = 0; t < 500; ++t) {
    const auto nu = size(rng), nw = size(rng);
    const CommandDomain d{spaced(nu, 0, 1.3), spaced(nw, -4.3, 4.3), 0.0};
    std::vector<std::vector<double>> fu, fw;
    for (int k = 0; k < 3; ++k) {
      fu.push_back(leveled(rng, nu));
      fw.push_back(leveled(rng, nw));
    }
    const auto got = fuse_sampled(fu, fw, d);
    const auto su = oracle::filter_all(fu, nu, 0.0);
    const auto sw = oracle::filter_all(fw, nw, 0.0);
    const std::size_t iu = oracle::greatest(su, d.u_grid), iw = oracle::least_abs(sw, d.omega_grid);
    c.expect(got.u == d.u_grid[iu] && got.omega == d.omega_grid[iw], fmt("trial %g differs", t));
    c.expect(!oracle::dominated(fu, iu, nu) && !oracle::dominated(fw, iw, nw), fmt("trial %g dominated", t));
  }
  return c.v;
}

Verdict priority_dominance() {
  Check c;
  std::mt19937_64 rng(5);
  const auto d = default_domain();
  const std::size_t nu = d.u_grid.size(), nw = d.omega_grid.size();
  for (int t = 0; t < 1000; ++t) {
    auto top_u = leveled(rng, nu), top_w = leveled(rng, nw);
    top_u[std::uniform_int_distribution<std::size_t>(0, nu - 1)(rng)] = 1.5;
    top_w[std::uniform_int_distribution<std::size_t>(0, nw - 1)(rng)] = 1.5;
    const std::vector<std::vector<double>> au{top_u, leveled(rng, nu), leveled(rng, nu)};
    const std::vector<std::vector<double>> aw{top_w, leveled(rng, nw), leveled(rng, nw)};
    const std::vector<std::vector<double>> bu{top_u, leveled(rng, nu), leveled(rng, nu)};
    const std::vector<std::vector<double>> bw{top_w, leveled(rng, nw), leveled(rng, nw)};
    c.expect(fuse_sampled(au, aw, d) == fuse_sampled(bu, bw, d), fmt("trial %g changed", t));
  }
  return c.v;
}

Verdict open_field() {
  Check c;
  auto sc = bundled_scenario("open-field");
  sc.start = {0, 0, 0};
  sc.target = {5, 0, 0};
  const auto r = run_scenario(sc);
  c.expect(r.metrics.outcome == Outcome::Success, "outcome " + std::string(outcome_name(r.metrics.outcome)));
  c.expect(r.metrics.target_error <= 0.05, fmt("target error %g", r.metrics.target_error));
  c.expect(r.metrics.traveled_distance <= 1.05 * 5.0, fmt("path %g m", r.metrics.traveled_distance));
  if (c.v.ok) c.v.detail = fmt("path %.3f m, error %.3f m", r.metrics.traveled_distance, r.metrics.target_error);
  return c.v;
}

Verdict office() {
  Check c;
  const auto sc = bundled_scenario("office-like");
  const auto r = run_scenario(sc);
  c.expect(r.metrics.outcome == Outcome::Success, "outcome " + std::string(outcome_name(r.metrics.outcome)));
  double worst = INFINITY;
  for (const auto& row : r.trace.rows) worst = std::min(worst, sc.world.clearance(row.pose.position()));
  c.expect(worst >= sc.config.robot.body_radius, fmt("clearance %g m", worst));
  if (c.v.ok) c.v.detail = fmt("min clearance %.3f m, %g steps", worst, r.trace.steps());
  return c.v;
}

Verdict local_minimum() {
  Check c;
  auto trap = bundled_scenario("u-trap");
  auto no_lm = trap;
  no_lm.disabled.insert(BehaviorKind::LocalMinimumAvoidance);
  const auto results = run_batch(std::vector<ScenarioConfig>{no_lm, trap, bundled_scenario("nested-trap")});
  c.expect(results[0].metrics.outcome == Outcome::Timeout,
           "u-trap without LM: " + std::string(outcome_name(results[0].metrics.outcome)));
  c.expect(results[1].metrics.outcome == Outcome::Success,
           "u-trap with LM: " + std::string(outcome_name(results[1].metrics.outcome)));
  c.expect(results[2].metrics.outcome == Outcome::Success,
           "nested-trap: " + std::string(outcome_name(results[2].metrics.outcome)));
  if (c.v.ok) c.v.detail = fmt("no-LM timeout, LM %.1f s, nested %.1f s", results[1].metrics.elapsed_time,
                               results[2].metrics.elapsed_time);
  return c.v;
}

Verdict divergence() {
  Check c;
  std::ifstream f(std::string(BBFM_TEST_DATA) + "/divergence.json");
  const auto j = Json::parse(f);
  const auto& i = j.at("inputs");
  const NavInputs in{i.at("d_l"), i.at("d_f"), i.at("d_r"), i.at("alpha"), i.at("rho"), i.at("e_d")};
  const auto d = default_domain();
  const auto x = Navigator(default_behaviors(), d).decide(in).command;
  const auto a = Navigator(default_behaviors(), d, Strategy::DefuzzifyThenCombine).decide(in).command;
  const auto b = Navigator(default_behaviors(), d, Strategy::CombineThenDefuzzify).decide(in).command;
  c.expect(std::abs(a.omega - b.omega) > 0.1, fmt("omega gap %g", std::abs(a.omega - b.omega)));
  c.expect(!(x == a) || !(x == b), "bbfm equals both baselines");
  if (c.v.ok) c.v.detail = fmt("omega fig4a %.3f, fig4b %.3f, bbfm %.3f", a.omega, b.omega, x.omega);
  return c.v;
}

Verdict smoothness_order() {
  Check c;
  auto sc = bundled_scenario("obstacle-field");
  auto base = sc;
  base.strategy = Strategy::CombineThenDefuzzify;
  const auto r = run_batch(std::vector<ScenarioConfig>{sc, base});
  c.expect(r[0].metrics.smoothness < r[1].metrics.smoothness,
           fmt("bbfm %g deg vs fig4b %g deg", r[0].metrics.smoothness, r[1].metrics.smoothness));
  if (c.v.ok) c.v.detail = fmt("bbfm %.3f deg/step < fig4b %.3f deg/step", r[0].metrics.smoothness, r[1].metrics.smoothness);
  return c.v;
}

Verdict determinism() {
  Check c;
  for (const auto& name : bundled_scenario_names()) {
    std::string csv[2];
    for (auto& s : csv) {
      std::ostringstream o;
      write_trace_csv(o, run_scenario(bundled_scenario(name)).trace);
      s = o.str();
    }
    c.expect(csv[0] == csv[1], name + " traces differ");
  }
  return c.v;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Verdict()> run;
    double limit_s;  // 0 = none
  };
  const std::vector<Criterion> all{
      {"membership functions", membership, 1},
      {"inference equals brute-force max-min", inference_oracle, 10},
      {"rule tables match transcription", table_fidelity, 0},
      {"lexicographic fusion equals exhaustive filtering", lexicographic_oracle, 30},
      {"top-priority unique maximizer dominates", priority_dominance, 0},
      {"open-field navigation", open_field, 5},
      {"office-like course without collision", office, 0},
      {"local-minimum contrast", local_minimum, 0},
      {"baseline divergence", divergence, 0},
      {"smoothness ordering vs combine-then-defuzzify", smoothness_order, 0},
      {"deterministic traces", determinism, 0},
  };
  int failed = 0;
  for (std::size_t k = 0; k < all.size(); ++k) {
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = all[k].run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (v.ok && all[k].limit_s > 0 && s >= all[k].limit_s) v = {false, fmt("took %.2f s, limit %g s", s, all[k].limit_s)};
    failed += !v.ok;
    std::printf("%s %2zu %s (%.2f s)%s%s\n", v.ok ? "PASS" : "FAIL", k + 1, all[k].name, s, v.detail.empty() ? "" : ": ",
                v.detail.c_str());
  }
  std::printf("%d of %zu criteria failed\n", failed, all.size());
  return failed ? 1 : 0;
}
