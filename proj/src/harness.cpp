#include "bbfm/harness.hpp"

#include <charconv>
#include <cmath>
#include <exception>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "bbfm/error.hpp"

namespace bbfm {

Navigator make_navigator(const ScenarioConfig& sc) {
  return Navigator(sc.config.behaviors, sc.config.domain(), sc.strategy, sc.disabled);
}

Metrics compute_metrics(const TrajectoryTrace& trace) {
  if (trace.rows.empty()) throw InputError("cannot compute metrics of an empty trace");
  Metrics m;
  double turn = 0.0;
  for (std::size_t k = 1; k < trace.rows.size(); ++k) {
    const auto& a = trace.rows[k - 1].pose;
    const auto& b = trace.rows[k].pose;
    m.traveled_distance += distance(a.position(), b.position());
    turn += std::abs(wrap_angle(b.theta - a.theta));
  }
  const int n = trace.steps();
  m.elapsed_time = trace.rows.back().t;
  m.smoothness = n > 0 ? rad2deg(turn / n) : 0.0;
  m.target_error = trace.rows.back().inputs.rho;
  m.outcome = trace.outcome;
  return m;
}

int exit_code(Outcome outcome) {
  switch (outcome) {
    case Outcome::Success:
      return 0;
    case Outcome::Collision:
      return 2;
    case Outcome::Timeout:
      return 3;
  }
  return 1;
}

namespace {

constexpr const char* kCsvHeader = "step,t,x,y,theta,d_l,d_f,d_r,alpha,rho,e_d,u,omega,H_LM,H_OA,H_GR";

// Shortest representation that parses back to the same double.
void put(std::ostream& out, double v) {
  char buf[32];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  out.write(buf, r.ptr - buf);
}

double parse_double(std::string_view field, std::size_t line) {
  double v = 0.0;
  const auto r = std::from_chars(field.data(), field.data() + field.size(), v);
  if (r.ec != std::errc{} || r.ptr != field.data() + field.size()) {
    throw InputError("trace line " + std::to_string(line) + ": bad number '" + std::string(field) + "'");
  }
  return v;
}

}  // namespace

void write_trace_csv(std::ostream& out, const TrajectoryTrace& trace) {
  out << kCsvHeader << '\n';
  for (const auto& r : trace.rows) {
    out << r.step;
    for (double v : {r.t, r.pose.x, r.pose.y, r.pose.theta, r.inputs.d_l, r.inputs.d_f, r.inputs.d_r, r.inputs.alpha,
                     r.inputs.rho, r.inputs.e_d, r.command.u, r.command.omega, r.h_lm, r.h_oa, r.h_gr}) {
      out << ',';
      put(out, v);
    }
    out << '\n';
  }
}

TrajectoryTrace read_trace_csv(std::istream& in, const EpisodeLimits& limits) {
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) throw InputError("trace CSV: unexpected header");
  TrajectoryTrace trace;
  trace.dt = limits.dt;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<double> f;
    std::size_t start = 0;
    for (;;) {
      const auto comma = line.find(',', start);
      f.push_back(parse_double(std::string_view(line).substr(start, comma - start), lineno));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (f.size() != 16) throw InputError("trace line " + std::to_string(lineno) + ": expected 16 columns");
    TraceRow r;
    r.step = static_cast<int>(f[0]);
    r.t = f[1];
    r.pose = {f[2], f[3], f[4]};
    r.inputs = {f[5], f[6], f[7], f[8], f[9], f[10]};
    r.command = {f[11], f[12]};
    r.h_lm = f[13];
    r.h_oa = f[14];
    r.h_gr = f[15];
    trace.rows.push_back(r);
  }
  if (trace.rows.empty()) throw InputError("trace CSV has no rows");
  if (trace.rows.size() > 1) trace.dt = trace.rows[1].t - trace.rows[0].t;
  if (trace.rows.back().inputs.rho <= limits.stop_radius) {
    trace.outcome = Outcome::Success;
  } else if (trace.steps() >= limits.max_steps) {
    trace.outcome = Outcome::Timeout;
  } else {
    trace.outcome = Outcome::Collision;
  }
  return trace;
}

Json metrics_to_json(const Metrics& m) {
  return Json{{"outcome", std::string(outcome_name(m.outcome))},
              {"traveled_distance_m", m.traveled_distance},
              {"elapsed_time_s", m.elapsed_time},
              {"smoothness_deg", m.smoothness},
              {"target_error_m", m.target_error}};
}

ScenarioResult run_scenario(const ScenarioConfig& sc, const std::optional<std::filesystem::path>& out_dir) {
  const auto nav = make_navigator(sc);
  ScenarioResult res;
  res.trace = run_episode(sc.world, sc.start, sc.target, nav.controller(), sc.config.limits, sc.config.robot,
                          sc.config.sensors);
  res.metrics = compute_metrics(res.trace);
  if (!out_dir) return res;

  std::filesystem::create_directories(*out_dir);
  auto write = [&](const char* name, auto&& body) {
    const auto path = *out_dir / name;
    std::ofstream f(path);
    if (!f) throw ConfigError(path.string() + ": cannot write");
    body(f);
    res.artifacts.push_back(path);
  };
  write("trace.csv", [&](std::ostream& f) { write_trace_csv(f, res.trace); });
  write("plot.svg", [&](std::ostream& f) { f << render_svg(sc, res.trace); });
  write("metrics.json", [&](std::ostream& f) {
    Json j = metrics_to_json(res.metrics);
    j["scenario"] = sc.name;
    j["strategy"] = std::string(strategy_key(sc.strategy));
    j["steps"] = res.trace.steps();
    f << j.dump(2) << '\n';
  });
  return res;
}

std::vector<ScenarioResult> run_batch(std::span<const ScenarioConfig> scenarios) {
  std::vector<ScenarioResult> results(scenarios.size());
  std::vector<std::exception_ptr> errors(scenarios.size());
  const auto n = static_cast<std::ptrdiff_t>(scenarios.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      results[i] = run_scenario(scenarios[i]);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

}  // namespace bbfm
