#include "bbfm/sim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bbfm/error.hpp"

namespace bbfm {

namespace {

double cross(double ax, double ay, double bx, double by) { return ax * by - ay * bx; }

bool finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

}  // namespace

double distance_to_segment(Point p, const Segment& s) {
  const double ex = s.b.x - s.a.x;
  const double ey = s.b.y - s.a.y;
  const double len2 = ex * ex + ey * ey;
  double t = ((p.x - s.a.x) * ex + (p.y - s.a.y) * ey) / len2;
  t = std::clamp(t, 0.0, 1.0);
  return std::hypot(p.x - (s.a.x + t * ex), p.y - (s.a.y + t * ey));
}

void World::add_segment(Point a, Point b) {
  if (!finite(a) || !finite(b)) throw InputError("obstacle segment has non-finite coordinates");
  if (a == b) throw InputError("obstacle segment has zero length");
  segments_.push_back({a, b});
}

void World::add_polyline(std::span<const Point> pts) {
  for (std::size_t i = 1; i < pts.size(); ++i) add_segment(pts[i - 1], pts[i]);
}

void World::add_polygon(std::span<const Point> pts) {
  if (pts.size() < 3) throw InputError("polygon needs at least 3 vertices");
  add_polyline(pts);
  add_segment(pts.back(), pts.front());
}

double World::clearance(Point p) const {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& s : segments_) best = std::min(best, distance_to_segment(p, s));
  return best;
}

void RobotParams::validate() const {
  if (!(wheel_radius > 0.0 && axle_length > 0.0 && body_radius > 0.0)) {
    throw InputError("robot dimensions must be positive");
  }
  if (!(u_limits.lo < u_limits.hi) || !(omega_limits.lo < omega_limits.hi)) {
    throw InputError("actuator limits must be ordered");
  }
}

WheelSpeeds to_wheel_speeds(const RobotParams& robot, VelocityCommand cmd) {
  const double half = robot.axle_length / 2.0;
  return {(cmd.u - cmd.omega * half) / robot.wheel_radius, (cmd.u + cmd.omega * half) / robot.wheel_radius};
}

SensorConfig SensorConfig::defaults() {
  SensorConfig cfg;
  for (std::size_t i = 0; i < kSensorCount; ++i) {
    cfg.mount_angles[i] = deg2rad(-80.0 + 160.0 * static_cast<double>(i) / (kSensorCount - 1));
  }
  return cfg;
}

void SensorConfig::validate() const {
  for (std::size_t i = 1; i < kSensorCount; ++i) {
    if (!(mount_angles[i] > mount_angles[i - 1])) throw InputError("sensor mounts must ascend right-to-left");
  }
  if (!(half_angle >= 0.0) || !(min_range >= 0.0) || !(min_range < max_range)) {
    throw InputError("sensor cone and range must be ordered and non-negative");
  }
  if (rays_per_cone < 1) throw InputError("rays_per_cone must be >= 1");
}

double raycast(const World& world, Point origin, double direction, double max_range) {
  const double dx = std::cos(direction);
  const double dy = std::sin(direction);
  double best = max_range;
  for (const auto& s : world.segments()) {
    const double ex = s.b.x - s.a.x;
    const double ey = s.b.y - s.a.y;
    const double wx = s.a.x - origin.x;
    const double wy = s.a.y - origin.y;
    const double denom = cross(dx, dy, ex, ey);
    if (std::abs(denom) < 1e-12 * std::hypot(ex, ey)) {
      // Parallel: only a collinear segment can be hit, at its nearer end.
      if (std::abs(cross(wx, wy, dx, dy)) > 1e-12) continue;
      const double ta = wx * dx + wy * dy;
      const double tb = (s.b.x - origin.x) * dx + (s.b.y - origin.y) * dy;
      if (ta < 0.0 && tb < 0.0) continue;
      const double t = (ta < 0.0 || tb < 0.0) ? 0.0 : std::min(ta, tb);
      best = std::min(best, t);
      continue;
    }
    const double t = cross(wx, wy, ex, ey) / denom;
    const double u = cross(wx, wy, dx, dy) / denom;
    if (t >= 0.0 && u >= 0.0 && u <= 1.0) best = std::min(best, t);
  }
  return best;
}

std::array<double, kSensorCount> sense(const World& world, const Pose& pose, const SensorConfig& cfg) {
  std::array<double, kSensorCount> out{};
  const int n = cfg.rays_per_cone;
  for (std::size_t i = 0; i < kSensorCount; ++i) {
    const double mount = pose.theta + cfg.mount_angles[i];
    double d = cfg.max_range;
    for (int k = 0; k < n; ++k) {
      const double offset = n == 1 ? 0.0 : cfg.half_angle * (2.0 * k / (n - 1) - 1.0);
      d = std::min(d, raycast(world, pose.position(), mount + offset, cfg.max_range));
    }
    out[i] = std::clamp(d, cfg.min_range, cfg.max_range);
  }
  return out;
}

Pose step_kinematics(const Pose& pose, VelocityCommand cmd, double dt) {
  return {pose.x + cmd.u * std::cos(pose.theta) * dt, pose.y + cmd.u * std::sin(pose.theta) * dt,
          wrap_angle(pose.theta + cmd.omega * dt)};
}

std::string_view outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Success:
      return "success";
    case Outcome::Collision:
      return "collision";
    case Outcome::Timeout:
      return "timeout";
  }
  return "?";
}

TrajectoryTrace run_episode(const World& world, const Pose& start, const Pose& target, const Controller& controller,
                            const EpisodeLimits& limits, const RobotParams& robot, const SensorConfig& sensors) {
  if (!(limits.dt > 0.0) || limits.max_steps < 0 || !(limits.stop_radius >= 0.0)) {
    throw InputError("episode limits need dt > 0, max_steps >= 0, stop_radius >= 0");
  }
  TrajectoryTrace trace;
  trace.dt = limits.dt;
  Pose pose{start.x, start.y, wrap_angle(start.theta)};
  std::optional<double> prev_rho;
  for (int step = 0;; ++step) {
    const auto readings = sense(world, pose, sensors);
    TraceRow row;
    row.step = step;
    row.t = step * limits.dt;
    row.pose = pose;
    row.inputs = compute_nav_inputs(pose, target, prev_rho, readings);

    if (world.clearance(pose.position()) < robot.body_radius) {
      trace.outcome = Outcome::Collision;
    } else if (row.inputs.rho <= limits.stop_radius) {
      trace.outcome = Outcome::Success;
    } else if (step >= limits.max_steps) {
      trace.outcome = Outcome::Timeout;
    } else {
      const auto d = controller(row.inputs);
      row.command = d.command;
      row.h_lm = d.h_lm;
      row.h_oa = d.h_oa;
      row.h_gr = d.h_gr;
      trace.rows.push_back(row);
      prev_rho = row.inputs.rho;
      pose = step_kinematics(pose, d.command, limits.dt);
      continue;
    }
    trace.rows.push_back(row);
    return trace;
  }
}

}  // namespace bbfm
