#pragma once

// Planar differential-drive simulation: segment world, cone-sampled
// ultrasonic ring, Euler unicycle integration and the episode loop.

#include <array>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "bbfm/behaviors.hpp"
#include "bbfm/fusion.hpp"
#include "bbfm/geometry.hpp"

namespace bbfm {

struct Segment {
  Point a;
  Point b;
};

/// Point-to-segment Euclidean distance.
double distance_to_segment(Point p, const Segment& s);

struct Box {
  double xmin = -10.0;
  double ymin = -10.0;
  double xmax = 10.0;
  double ymax = 10.0;
};

class World {
 public:
  World() = default;
  explicit World(Box bounds) : bounds_(bounds) {}

  /// Throws InputError for non-finite or zero-length segments.
  void add_segment(Point a, Point b);
  /// Open chain of segments through the given points.
  void add_polyline(std::span<const Point> pts);
  /// Closed chain; the last point connects back to the first.
  void add_polygon(std::span<const Point> pts);

  const std::vector<Segment>& segments() const { return segments_; }
  const Box& bounds() const { return bounds_; }
  void set_bounds(Box b) { bounds_ = b; }

  /// Distance from p to the nearest obstacle segment (+inf if none).
  double clearance(Point p) const;

 private:
  Box bounds_;
  std::vector<Segment> segments_;
};

struct RobotParams {
  double wheel_radius = 0.085;  // m; unused by the unicycle model
  double axle_length = 0.265;   // m
  Interval u_limits{0.0, 1.3};
  Interval omega_limits{-4.3, 4.3};
  double body_radius = 0.18;  // m, collision disc

  void validate() const;
};

struct WheelSpeeds {
  double left = 0.0;   // rad/s
  double right = 0.0;  // rad/s
};

/// Converts a body twist to wheel angular speeds.
WheelSpeeds to_wheel_speeds(const RobotParams& robot, VelocityCommand cmd);

struct SensorConfig {
  std::array<double, kSensorCount> mount_angles{};  // rad, right-to-left
  double half_angle = deg2rad(7.5);
  double min_range = 0.0;
  double max_range = 4.0;
  int rays_per_cone = 5;

  /// Eight mounts evenly spread over [-80 deg, +80 deg].
  static SensorConfig defaults();
  void validate() const;
};

/// Distance along the half-line from origin to the nearest segment, or
/// max_range if nothing is hit within range.
double raycast(const World& world, Point origin, double direction, double max_range = 4.0);

/// Per sensor, the minimum raycast over rays spread evenly across its cone,
/// clamped to [min_range, max_range]. Sensors sit at the robot center.
std::array<double, kSensorCount> sense(const World& world, const Pose& pose, const SensorConfig& cfg);

/// Explicit Euler step of the unicycle model; theta is wrapped.
Pose step_kinematics(const Pose& pose, VelocityCommand cmd, double dt);

enum class Outcome { Success, Collision, Timeout };
std::string_view outcome_name(Outcome o);

/// Controller output for one step plus diagnostics for the trace.
struct ControlDecision {
  VelocityCommand command;
  double h_lm = 0.0;  // max firing strength per behavior (0 if disabled)
  double h_oa = 0.0;
  double h_gr = 0.0;
};

using Controller = std::function<ControlDecision(const NavInputs&)>;

struct EpisodeLimits {
  double dt = 0.1;
  int max_steps = 5000;
  double stop_radius = 0.05;
};

struct TraceRow {
  int step = 0;
  double t = 0.0;
  Pose pose;
  NavInputs inputs;
  VelocityCommand command;  // {0, 0} on the terminal row
  double h_lm = 0.0;
  double h_oa = 0.0;
  double h_gr = 0.0;
};

/// Rows 0..N record the state at t = k*dt and the command issued there.
/// The final row is the terminal state; N = steps() transitions happened.
struct TrajectoryTrace {
  double dt = 0.1;
  std::vector<TraceRow> rows;
  Outcome outcome = Outcome::Timeout;

  int steps() const { return rows.empty() ? 0 : static_cast<int>(rows.size()) - 1; }
};

/// sense -> nav inputs -> controller -> integrate, until the target is
/// within stop_radius (success), the body disc overlaps an obstacle
/// (collision) or max_steps transitions have run (timeout).
TrajectoryTrace run_episode(const World& world, const Pose& start, const Pose& target, const Controller& controller,
                            const EpisodeLimits& limits, const RobotParams& robot = {},
                            const SensorConfig& sensors = SensorConfig::defaults());

}  // namespace bbfm
