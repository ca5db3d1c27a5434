#pragma once

#include <cmath>
#include <numbers>

namespace bbfm {

struct Point {
  double x = 0.0;
  double y = 0.0;
  bool operator==(const Point&) const = default;
};

/// Planar pose; theta is kept in [-pi, pi].
struct Pose {
  double x = 0.0;
  double y = 0.0;
  double theta = 0.0;
  Point position() const { return {x, y}; }
  bool operator==(const Pose&) const = default;
};

/// Wraps an angle into [-pi, pi].
inline double wrap_angle(double a) {
  if (a >= -std::numbers::pi && a <= std::numbers::pi) return a;
  a = std::remainder(a, 2.0 * std::numbers::pi);
  return a;
}

inline double distance(Point a, Point b) { return std::hypot(b.x - a.x, b.y - a.y); }

inline double deg2rad(double d) { return d * std::numbers::pi / 180.0; }
inline double rad2deg(double r) { return r * 180.0 / std::numbers::pi; }

}  // namespace bbfm
