#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "bbfm/error.hpp"
#include "bbfm/navigator.hpp"
#include "bbfm/sim.hpp"

using namespace bbfm;

namespace {

// Closed-form ray/segment hit distance, or +inf.
double ray_hit(Point o, double dir, Point a, Point b) {
  const double dx = std::cos(dir), dy = std::sin(dir);
  const double ex = b.x - a.x, ey = b.y - a.y;
  const double det = -dx * ey + dy * ex;  // solve o + t d = a + s e
  if (det == 0.0) return INFINITY;
  const double rx = a.x - o.x, ry = a.y - o.y;
  const double t = (-rx * ey + ry * ex) / det;
  const double s = (dx * ry - dy * rx) / det;
  return (t >= 0 && s >= 0 && s <= 1) ? t : INFINITY;
}

// Exact nearest distance from o to the part of segment ab inside the wedge
// [dir - h, dir + h]; +inf if the segment misses the wedge.
double cone_min(Point o, double dir, double h, Point a, Point b) {
  auto side = [&](double ang, Point p) { return std::cos(ang) * (p.y - o.y) - std::sin(ang) * (p.x - o.x); };
  double t0 = 0.0, t1 = 1.0;
  // left of the right edge, right of the left edge
  for (auto [ang, sign] : {std::pair{dir - h, 1.0}, std::pair{dir + h, -1.0}}) {
    const double fa = sign * side(ang, a), fb = sign * side(ang, b);
    if (fa < 0 && fb < 0) return INFINITY;
    if (fa < 0) t0 = std::max(t0, fa / (fa - fb));
    if (fb < 0) t1 = std::min(t1, fa / (fa - fb));
  }
  if (t0 > t1) return INFINITY;
  const Point p{a.x + t0 * (b.x - a.x), a.y + t0 * (b.y - a.y)}, q{a.x + t1 * (b.x - a.x), a.y + t1 * (b.y - a.y)};
  if (p == q) return std::hypot(p.x - o.x, p.y - o.y);
  return distance_to_segment(o, {p, q});
}

ControlDecision constant(VelocityCommand c) { return {c, 0, 0, 0}; }

}  // namespace

TEST(Raycast, Examples) {
  World empty;
  EXPECT_EQ(raycast(empty, {0, 0}, 0.3), 4.0);
  World w;
  w.add_segment({2, -1}, {2, 1});
  EXPECT_DOUBLE_EQ(raycast(w, {0, 0}, 0.0), 2.0);
  EXPECT_EQ(raycast(w, {0, 0}, std::numbers::pi), 4.0);
  EXPECT_EQ(raycast(w, {0, 0}, 0.0, 1.5), 1.5);
  World collinear;
  collinear.add_segment({1, 0}, {3, 0});
  EXPECT_DOUBLE_EQ(raycast(collinear, {0, 0}, 0.0), 1.0);
  EXPECT_DOUBLE_EQ(raycast(collinear, {2, 0}, 0.0), 0.0);
  EXPECT_EQ(raycast(collinear, {4, 0}, 0.0), 4.0);
}

TEST(WorldTest, RejectsDegenerateSegments) {
  World w;
  EXPECT_THROW(w.add_segment({1, 1}, {1, 1}), InputError);
  EXPECT_THROW(w.add_segment({0, 0}, {INFINITY, 1}), InputError);
  EXPECT_THROW(w.add_polygon(std::vector<Point>{{0, 0}, {1, 0}}), InputError);
  EXPECT_EQ(w.clearance({0, 0}), INFINITY);
  w.add_polygon(std::vector<Point>{{0, 0}, {1, 0}, {1, 1}});
  EXPECT_EQ(w.segments().size(), 3u);
  EXPECT_DOUBLE_EQ(w.clearance({0.5, -2}), 2.0);
}

TEST(Sense, EmptyWorldReadsMaxRange) {
  const auto r = sense(World{}, {0, 0, 0}, SensorConfig::defaults());
  for (double d : r) EXPECT_EQ(d, 4.0);
}

TEST(Sense, DefaultMountsSpan160Degrees) {
  const auto cfg = SensorConfig::defaults();
  EXPECT_DOUBLE_EQ(rad2deg(cfg.mount_angles.front()), -80.0);
  EXPECT_DOUBLE_EQ(rad2deg(cfg.mount_angles.back()), 80.0);
  EXPECT_NO_THROW(cfg.validate());
  auto bad = cfg;
  std::swap(bad.mount_angles[0], bad.mount_angles[1]);
  EXPECT_THROW(bad.validate(), InputError);
}

TEST(Sense, PointObstacleInOneCone) {
  const auto cfg = SensorConfig::defaults();
  for (std::size_t k = 0; k < kSensorCount; ++k) {
    const double m = cfg.mount_angles[k];
    const Point c{1.2 * std::cos(m), 1.2 * std::sin(m)};
    const Point n{-std::sin(m) * 1e-6, std::cos(m) * 1e-6};
    World w;
    w.add_segment({c.x - n.x, c.y - n.y}, {c.x + n.x, c.y + n.y});
    const auto r = sense(w, {0, 0, 0}, cfg);
    for (std::size_t i = 0; i < kSensorCount; ++i) {
      if (i == k) {
        EXPECT_NEAR(r[i], 1.2, 1e-9);
      } else {
        EXPECT_EQ(r[i], 4.0);
      }
    }
  }
}

TEST(Sense, FrontalWallClosedForm) {
  const auto cfg = SensorConfig::defaults();
  World w;
  w.add_segment({0.5, -100}, {0.5, 100});
  const auto r = sense(w, {0, 0, 0}, cfg);
  for (std::size_t i = 0; i < kSensorCount; ++i) {
    const double m = cfg.mount_angles[i];
    double expect = cfg.max_range;
    for (int k = 0; k < cfg.rays_per_cone; ++k) {
      const double a = m - cfg.half_angle + 2 * cfg.half_angle * k / (cfg.rays_per_cone - 1);
      if (std::cos(a) > 0) expect = std::min(expect, 0.5 / std::cos(a));
    }
    EXPECT_NEAR(r[i], expect, 1e-12) << i;
    EXPECT_LE(r[i], 0.5 / std::cos(m) + 1e-12);
  }
}

TEST(Sense, SoundAgainstRaysAndExactCone) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> c(-5, 5), th(-std::numbers::pi, std::numbers::pi);
  const auto cfg = SensorConfig::defaults();
  for (int t = 0; t < 300; ++t) {
    World w;
    for (int s = 0; s < 6; ++s) w.add_segment({c(rng), c(rng)}, {c(rng), c(rng)});
    const Pose p{c(rng) * 0.3, c(rng) * 0.3, th(rng)};
    const auto r = sense(w, p, cfg);
    for (std::size_t i = 0; i < kSensorCount; ++i) {
      const double m = p.theta + cfg.mount_angles[i];
      double rays = cfg.max_range, exact = cfg.max_range;
      for (const auto& s : w.segments()) {
        for (int k = 0; k < cfg.rays_per_cone; ++k) {
          const double a = m - cfg.half_angle + 2 * cfg.half_angle * k / (cfg.rays_per_cone - 1);
          rays = std::min(rays, ray_hit(p.position(), a, s.a, s.b));
        }
        exact = std::min(exact, cone_min(p.position(), m, cfg.half_angle, s.a, s.b));
      }
      ASSERT_LE(r[i], cfg.max_range);
      ASSERT_NEAR(r[i], rays, 1e-9);
      ASSERT_GE(r[i], exact - 1e-9);
    }
  }
}

TEST(Kinematics, Examples) {
  EXPECT_EQ(step_kinematics({0, 0, 0}, {1, 0}, 1.0), (Pose{1, 0, 0}));
  const auto spin = step_kinematics({0, 0, 0}, {0, std::numbers::pi}, 1.0);
  EXPECT_EQ(spin.x, 0.0);
  EXPECT_EQ(spin.y, 0.0);
  EXPECT_NEAR(std::abs(spin.theta), std::numbers::pi, 1e-15);

  Pose p{0, 0, 0};
  for (int i = 0; i < 1000; ++i) p = step_kinematics(p, {1, 1}, 0.001);
  const double ex = std::sin(1.0), ey = 1 - std::cos(1.0);
  EXPECT_LT(std::hypot(p.x - ex, p.y - ey), 0.02 * std::hypot(ex, ey));
  EXPECT_NEAR(p.theta, 1.0, 1e-9);

  Pose q{0, 0, 0.7};
  for (int i = 0; i < 500; ++i) q = step_kinematics(q, {0.9, 0}, 0.1);
  EXPECT_EQ(q.theta, 0.7);
}

TEST(Kinematics, WheelSpeeds) {
  const RobotParams r;
  const auto w = to_wheel_speeds(r, {0.5, 1.0});
  EXPECT_NEAR(w.left, (0.5 - 0.1325) / 0.085, 1e-12);
  EXPECT_NEAR(w.right, (0.5 + 0.1325) / 0.085, 1e-12);
}

TEST(Episode, StartAtTargetSucceedsImmediately) {
  int calls = 0;
  const auto tr = run_episode(World{}, {1, 1, 0}, {1, 1, 0},
                              [&](const NavInputs&) {
                                ++calls;
                                return constant({1, 0});
                              },
                              {});
  EXPECT_EQ(tr.outcome, Outcome::Success);
  EXPECT_EQ(tr.rows.size(), 1u);
  EXPECT_EQ(tr.steps(), 0);
  EXPECT_EQ(calls, 0);
  EXPECT_EQ(tr.rows[0].command, (VelocityCommand{0, 0}));
}

TEST(Episode, TimeoutAndCollision) {
  EpisodeLimits lim;
  lim.max_steps = 10;
  const auto idle = run_episode(World{}, {0, 0, 0}, {5, 0, 0}, [](const NavInputs&) { return constant({0, 0}); }, lim);
  EXPECT_EQ(idle.outcome, Outcome::Timeout);
  EXPECT_EQ(idle.steps(), 10);
  EXPECT_DOUBLE_EQ(idle.rows.back().t, 1.0);

  World w;
  w.add_segment({1, -1}, {1, 1});
  const auto crash = run_episode(w, {0, 0, 0}, {5, 0, 0}, [](const NavInputs&) { return constant({1, 0}); }, {});
  EXPECT_EQ(crash.outcome, Outcome::Collision);
  EXPECT_LT(w.clearance(crash.rows.back().pose.position()), RobotParams{}.body_radius);
  for (std::size_t i = 0; i + 1 < crash.rows.size(); ++i) {
    EXPECT_GE(w.clearance(crash.rows[i].pose.position()), RobotParams{}.body_radius);
  }
  // collision is checked before success
  const auto both = run_episode(w, {0.9, 0, 0}, {0.9, 0, 0}, [](const NavInputs&) { return constant({0, 0}); }, {});
  EXPECT_EQ(both.outcome, Outcome::Collision);
}

TEST(Episode, OpenFieldWithNavigator) {
  const Navigator nav(default_behaviors(), CommandDomain::uniform({0, 1.3}, 0.01, {-4.3, 4.3}, 0.01));
  const auto tr = run_episode(World{}, {0, 0, 0}, {5, 0, 0}, nav.controller(), {});
  ASSERT_EQ(tr.outcome, Outcome::Success);
  double len = 0;
  for (std::size_t i = 1; i < tr.rows.size(); ++i) {
    const double step = distance(tr.rows[i - 1].pose.position(), tr.rows[i].pose.position());
    ASSERT_LE(step, 1.3 * 0.1 + 1e-12);
    len += step;
  }
  EXPECT_LE(len, 5.0 * 1.05);
  EXPECT_LE(tr.rows.back().inputs.rho, 0.05);
  const auto& d = nav.domain();
  for (std::size_t i = 0; i + 1 < tr.rows.size(); ++i) {
    const auto c = tr.rows[i].command;
    ASSERT_TRUE(std::find(d.u_grid.begin(), d.u_grid.end(), c.u) != d.u_grid.end());
    ASSERT_TRUE(std::find(d.omega_grid.begin(), d.omega_grid.end(), c.omega) != d.omega_grid.end());
  }
  const auto again = run_episode(World{}, {0, 0, 0}, {5, 0, 0}, nav.controller(), {});
  ASSERT_EQ(again.rows.size(), tr.rows.size());
  for (std::size_t i = 0; i < tr.rows.size(); ++i) ASSERT_EQ(again.rows[i].pose, tr.rows[i].pose);
}

TEST(Episode, RejectsBadLimits) {
  EpisodeLimits lim;
  lim.dt = 0;
  EXPECT_THROW(run_episode(World{}, {}, {1, 0, 0}, [](const NavInputs&) { return constant({0, 0}); }, lim), InputError);
}
