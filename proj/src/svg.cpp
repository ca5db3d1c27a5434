#include <algorithm>
#include <cmath>
#include <sstream>

#include "bbfm/harness.hpp"

namespace bbfm {

namespace {

constexpr double kMapSize = 560.0;
constexpr double kMargin = 20.0;
constexpr double kPanelHeight = 140.0;

struct MapFrame {
  Box box;
  double scale;

  double sx(double x) const { return kMargin + (x - box.xmin) * scale; }
  double sy(double y) const { return kMargin + (box.ymax - y) * scale; }
};

void polyline(std::ostringstream& o, const std::vector<std::pair<double, double>>& pts, const char* color,
              double width) {
  if (pts.empty()) return;
  o << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"" << width << "\" points=\"";
  for (const auto& [x, y] : pts) o << x << ',' << y << ' ';
  o << "\"/>\n";
}

// Time series panel; values scaled into [lo, hi].
void series_panel(std::ostringstream& o, double top, const char* label, const std::vector<double>& t,
                  const std::vector<double>& v, double lo, double hi, const char* color) {
  const double width = kMapSize;
  const double tmax = t.empty() || t.back() <= 0.0 ? 1.0 : t.back();
  o << "<rect x=\"" << kMargin << "\" y=\"" << top << "\" width=\"" << width << "\" height=\"" << kPanelHeight
    << "\" fill=\"none\" stroke=\"#999\"/>\n";
  o << "<text x=\"" << kMargin + 4 << "\" y=\"" << top + 14 << "\" font-size=\"12\">" << label << " [" << lo << ", "
    << hi << "] vs t [0, " << tmax << " s]</text>\n";
  const double zero = top + kPanelHeight * (hi / (hi - lo));
  if (lo < 0.0 && hi > 0.0) {
    o << "<line x1=\"" << kMargin << "\" y1=\"" << zero << "\" x2=\"" << kMargin + width << "\" y2=\"" << zero
      << "\" stroke=\"#ccc\"/>\n";
  }
  std::vector<std::pair<double, double>> pts;
  for (std::size_t i = 0; i < t.size(); ++i) {
    pts.emplace_back(kMargin + width * t[i] / tmax, top + kPanelHeight * (hi - v[i]) / (hi - lo));
  }
  polyline(o, pts, color, 1.0);
}

}  // namespace

std::string render_svg(const ScenarioConfig& sc, const TrajectoryTrace& trace) {
  Box box = sc.world.bounds();
  for (const auto& r : trace.rows) {
    box.xmin = std::min(box.xmin, r.pose.x - 0.5);
    box.xmax = std::max(box.xmax, r.pose.x + 0.5);
    box.ymin = std::min(box.ymin, r.pose.y - 0.5);
    box.ymax = std::max(box.ymax, r.pose.y + 0.5);
  }
  const double span = std::max(box.xmax - box.xmin, box.ymax - box.ymin);
  const MapFrame f{box, kMapSize / span};
  const double map_h = (box.ymax - box.ymin) * f.scale;
  const double total_h = kMargin * 4 + map_h + 2 * kPanelHeight + kMargin;

  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kMapSize + 2 * kMargin << "\" height=\"" << total_h
    << "\" font-family=\"sans-serif\">\n";
  o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  o << "<text x=\"" << kMargin << "\" y=\"14\" font-size=\"13\">" << sc.name << " / " << strategy_key(sc.strategy)
    << " / " << outcome_name(trace.outcome) << "</text>\n";

  for (const auto& s : sc.world.segments()) {
    o << "<line x1=\"" << f.sx(s.a.x) << "\" y1=\"" << f.sy(s.a.y) << "\" x2=\"" << f.sx(s.b.x) << "\" y2=\""
      << f.sy(s.b.y) << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
  }
  std::vector<std::pair<double, double>> path;
  for (const auto& r : trace.rows) path.emplace_back(f.sx(r.pose.x), f.sy(r.pose.y));
  polyline(o, path, "#1f77b4", 1.5);

  const double r_px = std::max(2.0, sc.config.robot.body_radius * f.scale);
  o << "<circle cx=\"" << f.sx(sc.start.x) << "\" cy=\"" << f.sy(sc.start.y) << "\" r=\"" << r_px
    << "\" fill=\"none\" stroke=\"green\" stroke-width=\"2\"/>\n";
  o << "<circle cx=\"" << f.sx(sc.target.x) << "\" cy=\"" << f.sy(sc.target.y) << "\" r=\""
    << std::max(3.0, sc.config.limits.stop_radius * f.scale) << "\" fill=\"red\"/>\n";

  std::vector<double> t, u, w;
  for (const auto& r : trace.rows) {
    t.push_back(r.t);
    u.push_back(r.command.u);
    w.push_back(r.command.omega);
  }
  const double top = kMargin * 2 + map_h;
  const auto& rb = sc.config.robot;
  series_panel(o, top, "u (m/s)", t, u, rb.u_limits.lo, rb.u_limits.hi, "#2ca02c");
  series_panel(o, top + kPanelHeight + kMargin, "omega (rad/s)", t, w, rb.omega_limits.lo, rb.omega_limits.hi,
               "#d62728");
  o << "</svg>\n";
  return o.str();
}

}  // namespace bbfm
