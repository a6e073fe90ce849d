#include "pursuit/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace pursuit {

namespace {

constexpr const char* kPursuerColor = "#1f5fbf";
constexpr const char* kEvaderColor = "#d62728";

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

struct Viewport {
  double min_x, max_y, scale;
  int margin;
  double px(double x) const { return margin + (x - min_x) * scale; }
  double py(double y) const { return margin + (max_y - y) * scale; }
};

}  // namespace

std::string render_svg(const SimulationTrace& trace, const PlotSpec& spec) {
  if (spec.width <= 0 || spec.height <= 0 || spec.margin < 0) throw std::invalid_argument("plot dimensions must be positive");
  if (trace.samples.empty()) throw std::invalid_argument("empty trace");
  const double r = trace.samples.front().capture_radius;

  double lo_x = std::numeric_limits<double>::infinity(), lo_y = lo_x;
  double hi_x = -lo_x, hi_y = -lo_x;
  auto grow = [&](Vec2 p, double pad) {
    lo_x = std::min(lo_x, p.x - pad);
    lo_y = std::min(lo_y, p.y - pad);
    hi_x = std::max(hi_x, p.x + pad);
    hi_y = std::max(hi_y, p.y + pad);
  };
  for (const GameState& s : trace.samples) {
    grow(s.evader, 0.0);
    for (Vec2 q : s.pursuers) grow(q, 0.0);
  }
  if (trace.outcome.point) grow(*trace.outcome.point, r);

  const double span_x = std::max(hi_x - lo_x, 1e-9);
  const double span_y = std::max(hi_y - lo_y, 1e-9);
  const double scale = std::min((spec.width - 2.0 * spec.margin) / span_x, (spec.height - 2.0 * spec.margin) / span_y);
  const Viewport vp{lo_x, hi_y, scale, spec.margin};

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(spec.width) + "\" height=\"" +
         std::to_string(spec.height) + "\" viewBox=\"0 0 " + std::to_string(spec.width) + " " +
         std::to_string(spec.height) + "\">\n";
  out += "<style>.pursuer{stroke:" + std::string(kPursuerColor) + ";fill:none;stroke-width:1.5}";
  out += ".evader{stroke:" + std::string(kEvaderColor) + ";fill:none;stroke-width:1.5}";
  out += ".capture{stroke:#000000;fill:none;stroke-dasharray:4 3}</style>\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";

  auto path = [&](const char* cls, auto&& pick) {
    std::string d;
    for (std::size_t i = 0; i < trace.samples.size(); ++i) {
      const Vec2 p = pick(trace.samples[i]);
      d += (i == 0 ? "M" : " L") + num(vp.px(p.x)) + "," + num(vp.py(p.y));
    }
    out += "<path class=\"" + std::string(cls) + "\" d=\"" + d + "\"/>\n";
  };
  auto square = [&](Vec2 p, const char* color) {
    out += "<rect x=\"" + num(vp.px(p.x) - 4) + "\" y=\"" + num(vp.py(p.y) - 4) + "\" width=\"8\" height=\"8\" fill=\"" +
           color + "\"/>\n";
  };
  auto dot = [&](Vec2 p, const char* color) {
    out += "<circle cx=\"" + num(vp.px(p.x)) + "\" cy=\"" + num(vp.py(p.y)) + "\" r=\"3.5\" fill=\"" + color + "\"/>\n";
  };

  const GameState& first = trace.samples.front();
  const GameState& last = trace.samples.back();
  for (std::size_t k = 0; k < first.pursuers.size(); ++k) {
    path("pursuer", [k](const GameState& s) { return s.pursuers[k]; });
  }
  path("evader", [](const GameState& s) { return s.evader; });

  if (spec.start_squares) {
    for (Vec2 q : first.pursuers) square(q, kPursuerColor);
    square(first.evader, kEvaderColor);
  }
  if (spec.end_dots) {
    for (Vec2 q : last.pursuers) dot(q, kPursuerColor);
    dot(last.evader, kEvaderColor);
  }
  if (spec.capture_circle && trace.outcome.point) {
    const Vec2 c = *trace.outcome.point;
    out += "<circle class=\"capture\" cx=\"" + num(vp.px(c.x)) + "\" cy=\"" + num(vp.py(c.y)) + "\" r=\"" +
           num(r * scale) + "\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace pursuit
