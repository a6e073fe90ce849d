#pragma once

// Random generators and brute-force oracles shared by the unit and
// acceptance suites. The oracles deliberately avoid the library's own
// algorithms: dense sampling, exhaustive candidate circles and a scan over
// the capture time instead of the capture point.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>
#include <random>
#include <vector>

#include "pursuit/geometry.hpp"

namespace testsupport {

using pursuit::Vec2;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
  Vec2 in_box(double h) { return {uniform(-h, h), uniform(-h, h)}; }
  Vec2 in_disk(double radius) {
    const double rho = radius * std::sqrt(uniform(0.0, 1.0));
    const double th = uniform(0.0, 2.0 * std::numbers::pi);
    return {rho * std::cos(th), rho * std::sin(th)};
  }
  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

struct Rigid {
  double angle;
  Vec2 shift;
  Vec2 operator()(Vec2 v) const {
    const double c = std::cos(angle), s = std::sin(angle);
    return Vec2{c * v.x - s * v.y, s * v.x + c * v.y} + shift;
  }
};

inline Rigid random_rigid(Rng& rng) { return {rng.uniform(-std::numbers::pi, std::numbers::pi), rng.in_box(100.0)}; }

/// A two-pursuer configuration with the evader strictly inside the capture
/// region and outside both capture disks.
struct Config2 {
  Vec2 e, p1, p2;
  double r;
  // Canonical coordinates used to build it.
  double d, x, y;
};

inline Config2 random_config2(Rng& rng, double band = 0.0) {
  for (;;) {
    const double d = rng.uniform(0.3, 5.0);
    const double r = rng.uniform(0.2, 2.0);
    const double x = rng.uniform(-d - r, d + r);
    const double y = rng.uniform(-r, r);
    const Vec2 local{x, y};
    const Vec2 a{-d, 0.0}, b{d, 0.0};
    if (std::abs(r - std::abs(y)) < band) continue;
    if (pursuit::dist_point_segment(local, {a, b}) >= r) continue;
    if (pursuit::distance(local, a) <= r * (1 + 1e-9) || pursuit::distance(local, b) <= r * (1 + 1e-9)) continue;
    const Rigid g = random_rigid(rng);
    return {g(local), g(a), g(b), r, d, x, y};
  }
}

// ---- capture time oracle ------------------------------------------------------

/// Capture time by scanning T and bisecting the last sign change of
/// F(T) = d^2 + h(T)^2 - (T + r)^2 with h(T) = y + s sqrt(T^2 - x^2), the
/// condition that the evader circle of radius T and the pursuer circle of
/// radius T + r meet on the bisector. Canonical coordinates.
struct OracleSolution {
  double t;
  double h;
};

inline std::optional<OracleSolution> oracle_capture(double d, double x, double y, double r, double sign) {
  auto h_of = [&](double t) { return y + sign * std::sqrt(std::max(0.0, t * t - x * x)); };
  // F = kappa + 2 (s y sqrt(T^2 - x^2) - T r), rationalized when both terms
  // are positive and nearly cancel.
  const double kappa = d * d - x * x + y * y - r * r;
  auto f = [&](double t) {
    const double w = t * t - x * x;
    const double q = sign * y * std::sqrt(std::max(0.0, w));
    const double diff = q > 0.0 ? (y * y * w - t * t * r * r) / (q + t * r) : q - t * r;
    return kappa + 2.0 * diff;
  };
  const double t0 = std::abs(x);
  const int n = 40000;
  const double t_hi = t0 + 1e7;
  double prev_t = t0, prev_f = f(t0);
  std::optional<std::pair<double, double>> bracket;
  for (int i = 1; i <= n; ++i) {
    const double t = t0 + (t_hi - t0) * std::pow(static_cast<double>(i) / n, 6.0);
    const double ft = f(t);
    if (prev_f > 0.0 && ft <= 0.0) bracket = {prev_t, t};
    prev_t = t;
    prev_f = ft;
  }
  if (!bracket) return std::nullopt;
  double lo = bracket->first, hi = bracket->second;
  for (int i = 0; i < 200 && hi - lo > 1e-15 * (1.0 + hi); ++i) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) > 0.0 ? lo : hi) = mid;
  }
  const double t = 0.5 * (lo + hi);
  return OracleSolution{t, h_of(t)};
}

// ---- geometry oracles -------------------------------------------------------

inline double sampled_segment_distance(Vec2 q, Vec2 a, Vec2 b, int n = 10000) {
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= n; ++i) {
    const double s = static_cast<double>(i) / n;
    best = std::min(best, pursuit::distance(q, a + (b - a) * s));
  }
  return best;
}

/// Distance to a closed polygon boundary by dense sampling; zero inside.
inline std::pair<double, Vec2> sampled_polygon_distance(Vec2 q, const std::vector<Vec2>& ccw, int per_edge = 20000) {
  bool inside = ccw.size() >= 3;
  for (std::size_t i = 0; i < ccw.size() && inside; ++i) {
    inside = pursuit::cross(ccw[(i + 1) % ccw.size()] - ccw[i], q - ccw[i]) >= 0.0;
  }
  if (inside) return {0.0, q};
  double best = std::numeric_limits<double>::infinity();
  Vec2 arg = ccw.front();
  for (std::size_t i = 0; i < ccw.size(); ++i) {
    const Vec2 a = ccw[i], b = ccw[(i + 1) % ccw.size()];
    for (int k = 0; k <= per_edge; ++k) {
      const Vec2 p = a + (b - a) * (static_cast<double>(k) / per_edge);
      const double dd = pursuit::distance(q, p);
      if (dd < best) {
        best = dd;
        arg = p;
      }
    }
  }
  return {best, arg};
}

/// Smallest circle over every pair-diameter and triple-circumcircle that
/// holds all points.
inline pursuit::Circle brute_force_mec(const std::vector<Vec2>& pts) {
  pursuit::Circle best{pts.front(), std::numeric_limits<double>::infinity()};
  auto holds = [&](const pursuit::Circle& c) {
    return std::all_of(pts.begin(), pts.end(),
                       [&](Vec2 p) { return pursuit::distance(p, c.center) <= c.radius * (1 + 1e-12) + 1e-12; });
  };
  auto consider = [&](const pursuit::Circle& c) {
    if (c.radius < best.radius && holds(c)) best = c;
  };
  if (pts.size() == 1) return {pts.front(), 0.0};
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      consider({(pts[i] + pts[j]) * 0.5, pursuit::distance(pts[i], pts[j]) * 0.5});
      for (std::size_t k = j + 1; k < pts.size(); ++k) {
        const Vec2 a = pts[i], b = pts[j], c = pts[k];
        const double den = 2.0 * pursuit::cross(b - a, c - a);
        if (std::abs(den) < 1e-14) continue;
        const double b2 = (b - a).squared_norm(), c2 = (c - a).squared_norm();
        const Vec2 u{((c - a).y * b2 - (b - a).y * c2) / den, ((b - a).x * c2 - (c - a).x * b2) / den};
        consider({a + u, u.norm()});
      }
    }
  }
  return best;
}

inline std::size_t nearest_site(Vec2 q, const std::vector<Vec2>& sites) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < sites.size(); ++i) {
    if (pursuit::distance(q, sites[i]) < pursuit::distance(q, sites[best])) best = i;
  }
  return best;
}

/// Uniform point in a convex polygon via fan triangulation weighted by area.
inline Vec2 sample_in_convex(Rng& rng, const std::vector<Vec2>& ccw) {
  if (ccw.size() < 3) return ccw.front();
  std::vector<double> areas;
  double total = 0.0;
  for (std::size_t i = 1; i + 1 < ccw.size(); ++i) {
    const double a = 0.5 * pursuit::cross(ccw[i] - ccw[0], ccw[i + 1] - ccw[0]);
    areas.push_back(a);
    total += a;
  }
  double pick = rng.uniform(0.0, total);
  std::size_t t = 0;
  while (t + 1 < areas.size() && pick > areas[t]) pick -= areas[t++];
  double u = rng.uniform(0.0, 1.0), v = rng.uniform(0.0, 1.0);
  if (u + v > 1.0) {
    u = 1.0 - u;
    v = 1.0 - v;
  }
  return ccw[0] + (ccw[t + 1] - ccw[0]) * u + (ccw[t + 2] - ccw[0]) * v;
}

/// Random pursuer set (p >= 3) whose hull strictly contains e.
inline std::vector<Vec2> random_surrounding(Rng& rng, Vec2 e, int p, double radius, double r) {
  for (;;) {
    std::vector<Vec2> ps;
    bool ok = true;
    for (int k = 0; k < p; ++k) {
      ps.push_back(e + rng.in_disk(radius));
      ok = ok && pursuit::distance(ps.back(), e) > r;
    }
    if (ok && pursuit::convex_hull(ps).strictly_contains(e, 1e-6)) return ps;
  }
}

}  // namespace testsupport
