#include "pursuit/geometry.hpp"

#include <algorithm>
#include <limits>

namespace pursuit {

namespace {

// Orientation of c relative to the directed line a->b, normalized by the
// lengths involved so the epsilon is scale-free.
double normalized_orient(Vec2 a, Vec2 b, Vec2 c) {
  const Vec2 u = b - a;
  const Vec2 v = c - a;
  const double scale = u.norm() * v.norm();
  if (scale == 0.0) return 0.0;
  return cross(u, v) / scale;
}

double signed_edge_distance(Vec2 a, Vec2 b, Vec2 q) {
  const Vec2 e = b - a;
  const double len = e.norm();
  if (len == 0.0) return -distance(a, q);
  return cross(e, q - a) / len;
}

}  // namespace

double ConvexPolygon::area() const {
  const std::size_t n = vertices_.size();
  if (n < 3) return 0.0;
  double twice = 0.0;
  for (std::size_t i = 0; i < n; ++i) twice += cross(vertices_[i], vertices_[(i + 1) % n]);
  return 0.5 * twice;
}

bool ConvexPolygon::contains(Vec2 q, double slack) const {
  switch (vertices_.size()) {
    case 0:
      return false;
    case 1:
      return distance(q, vertices_[0]) <= slack;
    case 2:
      return dist_point_segment(q, {vertices_[0], vertices_[1]}) <= slack;
    default:
      break;
  }
  const std::size_t n = vertices_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (signed_edge_distance(vertices_[i], vertices_[(i + 1) % n], q) < -slack) return false;
  }
  return true;
}

bool ConvexPolygon::strictly_contains(Vec2 q, double margin) const {
  const std::size_t n = vertices_.size();
  if (n < 3) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (signed_edge_distance(vertices_[i], vertices_[(i + 1) % n], q) <= margin) return false;
  }
  return true;
}

ConvexPolygon convex_hull(std::span<const Vec2> points) {
  if (points.empty()) throw std::invalid_argument("empty point set");
  for (const Vec2& p : points) {
    if (!p.finite()) throw std::invalid_argument("non-finite point");
  }

  std::vector<Vec2> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end(), [](Vec2 a, Vec2 b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() == 1) return ConvexPolygon({pts[0]});

  // Andrew's monotone chain; collinear points are popped.
  std::vector<Vec2> hull(2 * pts.size());
  std::size_t k = 0;
  for (const Vec2& p : pts) {
    while (k >= 2 && normalized_orient(hull[k - 2], hull[k - 1], p) <= kOrientEps) --k;
    hull[k++] = p;
  }
  const std::size_t lower = k + 1;
  for (std::size_t i = pts.size() - 1; i-- > 0;) {
    const Vec2& p = pts[i];
    while (k >= lower && normalized_orient(hull[k - 2], hull[k - 1], p) <= kOrientEps) --k;
    hull[k++] = p;
  }
  hull.resize(k - 1);
  if (hull.size() == 2 && hull[0] == hull[1]) hull.pop_back();
  return ConvexPolygon(std::move(hull));
}

Vec2 closest_point_on_segment(Vec2 q, const Segment& s) {
  const Vec2 ab = s.b - s.a;
  const double len2 = ab.squared_norm();
  if (len2 == 0.0) return s.a;
  const double t = std::clamp(dot(q - s.a, ab) / len2, 0.0, 1.0);
  return s.a + ab * t;
}

double dist_point_segment(Vec2 q, const Segment& s) { return distance(q, closest_point_on_segment(q, s)); }

ConvexDistance dist_point_convex(Vec2 q, const ConvexPolygon& poly) {
  const auto& v = poly.vertices();
  if (v.empty()) throw std::invalid_argument("empty polygon");
  if (v.size() >= 3 && poly.contains(q, 0.0)) return {0.0, q};
  if (v.size() == 1) return {distance(q, v[0]), v[0]};

  ConvexDistance best{std::numeric_limits<double>::infinity(), v[0]};
  const std::size_t edges = v.size() == 2 ? 1 : v.size();
  for (std::size_t i = 0; i < edges; ++i) {
    const Vec2 c = closest_point_on_segment(q, {v[i], v[(i + 1) % v.size()]});
    const double d = distance(q, c);
    if (d < best.distance) best = {d, c};
  }
  return best;
}

namespace {

Circle circle_from(Vec2 a, Vec2 b) { return {(a + b) * 0.5, 0.5 * distance(a, b)}; }

Circle circle_from(Vec2 a, Vec2 b, Vec2 c) {
  const Vec2 ab = b - a;
  const Vec2 ac = c - a;
  const double den = 2.0 * cross(ab, ac);
  if (std::abs(normalized_orient(a, b, c)) <= kOrientEps || den == 0.0) {
    // Collinear: the farthest pair spans the circle.
    Circle best = circle_from(a, b);
    for (const Circle& cand : {circle_from(a, c), circle_from(b, c)}) {
      if (cand.radius > best.radius) best = cand;
    }
    return best;
  }
  const double ab2 = ab.squared_norm();
  const double ac2 = ac.squared_norm();
  const Vec2 offset{(ac.y * ab2 - ab.y * ac2) / den, (ab.x * ac2 - ac.x * ab2) / den};
  return {a + offset, offset.norm()};
}

bool outside(const Circle& c, Vec2 p) { return distance(c.center, p) > c.radius * (1.0 + 1e-14) + 1e-14; }

}  // namespace

Circle min_enclosing_circle(std::span<const Vec2> points) {
  if (points.empty()) throw std::invalid_argument("empty point set");
  // Welzl's incremental form without shuffling; deterministic and cheap for
  // the handful of agents involved.
  Circle c{points[0], 0.0};
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (!outside(c, points[i])) continue;
    c = {points[i], 0.0};
    for (std::size_t j = 0; j < i; ++j) {
      if (!outside(c, points[j])) continue;
      c = circle_from(points[i], points[j]);
      for (std::size_t k = 0; k < j; ++k) {
        if (outside(c, points[k])) c = circle_from(points[i], points[j], points[k]);
      }
    }
  }
  return c;
}

namespace {

constexpr int kBoxLabel = -1;

struct LabeledPolygon {
  std::vector<Vec2> v;
  std::vector<int> edge_label;  // label of edge v[i] -> v[i+1]
};

// Keeps the part of `poly` where dot(q - mid, normal) <= 0; the new edge is
// tagged with `label`.
void clip(LabeledPolygon& poly, Vec2 mid, Vec2 normal, int label, double eps) {
  const std::size_t n = poly.v.size();
  if (n == 0) return;
  const double nlen = normal.norm();
  LabeledPolygon out;
  out.v.reserve(n + 2);
  out.edge_label.reserve(n + 2);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 a = poly.v[i];
    const Vec2 b = poly.v[(i + 1) % n];
    const double fa = dot(a - mid, normal) / nlen;
    const double fb = dot(b - mid, normal) / nlen;
    const bool in_a = fa <= eps;
    const bool in_b = fb <= eps;
    if (in_a) {
      out.v.push_back(a);
      out.edge_label.push_back(poly.edge_label[i]);
    }
    if (in_a != in_b) {
      const Vec2 cut = a + (b - a) * (fa / (fa - fb));
      out.v.push_back(cut);
      out.edge_label.push_back(in_a ? label : poly.edge_label[i]);
    }
  }
  poly = std::move(out);
}

void tidy(LabeledPolygon& poly, double eps) {
  bool changed = true;
  while (changed && poly.v.size() > 1) {
    changed = false;
    const std::size_t n = poly.v.size();
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t next = (i + 1) % n;
      if (distance(poly.v[i], poly.v[next]) <= eps) {
        // Zero-length edge i: the merged vertex keeps the outgoing label of next.
        poly.v.erase(poly.v.begin() + static_cast<std::ptrdiff_t>(i));
        poly.edge_label.erase(poly.edge_label.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
    if (changed || poly.v.size() < 3) continue;
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t prev = (i + n - 1) % n;
      const std::size_t next = (i + 1) % n;
      if (std::abs(normalized_orient(poly.v[prev], poly.v[i], poly.v[next])) <= kOrientEps &&
          dot(poly.v[i] - poly.v[prev], poly.v[next] - poly.v[i]) > 0.0) {
        poly.v.erase(poly.v.begin() + static_cast<std::ptrdiff_t>(i));
        poly.edge_label.erase(poly.edge_label.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
}

void validate_sites(std::span<const Site> sites, double halfwidth) {
  if (!(halfwidth > 0.0)) throw std::invalid_argument("arena halfwidth must be positive");
  for (std::size_t i = 0; i < sites.size(); ++i) {
    const Vec2 p = sites[i].pos;
    if (!p.finite()) throw std::invalid_argument("non-finite site");
    if (std::abs(p.x) >= halfwidth || std::abs(p.y) >= halfwidth) {
      throw std::invalid_argument("site outside arena");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (sites[j].pos == p) throw std::invalid_argument("coincident sites");
    }
  }
}

VoronoiCell build_cell(std::span<const Site> sites, std::size_t index, double hw) {
  const double eps = 1e-12 * hw;
  LabeledPolygon poly{{{-hw, -hw}, {hw, -hw}, {hw, hw}, {-hw, hw}},
                      {kBoxLabel, kBoxLabel, kBoxLabel, kBoxLabel}};
  const Vec2 s = sites[index].pos;
  for (std::size_t k = 0; k < sites.size() && !poly.v.empty(); ++k) {
    if (k == index) continue;
    const Vec2 o = sites[k].pos;
    clip(poly, (s + o) * 0.5, o - s, static_cast<int>(k), eps);
  }
  tidy(poly, eps);

  VoronoiCell cell{sites[index].id, ConvexPolygon(poly.v), {}};
  const std::size_t n = poly.v.size();
  if (n < 2) return cell;
  for (std::size_t i = 0; i < n; ++i) {
    const int label = poly.edge_label[i];
    if (label == kBoxLabel) continue;
    const Segment e{poly.v[i], poly.v[(i + 1) % n]};
    if (distance(e.a, e.b) <= eps) continue;
    cell.neighbor_edges.push_back({sites[static_cast<std::size_t>(label)].id, e});
  }
  return cell;
}

}  // namespace

VoronoiCell voronoi_cell(std::span<const Site> sites, std::size_t index, double arena_halfwidth) {
  if (index >= sites.size()) throw std::out_of_range("site index");
  validate_sites(sites, arena_halfwidth);
  return build_cell(sites, index, arena_halfwidth);
}

std::vector<VoronoiCell> voronoi_partition(std::span<const Site> sites, double arena_halfwidth) {
  if (sites.size() < 2) throw std::invalid_argument("voronoi partition needs at least two sites");
  validate_sites(sites, arena_halfwidth);
  std::vector<VoronoiCell> cells;
  cells.reserve(sites.size());
  for (std::size_t i = 0; i < sites.size(); ++i) cells.push_back(build_cell(sites, i, arena_halfwidth));
  return cells;
}

}  // namespace pursuit
