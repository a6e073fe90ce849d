#pragma once

// Planar primitives shared by the solver, the analysis predicates and the
// strategies. Everything here is a pure function of its arguments.

#include <cmath>
#include <compare>
#include <span>
#include <stdexcept>
#include <vector>

namespace pursuit {

struct Vec2 {
  double x{0.0};
  double y{0.0};

  constexpr Vec2() = default;
  constexpr Vec2(double x_, double y_) : x(x_), y(y_) {}

  constexpr Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  constexpr Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  constexpr Vec2 operator-() const { return {-x, -y}; }
  constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
  constexpr Vec2 operator/(double s) const { return {x / s, y / s}; }
  friend constexpr Vec2 operator*(double s, Vec2 v) { return v * s; }
  Vec2& operator+=(Vec2 o) { x += o.x; y += o.y; return *this; }
  Vec2& operator-=(Vec2 o) { x -= o.x; y -= o.y; return *this; }

  constexpr bool operator==(const Vec2&) const = default;

  double norm() const { return std::hypot(x, y); }
  constexpr double squared_norm() const { return x * x + y * y; }
  bool finite() const { return std::isfinite(x) && std::isfinite(y); }
};

constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double distance(Vec2 a, Vec2 b) { return (a - b).norm(); }
constexpr Vec2 perp(Vec2 v) { return {-v.y, v.x}; }

/// Unit vector along v, or the zero vector when v vanishes.
inline Vec2 unit_or_zero(Vec2 v) {
  const double n = v.norm();
  return n > 0.0 ? v / n : Vec2{};
}

/// Unit vector from `from` toward `to`; zero when the points coincide.
inline Vec2 heading(Vec2 from, Vec2 to) { return unit_or_zero(to - from); }

/// Identity of an agent. The evader is 0, pursuers are numbered 1..p in
/// scenario order.
struct AgentId {
  int value{0};
  constexpr auto operator<=>(const AgentId&) const = default;
};

inline constexpr AgentId kEvaderId{0};
constexpr AgentId pursuer_id(std::size_t index) { return AgentId{static_cast<int>(index) + 1}; }
constexpr std::size_t pursuer_index(AgentId id) { return static_cast<std::size_t>(id.value - 1); }

/// Relative tolerance applied to normalized cross products.
inline constexpr double kOrientEps = 1e-12;

struct Segment {
  Vec2 a;
  Vec2 b;
};

/// Counter-clockwise, strictly convex vertex chain. One vertex is a point,
/// two vertices a segment.
class ConvexPolygon {
 public:
  ConvexPolygon() = default;
  explicit ConvexPolygon(std::vector<Vec2> ccw_vertices) : vertices_(std::move(ccw_vertices)) {}

  const std::vector<Vec2>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }

  double area() const;
  /// Closed containment with a small absolute slack.
  bool contains(Vec2 q, double slack = 1e-12) const;
  /// True when q lies in the interior (not on the boundary) of a 2-D polygon.
  bool strictly_contains(Vec2 q, double margin = 1e-12) const;

 private:
  std::vector<Vec2> vertices_;
};

ConvexPolygon convex_hull(std::span<const Vec2> points);

double dist_point_segment(Vec2 q, const Segment& s);
Vec2 closest_point_on_segment(Vec2 q, const Segment& s);

struct ConvexDistance {
  double distance;
  Vec2 nearest;
};
ConvexDistance dist_point_convex(Vec2 q, const ConvexPolygon& poly);

struct Circle {
  Vec2 center;
  double radius;
};
Circle min_enclosing_circle(std::span<const Vec2> points);

struct Site {
  AgentId id;
  Vec2 pos;
};

struct NeighborEdge {
  AgentId neighbor;
  Segment edge;
};

struct VoronoiCell {
  AgentId owner;
  ConvexPolygon polygon;
  std::vector<NeighborEdge> neighbor_edges;
};

inline constexpr double kDefaultArenaHalfwidth = 1000.0;

/// Cell of sites[index]: the arena square clipped by the bisector half-plane
/// of every other site.
VoronoiCell voronoi_cell(std::span<const Site> sites, std::size_t index,
                         double arena_halfwidth = kDefaultArenaHalfwidth);

std::vector<VoronoiCell> voronoi_partition(std::span<const Site> sites,
                                           double arena_halfwidth = kDefaultArenaHalfwidth);

}  // namespace pursuit
