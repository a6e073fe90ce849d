#include "pursuit/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace pursuit {

GameOfKindVerdict in_region_M(Vec2 e, std::span<const Vec2> pursuers, double r) {
  if (pursuers.empty()) throw std::invalid_argument("no pursuers");
  const ConvexDistance nearest = dist_point_convex(e, convex_hull(pursuers));
  GameOfKindVerdict verdict;
  verdict.hull_distance = nearest.distance;
  verdict.capturable = nearest.distance < r;
  if (!verdict.capturable) {
    Vec2 dir = unit_or_zero(e - nearest.nearest);
    if (dir == Vec2{}) dir = {1.0, 0.0};
    verdict.escape_direction = dir;
  }
  return verdict;
}

std::vector<PairAssessment> assess_pairs(Vec2 e, std::span<const Vec2> pursuers, double r) {
  std::vector<PairAssessment> out;
  for (std::size_t i = 0; i < pursuers.size(); ++i) {
    for (std::size_t j = i + 1; j < pursuers.size(); ++j) {
      if (!in_capture_region_2p(e, pursuers[i], pursuers[j], r)) continue;
      PairAssessment a;
      try {
        a.solution = solve_2p1e(e, pursuers[i], pursuers[j], r, {pursuer_id(i), pursuer_id(j)});
      } catch (const std::domain_error&) {
        // On the rim of the region the capture time diverges.
        continue;
      }
      for (const Vec2& h : a.solution.h_points) {
        if (switching_condition_holds(h, a.solution.t_capture, pursuers, r)) a.passing_h.push_back(h);
      }
      out.push_back(std::move(a));
    }
  }
  return out;
}

bool switching_condition_holds(Vec2 h, double t_capture, std::span<const Vec2> pursuers, double r) {
  const double bound = t_capture + r - kSwitchSlack;
  return std::all_of(pursuers.begin(), pursuers.end(), [&](Vec2 p) { return distance(h, p) >= bound; });
}

Vec2 max_clearance_point(std::span<const Vec2> candidates, std::span<const Vec2> pursuers) {
  if (candidates.empty()) throw std::invalid_argument("no candidate points");
  Vec2 best = candidates.front();
  double best_clearance = -1.0;
  for (const Vec2& h : candidates) {
    double clearance = std::numeric_limits<double>::infinity();
    for (const Vec2& p : pursuers) clearance = std::min(clearance, distance(h, p));
    if (clearance > best_clearance) {
      best_clearance = clearance;
      best = h;
    }
  }
  return best;
}

std::optional<std::pair<AgentId, AgentId>> in_region_Dhat(Vec2 e, std::span<const Vec2> pursuers, double r) {
  if (pursuers.size() < 2) throw std::invalid_argument("need at least two pursuers");
  std::optional<std::pair<AgentId, AgentId>> best;
  double best_t = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < pursuers.size(); ++i) {
    for (std::size_t j = i + 1; j < pursuers.size(); ++j) {
      if (!in_capture_region_2p(e, pursuers[i], pursuers[j], r)) continue;
      double t = std::numeric_limits<double>::infinity();
      if (distance(e, pursuers[i]) <= r || distance(e, pursuers[j]) <= r) {
        t = 0.0;
      } else {
        try {
          t = solve_2p1e(e, pursuers[i], pursuers[j], r).t_capture;
        } catch (const std::domain_error&) {
        }
      }
      if (!best || t < best_t) {
        best = std::pair{pursuer_id(i), pursuer_id(j)};
        best_t = t;
      }
    }
  }
  return best;
}

std::optional<SwitchDecision> check_switch(Vec2 e, std::span<const Vec2> pursuers, double r, double now) {
  std::optional<SwitchDecision> best;
  for (const PairAssessment& a : assess_pairs(e, pursuers, r)) {
    if (a.passing_h.empty()) continue;
    if (best && !(a.solution.t_capture < best->t_capture)) continue;
    // The pair itself is always exactly T + r from either point.
    std::vector<Vec2> others;
    for (std::size_t k = 0; k < pursuers.size(); ++k) {
      const AgentId id = pursuer_id(k);
      if (id != a.solution.pair.first && id != a.solution.pair.second) others.push_back(pursuers[k]);
    }
    best = SwitchDecision{a.solution.pair, max_clearance_point(a.passing_h, others), a.solution.t_capture, now};
  }
  return best;
}

std::optional<AgentId> centroid_check(const SwitchDecision& decision, std::span<const Vec2> pursuers, double r,
                                      double tol) {
  const double radius = decision.t_capture + r;
  for (std::size_t k = 0; k < pursuers.size(); ++k) {
    const AgentId id = pursuer_id(k);
    if (id == decision.pair.first || id == decision.pair.second) continue;
    if (std::abs(distance(decision.h, pursuers[k]) - radius) <= tol) return id;
  }
  return std::nullopt;
}

bool covering_predicate(std::span<const Vec2> pursuers, double r) {
  if (pursuers.size() < 2) throw std::invalid_argument("need at least two pursuers");
  double widest = 0.0;
  for (std::size_t i = 0; i < pursuers.size(); ++i) {
    for (std::size_t j = i + 1; j < pursuers.size(); ++j) widest = std::max(widest, distance(pursuers[i], pursuers[j]));
  }
  return widest <= std::sqrt(3.0) * r;
}

double stretched_pair_capture_time(Vec2 e, Vec2 p1, Vec2 p2, double r, double alpha) {
  if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
  // Validates the (p1, p2) configuration with the same errors as the solver.
  (void)solve_2p1e(e, p1, p2, r);
  const CanonicalFrame frame = CanonicalFrame::from_pursuers(p1, p2);
  const Vec2 local = frame.to_local(e);
  const double x = local.x;
  const double y = local.y;
  const double d = frame.d;
  const double kappa = d * d - x * x + y * y - r * r;
  const double kappa_alpha = kappa + 2.0 * alpha * d * (d + x);
  const double shifted_x = x - alpha * d;
  const double r2_y2 = r * r - y * y;
  const double disc = std::max(0.0, kappa_alpha * kappa_alpha - 4.0 * shifted_x * shifted_x * r2_y2);
  return (kappa_alpha * r + std::abs(y) * std::sqrt(disc)) / (2.0 * r2_y2);
}

bool third_pursuer_region_contains(Vec2 p1, Vec2 p2, Vec2 e, double r, Vec2 q) {
  const TwoPursuerSolution sol = solve_2p1e(e, p1, p2, r);
  const Vec2 h = sol.h_points.front();
  if (!(distance(q, h) < sol.t_capture + r)) return false;

  const Vec2 u1 = e - p1;
  const Vec2 u2 = e - p2;
  const Vec2 w = q - e;
  const double det = cross(u1, u2);
  if (std::abs(det) <= kOrientEps * u1.norm() * u2.norm()) {
    // Evader on the pursuer segment: the wedge is the closed half-plane on
    // the capture-point side.
    const Vec2 n = unit_or_zero(perp(p2 - p1));
    const double side = dot(h - e, n) >= 0.0 ? 1.0 : -1.0;
    return side * dot(w, n) < 0.0;
  }
  // w = a u1 + b u2; the wedge is a >= 0 and b >= 0.
  const double a = cross(w, u2) / det;
  const double b = cross(u1, w) / det;
  return a < 0.0 || b < 0.0;
}

}  // namespace pursuit
