#pragma once

// Minimum-time solution of the game between two pursuers and one evader with
// equal unit speed and capture radius r.
//
// Every computation runs in a canonical frame whose origin is the midpoint of
// the pursuers and whose x-axis points from the first pursuer to the second,
// so the pursuers sit at (-d, 0) and (d, 0) and the evader at (x, y).

#include <utility>
#include <vector>

#include "pursuit/geometry.hpp"

namespace pursuit {

struct CanonicalFrame {
  Vec2 origin;
  Vec2 axis;  // unit vector from the first pursuer to the second
  double d;   // half the pursuer separation

  static CanonicalFrame from_pursuers(Vec2 p_i, Vec2 p_j);

  Vec2 to_local(Vec2 world) const {
    const Vec2 v = world - origin;
    return {dot(v, axis), cross(axis, v)};
  }
  Vec2 to_world(Vec2 local) const { return origin + axis * local.x + perp(axis) * local.y; }
};

struct TwoPursuerSolution {
  double t_capture{0.0};
  /// One capture point, or two mirrored ones when the evader is on the
  /// pursuer line.
  std::vector<Vec2> h_points;
  double kappa{0.0};
  std::pair<AgentId, AgentId> pair{AgentId{1}, AgentId{2}};
};

/// Below this |y| the evader is treated as lying on the pursuer line.
inline constexpr double kOnLineEps = 1e-12;
/// Distance from |y| = r under which the closed form is abandoned.
inline constexpr double kDegenerateBand = 1e-9;

/// Membership in the open two-pursuer capture region: the evader is strictly
/// closer than r to the segment joining the pursuers.
bool in_capture_region_2p(Vec2 e, Vec2 p1, Vec2 p2, double r);

/// Closed-form capture time and capture point(s). Throws std::domain_error
/// when the evader is outside the capture region or already captured.
TwoPursuerSolution solve_2p1e(Vec2 e, Vec2 p1, Vec2 p2, double r,
                              std::pair<AgentId, AgentId> ids = {AgentId{1}, AgentId{2}});

/// Same game solved by bracketing and bisection on the equidistance
/// conditions. Used as a fallback near the degenerate band and as an oracle.
TwoPursuerSolution solve_2p1e_numeric(Vec2 e, Vec2 p1, Vec2 p2, double r,
                                      std::pair<AgentId, AgentId> ids = {AgentId{1}, AgentId{2}});

struct TrioVelocities {
  Vec2 evader;
  Vec2 pursuer_i;
  Vec2 pursuer_j;
};

/// Unit-speed headings toward the chosen capture point; zero for an agent
/// already standing on it.
TrioVelocities optimal_velocities_2p(Vec2 e, Vec2 p_i, Vec2 p_j, double r, Vec2 chosen_h);

}  // namespace pursuit
