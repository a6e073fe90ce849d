#pragma once

// Multi-pursuer analysis: which configurations are capturable at all, when a
// pair of pursuers can take over as a two-pursuer game, and the geometric
// predicates behind those results.

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "pursuit/geometry.hpp"
#include "pursuit/two_pursuer.hpp"

namespace pursuit {

struct GameOfKindVerdict {
  bool capturable{false};
  /// Present iff not capturable: unit direction away from the pursuer hull.
  std::optional<Vec2> escape_direction;
  double hull_distance{0.0};
};

/// Capturable iff the evader is strictly closer than r to the convex hull of
/// the pursuers (the hull of the capture disks is the hull dilated by r).
GameOfKindVerdict in_region_M(Vec2 e, std::span<const Vec2> pursuers, double r);

/// Pair with minimal capture time among the pairs whose capture region holds
/// the evader; ties go to the lexicographically smallest pair.
std::optional<std::pair<AgentId, AgentId>> in_region_Dhat(Vec2 e, std::span<const Vec2> pursuers, double r);

struct SwitchDecision {
  std::pair<AgentId, AgentId> pair;
  Vec2 h;
  double t_capture{0.0};
  double decided_at{0.0};
};

/// Additive slack used when testing the switching inequality.
inline constexpr double kSwitchSlack = 1e-9;

/// Every pair whose capture region holds the evader, with its solution and
/// the candidate capture points that clear all other pursuers.
struct PairAssessment {
  TwoPursuerSolution solution;
  std::vector<Vec2> passing_h;
};
std::vector<PairAssessment> assess_pairs(Vec2 e, std::span<const Vec2> pursuers, double r);

/// True when no pursuer is strictly closer to h than t_capture + r.
bool switching_condition_holds(Vec2 h, double t_capture, std::span<const Vec2> pursuers, double r);

/// Picks, among candidate capture points, the one farthest from its nearest
/// pursuer; the first candidate when there are no pursuers to compare.
Vec2 max_clearance_point(std::span<const Vec2> candidates, std::span<const Vec2> pursuers);

std::optional<SwitchDecision> check_switch(Vec2 e, std::span<const Vec2> pursuers, double r,
                                           double now = 0.0);

/// A third pursuer sitting (within tol) on the circle of radius T + r around
/// the decision's capture point.
std::optional<AgentId> centroid_check(const SwitchDecision& decision, std::span<const Vec2> pursuers,
                                      double r, double tol);

/// Largest pairwise pursuer distance is at most sqrt(3) r.
bool covering_predicate(std::span<const Vec2> pursuers, double r);

/// Capture time for the pair (p1, p3) with p3 = p2 + alpha (p2 - p1),
/// obtained by shifting the canonical frame of (p1, p2).
double stretched_pair_capture_time(Vec2 e, Vec2 p1, Vec2 p2, double r, double alpha);

/// Region of third-pursuer positions that cannot lie inside the switching
/// circle of (p1, p2) without placing the evader in the capture region of a
/// pair involving that pursuer: the open disk of radius T + r around the
/// capture point, minus the closed wedge at e spanned by e - p1 and e - p2.
bool third_pursuer_region_contains(Vec2 p1, Vec2 p2, Vec2 e, double r, Vec2 q);

}  // namespace pursuit
