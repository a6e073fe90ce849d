#include "pursuit/two_pursuer.hpp"

#include <cmath>
#include <stdexcept>

namespace pursuit {

CanonicalFrame CanonicalFrame::from_pursuers(Vec2 p_i, Vec2 p_j) {
  const Vec2 delta = p_j - p_i;
  const double sep = delta.norm();
  if (!(sep > 0.0)) throw std::invalid_argument("pursuers coincide");
  return {(p_i + p_j) * 0.5, delta / sep, 0.5 * sep};
}

bool in_capture_region_2p(Vec2 e, Vec2 p1, Vec2 p2, double r) {
  return dist_point_segment(e, {p1, p2}) < r;
}

namespace {

void check_preconditions(Vec2 e, Vec2 p1, Vec2 p2, double r) {
  if (!(r > 0.0)) throw std::invalid_argument("capture radius must be positive");
  if (!e.finite() || !p1.finite() || !p2.finite()) throw std::invalid_argument("non-finite position");
  if (p1 == p2) throw std::invalid_argument("pursuers coincide");
  if (distance(e, p1) <= r || distance(e, p2) <= r) throw std::domain_error("already captured");
  if (!in_capture_region_2p(e, p1, p2, r)) throw std::domain_error("evader not strictly inside D_ij");
}

double kappa_of(double d, double x, double y, double r) { return d * d - x * x + y * y - r * r; }

TwoPursuerSolution assemble(const CanonicalFrame& frame, double t, double kappa,
                            std::vector<double> local_h, std::pair<AgentId, AgentId> ids) {
  TwoPursuerSolution sol;
  sol.t_capture = t;
  sol.kappa = kappa;
  sol.pair = ids;
  for (double h : local_h) sol.h_points.push_back(frame.to_world({0.0, h}));
  return sol;
}

}  // namespace

TwoPursuerSolution solve_2p1e(Vec2 e, Vec2 p1, Vec2 p2, double r, std::pair<AgentId, AgentId> ids) {
  check_preconditions(e, p1, p2, r);
  const CanonicalFrame frame = CanonicalFrame::from_pursuers(p1, p2);
  const Vec2 local = frame.to_local(e);
  const double x = local.x;
  double y = local.y;
  if (std::abs(y) < kOnLineEps) y = 0.0;
  if (std::abs(r - std::abs(y)) < kDegenerateBand) return solve_2p1e_numeric(e, p1, p2, r, ids);

  const double d = frame.d;
  const double kappa = kappa_of(d, x, y, r);
  const double r2_y2 = r * r - y * y;
  const double disc = std::max(0.0, kappa * kappa - 4.0 * x * x * r2_y2);
  const double t = (kappa * r + std::abs(y) * std::sqrt(disc)) / (2.0 * r2_y2);
  const double rise = std::sqrt(std::max(0.0, t * t - x * x));

  if (y == 0.0) return assemble(frame, t, kappa, {rise, -rise}, ids);
  return assemble(frame, t, kappa, {y + std::copysign(rise, y)}, ids);
}

TwoPursuerSolution solve_2p1e_numeric(Vec2 e, Vec2 p1, Vec2 p2, double r, std::pair<AgentId, AgentId> ids) {
  check_preconditions(e, p1, p2, r);
  const CanonicalFrame frame = CanonicalFrame::from_pursuers(p1, p2);
  const Vec2 local = frame.to_local(e);
  const double x = local.x;
  double y = local.y;
  if (std::abs(y) < kOnLineEps) y = 0.0;
  const double d = frame.d;

  // Margin by which the evader reaches (0, h) ahead of both pursuers. Its
  // positive set on the bisector is an interval; the capture point is the
  // far end of that interval. The difference of the two distances is
  // rationalized; far out along the bisector they agree to many digits.
  const double c = d * d - x * x - y * y;
  auto margin = [&](double h) { return (c + 2.0 * y * h) / (std::hypot(d, h) + std::hypot(x, y - h)) - r; };

  // Stationary point of the margin along the bisector.
  const double h_peak = y * d / (d - std::abs(x));
  if (!(margin(h_peak) > 0.0)) throw std::domain_error("evader not strictly inside D_ij");

  auto far_root = [&](double dir) {
    double lo = h_peak;
    double step = std::max(1.0, std::abs(h_peak));
    double hi = h_peak + dir * step;
    while (margin(hi) > 0.0) {
      lo = hi;
      step *= 2.0;
      if (step > 1e15) throw std::domain_error("no capture point");
      hi = h_peak + dir * step;
    }
    for (int iter = 0; iter < 400; ++iter) {
      if (std::abs(hi - lo) <= 1e-12) break;
      const double mid = 0.5 * (lo + hi);
      if (mid == lo || mid == hi) break;
      (margin(mid) > 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
  };

  const double kappa = kappa_of(d, x, y, r);
  if (y == 0.0) {
    const double h = far_root(1.0);
    return assemble(frame, std::hypot(x, h), kappa, {h, -h}, ids);
  }
  const double h = far_root(y > 0.0 ? 1.0 : -1.0);
  return assemble(frame, std::hypot(x, y - h), kappa, {h}, ids);
}

TrioVelocities optimal_velocities_2p(Vec2 e, Vec2 p_i, Vec2 p_j, [[maybe_unused]] double r, Vec2 chosen_h) {
  return {heading(e, chosen_h), heading(p_i, chosen_h), heading(p_j, chosen_h)};
}

}  // namespace pursuit
