#include "pursuit/strategies.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace pursuit {

const char* to_string(EventKind kind) {
  switch (kind) {
    case EventKind::Switch:
      return "SWITCH";
    case EventKind::Capture:
      return "CAPTURE";
    case EventKind::EscapeCertified:
      return "ESCAPE_CERTIFIED";
    case EventKind::Warning:
      return "WARNING";
  }
  return "UNKNOWN";
}

namespace {

Event warning_event(double t, std::string message) {
  Event e;
  e.t = t;
  e.kind = EventKind::Warning;
  e.message = std::move(message);
  return e;
}

}  // namespace

Vec2 clamp_speed(Vec2 v) {
  const double n = v.norm();
  return n > 1.0 ? v / n : v;
}

namespace {

std::vector<Site> sites_evader_first(const GameState& state) {
  std::vector<Site> sites;
  sites.reserve(state.pursuers.size() + 1);
  sites.push_back({kEvaderId, state.evader});
  for (std::size_t k = 0; k < state.pursuers.size(); ++k) sites.push_back({pursuer_id(k), state.pursuers[k]});
  return sites;
}

std::optional<Vec2> shared_edge_midpoint(const VoronoiCell& cell, AgentId pursuer) {
  for (const NeighborEdge& ne : cell.neighbor_edges) {
    if (ne.neighbor == pursuer) return (ne.edge.a + ne.edge.b) * 0.5;
  }
  return std::nullopt;
}

Vec2 vs_from_cell(const GameState& state, const VoronoiCell& cell, std::size_t k) {
  if (auto mid = shared_edge_midpoint(cell, pursuer_id(k))) return heading(state.pursuers[k], *mid);
  return pps_velocity(state, k);
}

/// Current capture point of a pair under closed-loop play, choosing between
/// mirrored candidates by proximity to the previous point.
std::optional<Vec2> track_pair(const GameState& state, std::pair<AgentId, AgentId> pair, std::optional<Vec2> prev_h) {
  const Vec2 pi = state.pursuers[pursuer_index(pair.first)];
  const Vec2 pj = state.pursuers[pursuer_index(pair.second)];
  if (!in_capture_region_2p(state.evader, pi, pj, state.capture_radius)) return std::nullopt;
  try {
    const TwoPursuerSolution sol = solve_2p1e(state.evader, pi, pj, state.capture_radius, pair);
    if (sol.h_points.size() == 1 || !prev_h) return sol.h_points.front();
    const Vec2 ref = *prev_h;
    return *std::min_element(sol.h_points.begin(), sol.h_points.end(),
                             [&](Vec2 a, Vec2 b) { return distance(a, ref) < distance(b, ref); });
  } catch (const std::domain_error&) {
    return std::nullopt;
  }
}

}  // namespace

// ---- per-agent laws ---------------------------------------------------------

Vec2 pps_velocity(const GameState& state, std::size_t k) { return heading(state.pursuers.at(k), state.evader); }

Vec2 fpps_velocity(const GameState& state, std::size_t k, Vec2 target, double eps, double dt) {
  if (!(eps > 0.0 && eps <= 1.0)) throw std::invalid_argument("fpps speed must be in (0, 1]");
  const Vec2 p = state.pursuers.at(k);
  if (distance(p, target) <= dt) return {};
  return heading(p, target) * eps;
}

VoronoiCell evader_cell(const GameState& state, double arena_halfwidth) {
  const std::vector<Site> sites = sites_evader_first(state);
  return voronoi_cell(sites, 0, arena_halfwidth);
}

Vec2 vs_velocity(const GameState& state, std::size_t k, double arena_halfwidth) {
  try {
    return vs_from_cell(state, evader_cell(state, arena_halfwidth), k);
  } catch (const std::invalid_argument&) {
    return pps_velocity(state, k);
  }
}

Vec2 evader_fixed_direction(const GameState&, Vec2 dir) { return dir; }

Vec2 evader_voronoi_farthest_vertex(const GameState& state, double arena_halfwidth) {
  const VoronoiCell cell = evader_cell(state, arena_halfwidth);
  const auto& verts = cell.polygon.vertices();
  if (verts.size() < 3) return {};
  const Vec2 e = state.evader;
  double far = 0.0;
  for (const Vec2& v : verts) far = std::max(far, distance(v, e));
  const double tie = 1e-9 * std::max(1.0, far);
  std::optional<Vec2> best;
  double best_angle = 0.0;
  for (const Vec2& v : verts) {
    if (distance(v, e) < far - tie) continue;
    double angle = std::atan2(v.y - e.y, v.x - e.x);
    if (angle < 0.0) angle += 2.0 * std::numbers::pi;
    if (!best || angle < best_angle) {
      best = v;
      best_angle = angle;
    }
  }
  return heading(e, *best);
}

Vec2 evader_optimal_after_switch(const GameState& state, const SwitchDecision& decision) {
  const std::optional<Vec2> h = track_pair(state, decision.pair, decision.h);
  return heading(state.evader, h.value_or(decision.h));
}

// ---- pursuit strategies -----------------------------------------------------

std::vector<Vec2> PurePursuit::commands(const GameState& state, std::vector<Event>&) {
  std::vector<Vec2> out(state.pursuers.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = pps_velocity(state, k);
  return out;
}

FixedPointPursuit::FixedPointPursuit(Target mode, Vec2 target, double eps) : mode_(mode), target_(target), eps_(eps) {
  if (!(eps > 0.0 && eps <= 1.0)) throw std::invalid_argument("fpps speed must be in (0, 1]");
}

std::string FixedPointPursuit::name() const {
  switch (mode_) {
    case Target::MinEnclosingCircle:
      return "cs";
    case Target::Mean:
      return "fpps";
    case Target::Given:
      break;
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "fpps:%.17g,%.17g", target_.x, target_.y);
  return buf;
}

void FixedPointPursuit::reset(const GameState& initial, const StrategyContext& ctx) {
  dt_ = ctx.dt;
  if (mode_ == Target::MinEnclosingCircle) {
    target_ = min_enclosing_circle(initial.pursuers).center;
  } else if (mode_ == Target::Mean) {
    Vec2 sum;
    for (const Vec2& p : initial.pursuers) sum += p;
    target_ = sum / static_cast<double>(initial.pursuers.size());
  }
}

std::vector<Vec2> FixedPointPursuit::commands(const GameState& state, std::vector<Event>&) {
  std::vector<Vec2> out(state.pursuers.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = fpps_velocity(state, k, target_, eps_, dt_);
  return out;
}

std::vector<Vec2> VoronoiPursuit::commands(const GameState& state, std::vector<Event>& events) {
  std::vector<Vec2> out(state.pursuers.size());
  std::optional<VoronoiCell> cell;
  try {
    cell = evader_cell(state, arena_);
  } catch (const std::invalid_argument& err) {
    events.push_back(warning_event(state.t, std::string("voronoi fallback to pure pursuit: ") + err.what()));
  }
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = cell ? vs_from_cell(state, *cell, k) : pps_velocity(state, k);
  return out;
}

SwitchingStrategy::SwitchingStrategy(std::unique_ptr<PursuitStrategy> base) : base_(std::move(base)) {
  if (!base_) throw std::invalid_argument("switching strategy needs a base strategy");
}

SwitchingStrategy::SwitchingStrategy(const SwitchingStrategy& other)
    : base_(other.base_->clone()), mode_(other.mode_), decision_(other.decision_), current_h_(other.current_h_) {}

void SwitchingStrategy::reset(const GameState& initial, const StrategyContext& ctx) {
  base_->reset(initial, ctx);
  mode_ = SwitchMode::Base;
  decision_.reset();
  current_h_.reset();
}

std::vector<Vec2> SwitchingStrategy::commands(const GameState& state, std::vector<Event>& events) {
  const double r = state.capture_radius;
  if (mode_ == SwitchMode::Base) {
    if (auto d = check_switch(state.evader, state.pursuers, r, state.t)) {
      mode_ = SwitchMode::Switched;
      decision_ = d;
      current_h_ = d->h;
      events.push_back({state.t, EventKind::Switch, "switching condition holds", d, {d->pair.first, d->pair.second}, d->h});
    }
  }

  std::vector<Vec2> out = base_->commands(state, events);
  if (mode_ == SwitchMode::Base) return out;

  std::optional<Vec2> h = track_pair(state, decision_->pair, current_h_);
  if (!h) {
    if (auto d = check_switch(state.evader, state.pursuers, r, state.t)) {
      events.push_back({state.t, EventKind::Warning, "evader left the switched pair's capture region; pair reassigned",
                        d, {d->pair.first, d->pair.second}, d->h});
      decision_ = d;
      h = d->h;
    } else {
      events.push_back({state.t, EventKind::Warning,
                        "evader left the switched pair's capture region; pair follows base strategy this step",
                        std::nullopt, {decision_->pair.first, decision_->pair.second}, std::nullopt});
      return out;
    }
  }
  current_h_ = h;
  const std::size_t i = pursuer_index(decision_->pair.first);
  const std::size_t j = pursuer_index(decision_->pair.second);
  out[i] = heading(state.pursuers[i], *h);
  out[j] = heading(state.pursuers[j], *h);
  return out;
}

// ---- evaders ----------------------------------------------------------------

FixedDirectionEvader::FixedDirectionEvader(Vec2 dir) : dir_(dir) {
  if (!dir.finite() || std::abs(dir.norm() - 1.0) > 1e-9) throw std::invalid_argument("evader direction must be a unit vector");
}

std::string FixedDirectionEvader::name() const {
  char buf[96];
  std::snprintf(buf, sizeof buf, "fixed:%.17g,%.17g", dir_.x, dir_.y);
  return buf;
}

Vec2 FarthestVertexEvader::command(const GameState& state, std::vector<Event>& events) {
  try {
    const Vec2 v = evader_voronoi_farthest_vertex(state, arena_);
    if (v == Vec2{}) events.push_back(warning_event(state.t, "degenerate evader cell"));
    return v;
  } catch (const std::invalid_argument& err) {
    events.push_back(warning_event(state.t, std::string("degenerate evader cell: ") + err.what()));
    return {};
  }
}

Vec2 EscapeEvader::command(const GameState& state, std::vector<Event>&) {
  if (!latched_) {
    const GameOfKindVerdict verdict = in_region_M(state.evader, state.pursuers, state.capture_radius);
    if (verdict.capturable) throw std::domain_error("no escape certificate");
    latched_ = verdict.escape_direction;
  }
  return *latched_;
}

OptimalAfterSwitchEvader::OptimalAfterSwitchEvader(std::unique_ptr<EvaderStrategy> before) : before_(std::move(before)) {
  if (!before_) throw std::invalid_argument("optimal-after-switch needs a base evader");
}

OptimalAfterSwitchEvader::OptimalAfterSwitchEvader(const OptimalAfterSwitchEvader& other)
    : before_(other.before_->clone()), decision_(other.decision_), current_h_(other.current_h_) {}

std::string OptimalAfterSwitchEvader::name() const {
  const std::string base = before_->name();
  return base == "voronoi-far-vertex" ? "optimal-after-switch" : "optimal-after-switch:" + base;
}

void OptimalAfterSwitchEvader::reset(const GameState& initial, const StrategyContext& ctx) {
  before_->reset(initial, ctx);
  decision_.reset();
  current_h_.reset();
}

void OptimalAfterSwitchEvader::on_pursuer_switch(const SwitchDecision& decision) {
  decision_ = decision;
  current_h_ = decision.h;
}

Vec2 OptimalAfterSwitchEvader::command(const GameState& state, std::vector<Event>& events) {
  if (!decision_) return before_->command(state, events);
  const std::optional<Vec2> h = track_pair(state, decision_->pair, current_h_);
  if (!h) return before_->command(state, events);
  current_h_ = h;
  return heading(state.evader, *h);
}

// ---- factories --------------------------------------------------------------

namespace {

Vec2 parse_pair(std::string_view text, std::string_view what) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) throw std::invalid_argument(std::string("expected <x>,<y> in ") + std::string(what));
  auto num = [&](std::string_view s) {
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
      throw std::invalid_argument("bad number '" + std::string(s) + "' in " + std::string(what));
    }
    return v;
  };
  return {num(text.substr(0, comma)), num(text.substr(comma + 1))};
}

}  // namespace

std::unique_ptr<PursuitStrategy> make_pursuit_strategy(std::string_view name) {
  if (name.starts_with("s-")) {
    if (name.substr(2).starts_with("s-")) throw std::invalid_argument("nested switching strategy '" + std::string(name) + "'");
    return std::make_unique<SwitchingStrategy>(make_pursuit_strategy(name.substr(2)));
  }
  if (name == "pps") return std::make_unique<PurePursuit>();
  if (name == "cs") return std::make_unique<FixedPointPursuit>(FixedPointPursuit::centroid());
  if (name == "vs") return std::make_unique<VoronoiPursuit>();
  if (name == "fpps") return std::make_unique<FixedPointPursuit>(FixedPointPursuit::Target::Mean);
  if (name.starts_with("fpps:")) {
    return std::make_unique<FixedPointPursuit>(FixedPointPursuit::Target::Given, parse_pair(name.substr(5), name));
  }
  throw std::invalid_argument("unknown pursuit strategy '" + std::string(name) + "'");
}

std::unique_ptr<EvaderStrategy> make_evader_strategy(std::string_view name) {
  if (name.starts_with("fixed:")) return std::make_unique<FixedDirectionEvader>(parse_pair(name.substr(6), name));
  if (name == "voronoi-far-vertex") return std::make_unique<FarthestVertexEvader>();
  if (name == "escape") return std::make_unique<EscapeEvader>();
  if (name == "optimal-after-switch") return std::make_unique<OptimalAfterSwitchEvader>();
  if (name.starts_with("optimal-after-switch:")) {
    return std::make_unique<OptimalAfterSwitchEvader>(make_evader_strategy(name.substr(21)));
  }
  throw std::invalid_argument("unknown evader strategy '" + std::string(name) + "'");
}

std::vector<std::string> pursuit_strategy_names() {
  return {"pps", "s-pps", "cs", "s-cs", "vs", "s-vs", "fpps", "s-fpps"};
}

}  // namespace pursuit
