#include "pursuit/sim.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pursuit {

void SimConfig::validate() const {
  if (!(dt > 0.0) || dt > 0.1) throw std::invalid_argument("dt must be in (0, 0.1]");
  if (!(t_max >= dt)) throw std::invalid_argument("t_max must be at least dt");
  if (!(arena_halfwidth > 0.0)) throw std::invalid_argument("arena_halfwidth must be positive");
  if (sample_stride == 0) throw std::invalid_argument("sample_stride must be positive");
  if (escape_window == 0) throw std::invalid_argument("escape_window must be positive");
}

void Scenario::validate() const {
  if (!(capture_radius > 0.0) || !std::isfinite(capture_radius)) throw std::invalid_argument("capture_radius must be positive");
  if (pursuers.empty()) throw std::invalid_argument("scenario needs at least one pursuer");
  if (!evader.finite()) throw std::invalid_argument("evader position must be finite");
  for (std::size_t k = 0; k < pursuers.size(); ++k) {
    if (!pursuers[k].finite()) throw std::invalid_argument("pursuer position must be finite");
    if (distance(pursuers[k], evader) <= capture_radius) {
      throw std::invalid_argument("already captured: pursuer " + std::to_string(k + 1) + " starts within the capture radius");
    }
  }
}

const char* to_string(OutcomeKind kind) {
  switch (kind) {
    case OutcomeKind::Captured:
      return "CAPTURED";
    case OutcomeKind::Timeout:
      return "TIMEOUT";
    case OutcomeKind::Escaped:
      return "ESCAPED";
  }
  return "UNKNOWN";
}

bool SimulationTrace::switched() const { return first_event(EventKind::Switch).has_value(); }

std::optional<Event> SimulationTrace::first_event(EventKind kind) const {
  for (const Event& e : events) {
    if (e.kind == kind) return e;
  }
  return std::nullopt;
}

GameState step(const GameState& state, const std::vector<Vec2>& pursuer_commands, Vec2 evader_command, double dt) {
  if (pursuer_commands.size() != state.pursuers.size()) throw std::invalid_argument("one command per pursuer expected");
  GameState next = state;
  next.t = state.t + dt;
  next.evader += evader_command * dt;
  for (std::size_t k = 0; k < next.pursuers.size(); ++k) next.pursuers[k] += pursuer_commands[k] * dt;
  return next;
}

std::optional<CaptureInfo> detect_capture(const GameState& prev, const GameState& next, double r, bool interpolate) {
  const std::size_t p = next.pursuers.size();
  bool hit = false;
  double t_hit = next.t;
  for (std::size_t k = 0; k < p; ++k) {
    const double d_next = distance(next.pursuers[k], next.evader);
    if (d_next > r) continue;
    hit = true;
    if (!interpolate) continue;
    const double d_prev = distance(prev.pursuers[k], prev.evader);
    const double frac = d_prev <= r ? 0.0 : (d_prev - r) / (d_prev - d_next);
    t_hit = std::min(t_hit, prev.t + frac * (next.t - prev.t));
  }
  if (!hit) return std::nullopt;

  const double span = next.t - prev.t;
  const double alpha = span > 0.0 ? (t_hit - prev.t) / span : 1.0;
  auto lerp = [alpha](Vec2 a, Vec2 b) { return a + (b - a) * alpha; };
  CaptureInfo info;
  info.t = t_hit;
  info.point = lerp(prev.evader, next.evader);
  for (std::size_t k = 0; k < p; ++k) {
    if (distance(lerp(prev.pursuers[k], next.pursuers[k]), info.point) <= r + 1e-6) info.by.push_back(pursuer_id(k));
  }
  return info;
}

Game::Game(const Scenario& scenario, const SimConfig& config)
    : Game(scenario.initial_state(), make_pursuit_strategy(scenario.pursuer_strategy),
           make_evader_strategy(scenario.evader_strategy), config) {
  scenario.validate();
}

Game::Game(GameState initial, std::unique_ptr<PursuitStrategy> pursuit, std::unique_ptr<EvaderStrategy> evader,
           const SimConfig& config)
    : config_(config), state_(std::move(initial)), pursuit_(std::move(pursuit)), evader_(std::move(evader)) {
  config_.validate();
  if (!pursuit_ || !evader_) throw std::invalid_argument("game needs both strategies");
  Scenario check{state_.capture_radius, state_.evader, state_.pursuers, "", ""};
  check.validate();
  start();
}

Game::Game(const Game& other)
    : config_(other.config_),
      state_(other.state_),
      pursuit_(other.pursuit_->clone()),
      evader_(other.evader_->clone()),
      trace_(other.trace_),
      step_index_(other.step_index_),
      escape_run_(other.escape_run_),
      last_hull_distance_(other.last_hull_distance_),
      certified_(other.certified_),
      finished_(other.finished_) {}

void Game::start() {
  const StrategyContext ctx{config_.dt, config_.arena_halfwidth};
  pursuit_->reset(state_, ctx);
  evader_->reset(state_, ctx);
  record(state_, true);
}

void Game::record(const GameState& s, bool force) {
  if (!trace_.samples.empty() && trace_.samples.back().t == s.t) return;
  if (force || step_index_ % config_.sample_stride == 0) trace_.samples.push_back(s);
}

void Game::finish(Outcome outcome) {
  trace_.outcome = std::move(outcome);
  finished_ = true;
  record(state_, true);
}

bool Game::advance() {
  if (finished_) return false;
  const auto max_steps = static_cast<std::size_t>(std::ceil(config_.t_max / config_.dt - 1e-9));
  if (step_index_ >= max_steps) {
    finish({OutcomeKind::Timeout, state_.t, {}, std::nullopt});
    return false;
  }

  const std::size_t seen = trace_.events.size();
  std::vector<Vec2> pc = pursuit_->commands(state_, trace_.events);
  for (std::size_t i = seen; i < trace_.events.size(); ++i) {
    if (trace_.events[i].decision) evader_->on_pursuer_switch(*trace_.events[i].decision);
  }
  Vec2 ec = evader_->command(state_, trace_.events);
  for (Vec2& c : pc) c = clamp_speed(c);
  ec = clamp_speed(ec);

  GameState next = step(state_, pc, ec, config_.dt);
  next.t = static_cast<double>(step_index_ + 1) * config_.dt;
  const std::optional<CaptureInfo> capture =
      detect_capture(state_, next, state_.capture_radius, config_.capture_interpolation);
  state_ = std::move(next);
  ++step_index_;

  if (capture) {
    trace_.events.push_back({capture->t, EventKind::Capture, "capture", std::nullopt, capture->by, capture->point});
    finish({OutcomeKind::Captured, capture->t, capture->by, capture->point});
    return false;
  }
  record(state_, false);

  const GameOfKindVerdict verdict = in_region_M(state_.evader, state_.pursuers, state_.capture_radius);
  if (verdict.capturable) {
    certified_ = false;
    escape_run_ = 0;
  } else if (!certified_) {
    certified_ = true;
    escape_run_ = 0;
    trace_.events.push_back({state_.t, EventKind::EscapeCertified, "evader outside the multi-pursuer capture region",
                             std::nullopt, {}, verdict.escape_direction});
  } else {
    escape_run_ = verdict.hull_distance >= last_hull_distance_ - 1e-12 ? escape_run_ + 1 : 0;
    if (escape_run_ >= config_.escape_window) {
      finish({OutcomeKind::Escaped, state_.t, {}, std::nullopt});
      return false;
    }
  }
  last_hull_distance_ = verdict.hull_distance;

  if (step_index_ >= max_steps) {
    finish({OutcomeKind::Timeout, state_.t, {}, std::nullopt});
    return false;
  }
  return true;
}

void Game::run() {
  while (advance()) {
  }
}

SimulationTrace run_game(const Scenario& scenario, const SimConfig& config) {
  Game game(scenario, config);
  game.run();
  return game.take_trace();
}

}  // namespace pursuit
