#pragma once

// Fixed-step game loop. Commands for every agent are computed from the same
// snapshot, positions advance by explicit Euler, and capture is refined by
// linear interpolation between samples.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pursuit/state.hpp"
#include "pursuit/strategies.hpp"

namespace pursuit {

struct SimConfig {
  double dt{0.01};
  double t_max{1e4};
  bool capture_interpolation{true};
  std::uint64_t rng_seed{0};
  double arena_halfwidth{kDefaultArenaHalfwidth};
  /// Keep every n-th state in the trace (the final state is always kept).
  std::size_t sample_stride{1};
  /// Consecutive non-shrinking hull-distance steps required to call an escape.
  std::size_t escape_window{100};

  void validate() const;
};

struct Scenario {
  double capture_radius{1.0};
  Vec2 evader;
  std::vector<Vec2> pursuers;
  std::string pursuer_strategy{"s-vs"};
  std::string evader_strategy{"voronoi-far-vertex"};

  GameState initial_state() const { return {0.0, evader, pursuers, capture_radius}; }
  /// Throws std::invalid_argument on a malformed scenario or one that starts
  /// captured.
  void validate() const;

  bool operator==(const Scenario&) const = default;
};

struct CaptureInfo {
  double t{0.0};
  std::vector<AgentId> by;
  Vec2 point;
};

enum class OutcomeKind { Captured, Timeout, Escaped };
const char* to_string(OutcomeKind kind);

struct Outcome {
  OutcomeKind kind{OutcomeKind::Timeout};
  double t{0.0};
  std::vector<AgentId> by;  // capturing pursuers
  std::optional<Vec2> point;
};

struct SimulationTrace {
  std::vector<GameState> samples;
  std::vector<Event> events;
  Outcome outcome;

  bool switched() const;
  std::optional<Event> first_event(EventKind kind) const;
};

GameState step(const GameState& state, const std::vector<Vec2>& pursuer_commands, Vec2 evader_command, double dt);

std::optional<CaptureInfo> detect_capture(const GameState& prev, const GameState& next, double r,
                                          bool interpolate = true);

/// A game in progress. Copying a Game clones the strategy objects, so a copy
/// taken mid-game continues exactly like the original.
class Game {
 public:
  Game(const Scenario& scenario, const SimConfig& config);
  Game(GameState initial, std::unique_ptr<PursuitStrategy> pursuit, std::unique_ptr<EvaderStrategy> evader,
       const SimConfig& config);
  Game(const Game& other);
  Game& operator=(const Game&) = delete;
  Game(Game&&) = default;

  /// Advances one step; returns false once the game has ended.
  bool advance();
  void run();

  bool finished() const { return finished_; }
  const GameState& state() const { return state_; }
  const SimulationTrace& trace() const { return trace_; }
  SimulationTrace take_trace() { return std::move(trace_); }
  const PursuitStrategy& pursuit() const { return *pursuit_; }
  const EvaderStrategy& evader() const { return *evader_; }
  std::size_t step_index() const { return step_index_; }

 private:
  void start();
  void record(const GameState& s, bool force);
  void finish(Outcome outcome);

  SimConfig config_;
  GameState state_;
  std::unique_ptr<PursuitStrategy> pursuit_;
  std::unique_ptr<EvaderStrategy> evader_;
  SimulationTrace trace_;
  std::size_t step_index_{0};
  std::size_t escape_run_{0};
  double last_hull_distance_{0.0};
  bool certified_{false};
  bool finished_{false};
};

SimulationTrace run_game(const Scenario& scenario, const SimConfig& config);

}  // namespace pursuit
