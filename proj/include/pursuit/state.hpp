#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pursuit/analysis.hpp"
#include "pursuit/geometry.hpp"

namespace pursuit {

/// Instantaneous state of the game: evader, ordered pursuers and clock.
struct GameState {
  double t{0.0};
  Vec2 evader;
  std::vector<Vec2> pursuers;
  double capture_radius{1.0};

  bool operator==(const GameState&) const = default;
};

enum class EventKind { Switch, Capture, EscapeCertified, Warning };

const char* to_string(EventKind kind);

struct Event {
  double t{0.0};
  EventKind kind{EventKind::Warning};
  std::string message;
  std::optional<SwitchDecision> decision;
  std::vector<AgentId> agents;
  std::optional<Vec2> point;
};

/// Knobs the strategies need from the simulation configuration.
struct StrategyContext {
  double dt{0.01};
  double arena_halfwidth{kDefaultArenaHalfwidth};
};

}  // namespace pursuit
