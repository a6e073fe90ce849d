#pragma once

// Pursuer and evader strategies. A strategy maps the current GameState to
// velocity commands of norm at most one; stateful strategies (fixed targets,
// switching, latched escape direction) keep their memory in the object.

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pursuit/analysis.hpp"
#include "pursuit/state.hpp"

namespace pursuit {

// ---- per-agent control laws -------------------------------------------------

/// Pure pursuit: unit heading from pursuer k (0-based) to the evader.
Vec2 pps_velocity(const GameState& state, std::size_t k);

/// Unit heading toward a fixed point at speed eps; stops once within dt.
Vec2 fpps_velocity(const GameState& state, std::size_t k, Vec2 target, double eps, double dt);

/// Voronoi pursuit: evader neighbors head for the midpoint of the shared
/// edge, everyone else pursues directly.
Vec2 vs_velocity(const GameState& state, std::size_t k, double arena_halfwidth = kDefaultArenaHalfwidth);

/// The evader's clipped Voronoi cell, sites ordered evader first.
VoronoiCell evader_cell(const GameState& state, double arena_halfwidth);

Vec2 evader_fixed_direction(const GameState& state, Vec2 dir);

/// Heads for the vertex of the evader's own cell farthest from it; ties go to
/// the smallest polar angle in [0, 2pi).
Vec2 evader_voronoi_farthest_vertex(const GameState& state, double arena_halfwidth = kDefaultArenaHalfwidth);

/// Heads for the current capture point of the decision's pair.
Vec2 evader_optimal_after_switch(const GameState& state, const SwitchDecision& decision);

// ---- stateful strategies ----------------------------------------------------

class PursuitStrategy {
 public:
  virtual ~PursuitStrategy() = default;
  virtual std::string name() const = 0;
  virtual void reset(const GameState& initial, const StrategyContext& ctx) = 0;
  /// One command per pursuer, all computed from the same snapshot.
  virtual std::vector<Vec2> commands(const GameState& state, std::vector<Event>& events) = 0;
  virtual std::unique_ptr<PursuitStrategy> clone() const = 0;
};

class EvaderStrategy {
 public:
  virtual ~EvaderStrategy() = default;
  virtual std::string name() const = 0;
  virtual void reset(const GameState& initial, const StrategyContext& ctx) = 0;
  virtual Vec2 command(const GameState& state, std::vector<Event>& events) = 0;
  virtual std::unique_ptr<EvaderStrategy> clone() const = 0;
  /// Told when the pursuers hand a pair over to two-pursuer play.
  virtual void on_pursuer_switch(const SwitchDecision&) {}
};

class PurePursuit final : public PursuitStrategy {
 public:
  std::string name() const override { return "pps"; }
  void reset(const GameState&, const StrategyContext&) override {}
  std::vector<Vec2> commands(const GameState& state, std::vector<Event>& events) override;
  std::unique_ptr<PursuitStrategy> clone() const override { return std::make_unique<PurePursuit>(*this); }
};

/// All pursuers converge on one fixed point. The point is either given or
/// chosen from the initial pursuer positions on reset.
class FixedPointPursuit final : public PursuitStrategy {
 public:
  enum class Target { Given, MinEnclosingCircle, Mean };

  explicit FixedPointPursuit(Target mode, Vec2 target = {}, double eps = 1.0);
  static FixedPointPursuit centroid() { return FixedPointPursuit(Target::MinEnclosingCircle); }

  std::string name() const override;
  void reset(const GameState& initial, const StrategyContext& ctx) override;
  std::vector<Vec2> commands(const GameState& state, std::vector<Event>& events) override;
  std::unique_ptr<PursuitStrategy> clone() const override { return std::make_unique<FixedPointPursuit>(*this); }

  Vec2 target() const { return target_; }

 private:
  Target mode_;
  Vec2 target_;
  double eps_;
  double dt_{0.01};
};

class VoronoiPursuit final : public PursuitStrategy {
 public:
  std::string name() const override { return "vs"; }
  void reset(const GameState&, const StrategyContext& ctx) override { arena_ = ctx.arena_halfwidth; }
  std::vector<Vec2> commands(const GameState& state, std::vector<Event>& events) override;
  std::unique_ptr<PursuitStrategy> clone() const override { return std::make_unique<VoronoiPursuit>(*this); }

 private:
  double arena_{kDefaultArenaHalfwidth};
};

enum class SwitchMode { Base, Switched };

/// Plays the base strategy until some pair satisfies the switching condition,
/// then hands that pair over to the two-pursuer optimal play for good. The
/// remaining pursuers keep following the base strategy.
class SwitchingStrategy final : public PursuitStrategy {
 public:
  explicit SwitchingStrategy(std::unique_ptr<PursuitStrategy> base);
  SwitchingStrategy(const SwitchingStrategy& other);
  SwitchingStrategy& operator=(const SwitchingStrategy&) = delete;

  std::string name() const override { return "s-" + base_->name(); }
  void reset(const GameState& initial, const StrategyContext& ctx) override;
  std::vector<Vec2> commands(const GameState& state, std::vector<Event>& events) override;
  std::unique_ptr<PursuitStrategy> clone() const override { return std::make_unique<SwitchingStrategy>(*this); }

  SwitchMode mode() const { return mode_; }
  const std::optional<SwitchDecision>& decision() const { return decision_; }
  /// Capture point steered toward at the last step.
  std::optional<Vec2> current_h() const { return current_h_; }

 private:
  std::unique_ptr<PursuitStrategy> base_;
  SwitchMode mode_{SwitchMode::Base};
  std::optional<SwitchDecision> decision_;
  std::optional<Vec2> current_h_;
};

class FixedDirectionEvader final : public EvaderStrategy {
 public:
  explicit FixedDirectionEvader(Vec2 dir);
  std::string name() const override;
  void reset(const GameState&, const StrategyContext&) override {}
  Vec2 command(const GameState& state, std::vector<Event>&) override { return evader_fixed_direction(state, dir_); }
  std::unique_ptr<EvaderStrategy> clone() const override { return std::make_unique<FixedDirectionEvader>(*this); }

 private:
  Vec2 dir_;
};

class FarthestVertexEvader final : public EvaderStrategy {
 public:
  std::string name() const override { return "voronoi-far-vertex"; }
  void reset(const GameState&, const StrategyContext& ctx) override { arena_ = ctx.arena_halfwidth; }
  Vec2 command(const GameState& state, std::vector<Event>& events) override;
  std::unique_ptr<EvaderStrategy> clone() const override { return std::make_unique<FarthestVertexEvader>(*this); }

 private:
  double arena_{kDefaultArenaHalfwidth};
};

/// Runs along the escape certificate, latched at the first call.
class EscapeEvader final : public EvaderStrategy {
 public:
  std::string name() const override { return "escape"; }
  void reset(const GameState&, const StrategyContext&) override { latched_.reset(); }
  Vec2 command(const GameState& state, std::vector<Event>& events) override;
  std::unique_ptr<EvaderStrategy> clone() const override { return std::make_unique<EscapeEvader>(*this); }

 private:
  std::optional<Vec2> latched_;
};

/// Plays a base evasion until the pursuers switch, then the optimal
/// two-pursuer evasion toward the switched pair's capture point.
class OptimalAfterSwitchEvader final : public EvaderStrategy {
 public:
  explicit OptimalAfterSwitchEvader(std::unique_ptr<EvaderStrategy> before = std::make_unique<FarthestVertexEvader>());
  OptimalAfterSwitchEvader(const OptimalAfterSwitchEvader& other);
  OptimalAfterSwitchEvader& operator=(const OptimalAfterSwitchEvader&) = delete;

  std::string name() const override;
  void reset(const GameState& initial, const StrategyContext& ctx) override;
  Vec2 command(const GameState& state, std::vector<Event>& events) override;
  std::unique_ptr<EvaderStrategy> clone() const override { return std::make_unique<OptimalAfterSwitchEvader>(*this); }
  void on_pursuer_switch(const SwitchDecision& decision) override;

  const std::optional<SwitchDecision>& decision() const { return decision_; }

 private:
  std::unique_ptr<EvaderStrategy> before_;
  std::optional<SwitchDecision> decision_;
  std::optional<Vec2> current_h_;
};

// ---- construction by name ---------------------------------------------------

/// "pps", "s-pps", "cs", "s-cs", "vs", "s-vs", "fpps[:mx,my]", "s-fpps[:mx,my]".
std::unique_ptr<PursuitStrategy> make_pursuit_strategy(std::string_view name);
/// "fixed:<dx>,<dy>", "voronoi-far-vertex", "escape", "optimal-after-switch" and
/// "optimal-after-switch:<base evader>".
std::unique_ptr<EvaderStrategy> make_evader_strategy(std::string_view name);

std::vector<std::string> pursuit_strategy_names();

/// Caps a command at unit norm.
Vec2 clamp_speed(Vec2 v);

}  // namespace pursuit
