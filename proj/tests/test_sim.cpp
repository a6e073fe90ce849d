#include <doctest.h>

#include <cmath>

#include "pursuit/campaign.hpp"
#include "pursuit/sim.hpp"
#include "support.hpp"

using namespace pursuit;

TEST_CASE("euler step") {
  const GameState s{0.0, {0, 0}, {{5, 5}}, 1.0};
  const GameState n = step(s, {{0, 0}}, {0, 1}, 0.01);
  CHECK(n.evader == Vec2{0, 0.01});
  CHECK(n.pursuers[0] == Vec2{5, 5});
  CHECK(n.t == doctest::Approx(0.01));
  CHECK_THROWS(step(s, {}, {0, 1}, 0.01));

  GameState run = s;
  for (int i = 0; i < 1000; ++i) run = step(run, {{1, 0}}, {0.6, 0.8}, 0.01);
  CHECK(std::abs(distance(run.evader, s.evader) - 10.0) <= 1e-12 * 10.0 * 100);
}

TEST_CASE("capture refinement") {
  const GameState prev{0.0, {0, 0}, {{1.004, 0}}, 1.0};
  const GameState next{0.01, {0, 0}, {{0.996, 0}}, 1.0};
  const auto c = detect_capture(prev, next, 1.0);
  REQUIRE(c);
  CHECK(c->t == doctest::Approx(0.005).epsilon(1e-9));
  REQUIRE(c->by.size() == 1);
  CHECK(c->by[0] == AgentId{1});

  const GameState miss{0.01, {0, 0}, {{1.001, 0}}, 1.0};
  CHECK_FALSE(detect_capture(prev, miss, 1.0));

  const auto coarse = detect_capture(prev, next, 1.0, false);
  REQUIRE(coarse);
  CHECK(coarse->t == 0.01);
}

TEST_CASE("simultaneous capture reports every pursuer") {
  // Three pursuers 120 degrees apart close in on a stationary evader.
  std::vector<Vec2> prev_p, next_p;
  for (int k = 0; k < 3; ++k) {
    const double a = 2.0 * 3.14159265358979323846 * k / 3.0;
    const Vec2 u{std::cos(a), std::sin(a)};
    prev_p.push_back(u * 1.004);
    next_p.push_back(u * 0.996);
  }
  const auto c = detect_capture({0.0, {0, 0}, prev_p, 1.0}, {0.01, {0, 0}, next_p, 1.0}, 1.0);
  REQUIRE(c);
  CHECK(c->by.size() == 3);
}

TEST_CASE("scenario and config validation") {
  Scenario sc{1.0, {0, 0}, {{0.5, 0}, {5, 5}}, "pps", "fixed:0,1"};
  CHECK_THROWS_WITH(sc.validate(), doctest::Contains("already captured"));
  sc.pursuers[0] = {3, 0};
  CHECK_NOTHROW(sc.validate());
  SimConfig bad;
  bad.dt = 0.5;
  CHECK_THROWS(Game(sc, bad));
  sc.pursuer_strategy = "nope";
  CHECK_THROWS(Game(sc, SimConfig{}));
}

TEST_CASE("a game never starts captured and ends with a capture inside r") {
  const SimulationTrace t = run_game(square_preset("s-vs"), SimConfig{});
  REQUIRE(t.outcome.kind == OutcomeKind::Captured);
  const GameState& last = t.samples.back();
  double closest = 1e300;
  for (Vec2 q : last.pursuers) closest = std::min(closest, distance(q, last.evader));
  CHECK(closest <= last.capture_radius + 1e-9);
  int switches = 0;
  double prev_t = 0.0;
  for (const Event& e : t.events) {
    CHECK(e.t >= prev_t);
    prev_t = e.t;
    switches += e.kind == EventKind::Switch ? 1 : 0;
  }
  CHECK(switches == 1);
  CHECK(t.samples.front().t == 0.0);
}

TEST_CASE("square preset outcomes") {
  const SimConfig cfg;
  CHECK(run_game(square_preset("s-pps"), cfg).outcome.t == doctest::Approx(22.66).epsilon(0.02));
  CHECK(run_game(square_preset("s-cs"), cfg).outcome.t == doctest::Approx(33.91).epsilon(0.02));
  CHECK(run_game(square_preset("vs"), cfg).outcome.t == doctest::Approx(20.02).epsilon(0.10));
  CHECK(run_game(square_preset("s-vs"), cfg).outcome.t == doctest::Approx(16.61).epsilon(0.10));
  CHECK(run_game(square_preset("pps"), cfg).outcome.kind != OutcomeKind::Captured);
  CHECK(run_game(square_preset("cs"), cfg).outcome.kind != OutcomeKind::Captured);
}

TEST_CASE("the switched pair meets the third and fourth pursuers at the capture point") {
  const SimulationTrace t = run_game(square_preset("s-vs"), SimConfig{});
  const auto sw = t.first_event(EventKind::Switch);
  REQUIRE(sw);
  REQUIRE(sw->decision);
  // Pursuers 1 and 3 sit on the switching circle when the switch fires.
  const GameState* at = nullptr;
  for (const GameState& s : t.samples) {
    if (s.t == sw->t) at = &s;
  }
  REQUIRE(at);
  const auto third = centroid_check(*sw->decision, at->pursuers, 1.0, 0.05);
  CHECK(third.has_value());
}

TEST_CASE("escape outcome") {
  Scenario sc{1.0, {5, 0}, {{-2, 0}, {2, 0}, {0, 3}}, "s-pps", "escape"};
  const SimulationTrace t = run_game(sc, SimConfig{});
  CHECK(t.outcome.kind == OutcomeKind::Escaped);
  CHECK(t.first_event(EventKind::EscapeCertified).has_value());
}

TEST_CASE("timeout outcome") {
  Scenario sc{1.0, {0, 0}, {{-30, 0}, {30, 0}, {0, 30}, {0, -30}}, "vs", "voronoi-far-vertex"};
  SimConfig cfg;
  cfg.t_max = 1.0;
  const SimulationTrace t = run_game(sc, cfg);
  CHECK(t.outcome.kind == OutcomeKind::Timeout);
  CHECK(t.outcome.t == doctest::Approx(1.0));
}

TEST_CASE("identical runs are identical") {
  const SimulationTrace a = run_game(square_preset("s-vs"), SimConfig{});
  const SimulationTrace b = run_game(square_preset("s-vs"), SimConfig{});
  CHECK(a.samples == b.samples);
  CHECK(a.outcome.t == b.outcome.t);
}

TEST_CASE("a copied game replays the rest of the trace") {
  Game g(square_preset("s-vs"), SimConfig{});
  for (int i = 0; i < 900; ++i) g.advance();  // past the switch at t = 8.07
  Game copy = g;
  g.run();
  copy.run();
  CHECK(g.trace().samples == copy.trace().samples);
  CHECK(g.trace().outcome.t == copy.trace().outcome.t);

  Game early(square_preset("s-pps"), SimConfig{});
  for (int i = 0; i < 100; ++i) early.advance();
  Game early_copy = early;
  early.run();
  early_copy.run();
  CHECK(early.trace().samples == early_copy.trace().samples);
}

TEST_CASE("halving the step barely moves the capture time") {
  SimConfig fine;
  fine.dt = 0.005;
  const double coarse_t = run_game(square_preset("s-pps"), SimConfig{}).outcome.t;
  const double fine_t = run_game(square_preset("s-pps"), fine).outcome.t;
  CHECK(std::abs(coarse_t - fine_t) / fine_t < 0.005);
}

TEST_CASE("sample stride keeps the final state") {
  SimConfig cfg;
  cfg.sample_stride = 100;
  const SimulationTrace t = run_game(square_preset("s-vs"), cfg);
  CHECK(t.samples.size() < 30);
  CHECK(t.samples.front().t == 0.0);
  CHECK(t.samples.back().t == doctest::Approx(16.62).epsilon(1e-3));
}
