#include <doctest.h>

#include <cmath>

#include "pursuit/analysis.hpp"
#include "support.hpp"

using namespace pursuit;
using testsupport::Rng;

namespace {

const std::vector<Vec2> kSquare{{-10, -10}, {-10, 10}, {10, -10}, {10, 10}};

std::pair<AgentId, AgentId> ids(int a, int b) { return {AgentId{a}, AgentId{b}}; }

}  // namespace

TEST_CASE("game of kind") {
  const GameOfKindVerdict inside = in_region_M({0, 5}, kSquare, 1.0);
  CHECK(inside.capturable);
  CHECK_FALSE(inside.escape_direction);

  const std::vector<Vec2> tri{{-2, 0}, {2, 0}, {0, 3}};
  const GameOfKindVerdict out = in_region_M({5, 0}, tri, 1.0);
  CHECK_FALSE(out.capturable);
  REQUIRE(out.escape_direction);
  CHECK(distance(*out.escape_direction, {1, 0}) <= 1e-12);
  CHECK(out.hull_distance == doctest::Approx(3.0));

  // The region is open: exactly r from the hull is outside.
  const GameOfKindVerdict rim = in_region_M({0, -1}, tri, 1.0);
  CHECK_FALSE(rim.capturable);
}

TEST_CASE("union of pair regions") {
  const std::vector<Vec2> ps{{-1, 0}, {1, 0}, {0, 100}};
  const auto pair = in_region_Dhat({0, 0.5}, ps, 1.0);
  REQUIRE(pair);
  CHECK(*pair == ids(1, 2));
  CHECK_FALSE(in_region_Dhat({5, 50}, ps, 1.0));
}

TEST_CASE("outside the pursuer hull the pair regions and the capture region agree") {
  Rng rng(31);
  int outside_hull = 0;
  for (int i = 0; i < 1000; ++i) {
    std::vector<Vec2> ps(static_cast<std::size_t>(rng.integer(2, 7)));
    for (Vec2& p : ps) p = rng.in_box(10);
    const double r = rng.uniform(0.5, 3.0);
    const Vec2 e = rng.in_box(14);
    const ConvexPolygon hull = convex_hull(ps);
    if (hull.size() >= 3 && hull.strictly_contains(e, 1e-9)) continue;
    ++outside_hull;
    REQUIRE(in_region_Dhat(e, ps, r).has_value() == in_region_M(e, ps, r).capturable);
  }
  CHECK(outside_hull > 500);
}

TEST_CASE("switch with a distant third pursuer prefers the clearer capture point") {
  const std::vector<Vec2> ps{{-2, 0}, {2, 0}, {0, 5}};
  const auto d = check_switch({0, 0}, ps, 1.0);
  REQUIRE(d);
  CHECK(d->pair == ids(1, 2));
  CHECK(d->t_capture == doctest::Approx(1.5));
  CHECK(distance(d->h, {0, -1.5}) <= 1e-12);
}

TEST_CASE("switch with a close third pursuer keeps only the passing capture point") {
  const std::vector<Vec2> ps{{-2, 0}, {2, 0}, {0, 2}};
  const auto a = assess_pairs({0, 0}, ps, 1.0);
  bool seen = false;
  for (const PairAssessment& pa : a) {
    if (pa.solution.pair != ids(1, 2)) continue;
    seen = true;
    REQUIRE(pa.passing_h.size() == 1);
    CHECK(distance(pa.passing_h[0], {0, -1.5}) <= 1e-12);
  }
  CHECK(seen);
  const auto d = check_switch({0, 0}, ps, 1.0);
  REQUIRE(d);
  CHECK(distance(d->h, {0, -1.5}) <= 1e-12);
}

TEST_CASE("two pursuers switch whenever the evader is in their region") {
  Rng rng(32);
  for (int i = 0; i < 200; ++i) {
    const auto c = testsupport::random_config2(rng, 1e-6);
    const std::vector<Vec2> ps{c.p1, c.p2};
    const auto d = check_switch(c.e, ps, c.r, 3.0);
    REQUIRE(d);
    CHECK(d->decided_at == 3.0);
  }
}

TEST_CASE("switch decisions satisfy the switching inequality and pick the fastest pair") {
  Rng rng(33);
  int fired = 0;
  for (int i = 0; i < 500; ++i) {
    const int p = rng.integer(3, 7);
    const double r = 1.0;
    const std::vector<Vec2> ps = testsupport::random_surrounding(rng, {0, 0}, p, rng.uniform(2.0, 6.0), r);
    const auto d = check_switch({0, 0}, ps, r);
    if (!d) continue;
    ++fired;
    for (Vec2 q : ps) REQUIRE(distance(d->h, q) >= d->t_capture + r - 1e-9);
    const auto all = assess_pairs({0, 0}, ps, r);
    for (const PairAssessment& a : all) {
      if (!a.passing_h.empty()) {
        REQUIRE(d->t_capture <= a.solution.t_capture);
        // Qualifying pairs share the capture time.
        REQUIRE(std::abs(d->t_capture - a.solution.t_capture) <= 1e-9 * (1 + d->t_capture));
      }
    }
  }
  CHECK(fired > 50);
}

TEST_CASE("third pursuer on the switching circle") {
  const std::vector<Vec2> base{{-2, 0}, {2, 0}};
  auto d = check_switch({0, 0.5}, base, 1.0);
  REQUIRE(d);
  // Place a third pursuer on C(H, T + r) straight above H.
  const Vec2 p3 = d->h + Vec2{0, d->t_capture + 1.0};
  const std::vector<Vec2> with3{{-2, 0}, {2, 0}, p3};
  const auto hit = centroid_check(*d, with3, 1.0, 1e-9);
  REQUIRE(hit);
  CHECK(*hit == AgentId{3});
  const std::vector<Vec2> far{{-2, 0}, {2, 0}, {0, 100}};
  CHECK_FALSE(centroid_check(*d, far, 1.0, 1e-6));
}

TEST_CASE("covering predicate") {
  const double s = std::sqrt(3.0);
  const std::vector<Vec2> tri{{0, 0}, {s, 0}, {s / 2, 1.5}};
  CHECK(covering_predicate(tri, 1.0));
  CHECK_FALSE(covering_predicate(kSquare, 1.0));
  const std::vector<Vec2> pair{{0, 0}, {2, 0}};
  CHECK_FALSE(covering_predicate(pair, 1.0));
}

TEST_CASE("tight clusters cover their hull") {
  Rng rng(34);
  for (int i = 0; i < 100; ++i) {
    const double r = 1.0;
    std::vector<Vec2> ps;
    while (ps.size() < 3 || !covering_predicate(ps, r)) {
      ps.clear();
      const int p = rng.integer(3, 8);
      for (int k = 0; k < p; ++k) ps.push_back(rng.in_disk(0.9));
    }
    const ConvexPolygon hull = convex_hull(ps);
    if (hull.size() < 3) continue;
    for (int s = 0; s < 2000; ++s) {
      const Vec2 q = testsupport::sample_in_convex(rng, hull.vertices());
      double best = 1e300;
      for (Vec2 p : ps) best = std::min(best, distance(p, q));
      REQUIRE(best <= r);
    }
  }
}

TEST_CASE("stretched pair capture time") {
  const double t13 = stretched_pair_capture_time({0, 0.5}, {-1, 0}, {1, 0}, 1.0, 1.0);
  CHECK(t13 == doctest::Approx(solve_2p1e({0, 0.5}, {-1, 0}, {3, 0}, 1.0).t_capture).epsilon(1e-12));
  CHECK(t13 == doctest::Approx(1.97871).epsilon(1e-5));
  CHECK(t13 > 0.25);
  CHECK(stretched_pair_capture_time({0, 0.5}, {-1, 0}, {1, 0}, 1.0, 1e-9) == doctest::Approx(0.25).epsilon(1e-7));
}

TEST_CASE("stretching the pair delays capture") {
  Rng rng(35);
  for (int i = 0; i < 300; ++i) {
    const auto c = testsupport::random_config2(rng, 1e-6);
    const double t12 = solve_2p1e(c.e, c.p1, c.p2, c.r).t_capture;
    double last = t12;
    for (double alpha : {0.01, 0.1, 0.5, 1.0, 2.0, 5.0}) {
      const double t13 = stretched_pair_capture_time(c.e, c.p1, c.p2, c.r, alpha);
      const Vec2 p3 = c.p2 + (c.p2 - c.p1) * alpha;
      const double direct = solve_2p1e(c.e, c.p1, p3, c.r).t_capture;
      REQUIRE(std::abs(t13 - direct) <= 1e-9 * (1 + direct));
      REQUIRE(t13 > last + 1e-12);
      last = t13;
    }
  }
}

TEST_CASE("third pursuer region") {
  const Vec2 p1{-2, 0}, p2{2, 0}, e{0.3, 0.4};
  const TwoPursuerSolution s = solve_2p1e(e, p1, p2, 1.0);
  const Vec2 h = s.h_points.front();
    // Just beyond the rim of the disk through P1.
  CHECK_FALSE(third_pursuer_region_contains(p1, p2, e, 1.0, p1 + (p1 - h) * 0.01));
  // H lies inside the wedge spanned at E by E - P1 and E - P2.
  CHECK_FALSE(third_pursuer_region_contains(p1, p2, e, 1.0, h));
  // Between E and the pursuer line, inside the circle.
  CHECK(third_pursuer_region_contains(p1, p2, e, 1.0, {0.3, 0.1}));
}

TEST_CASE("a third pursuer in the region captures sooner with one of the pair") {
  Rng rng(36);
  int tested = 0;
  for (int i = 0; i < 500; ++i) {
    const auto c = testsupport::random_config2(rng, 1e-3);
    const TwoPursuerSolution s = solve_2p1e(c.e, c.p1, c.p2, c.r);
    for (int k = 0; k < 20; ++k) {
      const Vec2 q = s.h_points.front() + rng.in_disk(s.t_capture + c.r);
      if (distance(q, c.e) <= c.r) continue;
      if (!third_pursuer_region_contains(c.p1, c.p2, c.e, c.r, q)) continue;
      ++tested;
      REQUIRE((in_capture_region_2p(c.e, c.p1, q, c.r) || in_capture_region_2p(c.e, c.p2, q, c.r)));
      break;
    }
  }
  CHECK(tested > 100);
}
