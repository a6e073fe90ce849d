#include <doctest.h>

#include <cmath>

#include "pursuit/campaign.hpp"

using namespace pursuit;

TEST_CASE("generated scenarios surround the evader") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Scenario sc = generate_scenario(3, 10.0, seed);
    CHECK(sc.evader == Vec2{0, 0});
    REQUIRE(sc.pursuers.size() == 3);
    // Origin strictly inside the triangle: all three edge orientations agree.
    const Vec2 a = sc.pursuers[0], b = sc.pursuers[1], c = sc.pursuers[2];
    const double s1 = cross(b - a, -a), s2 = cross(c - b, -b), s3 = cross(a - c, -c);
    CHECK(((s1 > 0 && s2 > 0 && s3 > 0) || (s1 < 0 && s2 < 0 && s3 < 0)));
  }
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    for (Vec2 q : generate_scenario(4, 50.0, seed).pursuers) {
      CHECK(q.norm() <= 50.0);
      CHECK(q.norm() > 1.0);
    }
  }
}

TEST_CASE("generated scenarios are reproducible") {
  CHECK(generate_scenario(5, 30.0, 7) == generate_scenario(5, 30.0, 7));
  CHECK_FALSE(generate_scenario(5, 30.0, 7) == generate_scenario(5, 30.0, 8));
  CHECK_THROWS(generate_scenario(2, 30.0, 7));
  CHECK_THROWS(generate_scenario(3, -1.0, 7));
  // A disk too small to place pursuers outside the capture radius.
  CHECK_THROWS_WITH(generate_scenario(3, 1.0, 7), "cannot satisfy hull condition");
}

TEST_CASE("per-game seeds are isolated") {
  const std::uint64_t a = game_seed(1, 3, 10.0, 0);
  CHECK(a == game_seed(1, 3, 10.0, 0));
  CHECK(a != game_seed(1, 3, 10.0, 1));
  CHECK(a != game_seed(1, 4, 10.0, 0));
  CHECK(a != game_seed(1, 3, 30.0, 0));
  CHECK(a != game_seed(2, 3, 10.0, 0));
}

TEST_CASE("box statistics") {
  const BoxStats s = box_stats({1, 2, 3, 4, 100});
  CHECK(s.min == 1);
  CHECK(s.q1 == 2);
  CHECK(s.median == 3);
  CHECK(s.q3 == 4);
  CHECK(s.max == 100);
  REQUIRE(s.outliers.size() == 1);
  CHECK(s.outliers[0] == 100);
  const BoxStats even = box_stats({4, 1, 3, 2});
  CHECK(even.median == doctest::Approx(2.5));
  CHECK(even.q1 == doctest::Approx(1.75));
  CHECK_THROWS(box_stats({}));
}

TEST_CASE("square preset") {
  const Scenario sc = square_preset("s-pps");
  CHECK(sc.evader == Vec2{0, 5});
  CHECK(sc.pursuers.size() == 4);
  CHECK(sc.capture_radius == 1.0);
  CHECK_THROWS(square_preset("nope"));
}

TEST_CASE("small campaign") {
  CampaignSpec spec;
  spec.p_range = {3, 6};
  spec.radii = {10.0, 30.0};
  spec.games_per_cell = 3;
  spec.base_seed = 9;
  const CampaignResult one = run_rho_campaign(spec, SimConfig{}, 1);
  const CampaignResult two = run_rho_campaign(spec, SimConfig{}, 2);
  REQUIRE(one.records.size() == 12);
  CHECK(one.cells.size() == 4);
  for (std::size_t i = 0; i < one.records.size(); ++i) {
    const RhoRecord& r = one.records[i];
    CHECK(r.rho == two.records[i].rho);
    CHECK(r.treatment_outcome == OutcomeKind::Captured);
    if (r.rho) CHECK(*r.rho == *r.t_baseline / *r.t_treatment);
    if (!r.switched) {
      REQUIRE(r.rho);
      CHECK(std::abs(*r.rho - 1.0) <= 1e-9);
    }
  }
  CampaignSpec bad = spec;
  bad.games_per_cell = 0;
  CHECK_THROWS(run_rho_campaign(bad, SimConfig{}));
}

TEST_CASE("disk campaign grid") {
  const CampaignSpec s = disk_campaign_spec(10, 3);
  CHECK(s.p_range.size() == 8);
  CHECK(s.radii.size() == 3);
  CHECK(s.games_per_cell == 10);
  CHECK(s.pursuer_strategies.first == "vs");
  CHECK(s.pursuer_strategies.second == "s-vs");
}
