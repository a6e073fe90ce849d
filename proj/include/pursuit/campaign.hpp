#pragma once

// Batch experiments: the four-pursuer square preset, randomized scenario
// generation and the baseline-vs-switching capture-time ratio campaign.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pursuit/sim.hpp"

namespace pursuit {

struct CampaignSpec {
  std::vector<int> p_range;
  std::vector<double> radii;
  int games_per_cell{100};
  std::uint64_t base_seed{0};
  /// Baseline first, treatment second; rho = t_baseline / t_treatment.
  std::pair<std::string, std::string> pursuer_strategies{"vs", "s-vs"};
  std::string evader_strategy{"voronoi-far-vertex"};
  double capture_radius{1.0};

  void validate() const;
  bool operator==(const CampaignSpec&) const = default;
};

/// p = 3..10, R_p in {10, 30, 50}.
CampaignSpec disk_campaign_spec(int games_per_cell = 100, std::uint64_t base_seed = 0);

struct RhoRecord {
  int p{0};
  double radius{0.0};
  int game_index{0};
  std::optional<double> t_baseline;  // absent when that run did not capture
  std::optional<double> t_treatment;
  std::optional<double> rho;
  bool switched{false};
  OutcomeKind baseline_outcome{OutcomeKind::Timeout};
  OutcomeKind treatment_outcome{OutcomeKind::Timeout};
};

struct BoxStats {
  double min{0.0}, q1{0.0}, median{0.0}, q3{0.0}, max{0.0};
  std::vector<double> outliers;  // beyond 1.5 IQR from the quartiles
};

/// Five-number summary with linearly interpolated quartiles.
BoxStats box_stats(std::vector<double> values);

struct CellSummary {
  int p{0};
  double radius{0.0};
  int n{0};
  double switched_frac{0.0};
  int baseline_captures{0};
  int treatment_captures{0};
  std::optional<BoxStats> rho;
};

struct CampaignResult {
  std::vector<RhoRecord> records;  // sorted by (p, radius, game_index)
  std::vector<CellSummary> cells;
};

/// Per-game seed from (base seed, cell, index); games never share a stream.
std::uint64_t game_seed(std::uint64_t base_seed, int p, double radius, int game_index);

/// Evader at the origin, p pursuers uniform on the disk of the given radius,
/// redrawn until the origin is strictly inside their hull and no pursuer
/// starts within the capture radius.
Scenario generate_scenario(int p, double radius, std::uint64_t seed, double capture_radius = 1.0);

/// Square of side 20 around the origin, evader at (0, 5) running upward.
Scenario square_preset(const std::string& pursuer_strategy);

std::vector<CellSummary> summarize(const std::vector<RhoRecord>& records);

CampaignResult run_rho_campaign(const CampaignSpec& spec, const SimConfig& config, unsigned jobs = 1);

}  // namespace pursuit
