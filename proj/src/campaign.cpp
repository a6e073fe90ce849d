#include "pursuit/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <random>
#include <stdexcept>
#include <thread>
#include <tuple>

namespace pursuit {

void CampaignSpec::validate() const {
  if (p_range.empty() || radii.empty()) throw std::invalid_argument("campaign needs pursuer counts and radii");
  if (games_per_cell < 1) throw std::invalid_argument("games_per_cell must be at least 1");
  for (int p : p_range) {
    if (p < 3) throw std::invalid_argument("pursuer counts must be at least 3");
  }
  for (double r : radii) {
    if (!(r > 0.0)) throw std::invalid_argument("radii must be positive");
  }
  if (!(capture_radius > 0.0)) throw std::invalid_argument("capture radius must be positive");
  // Fail fast on unknown names.
  (void)make_pursuit_strategy(pursuer_strategies.first);
  (void)make_pursuit_strategy(pursuer_strategies.second);
  (void)make_evader_strategy(evader_strategy);
}

CampaignSpec disk_campaign_spec(int games_per_cell, std::uint64_t base_seed) {
  CampaignSpec spec;
  spec.p_range = {3, 4, 5, 6, 7, 8, 9, 10};
  spec.radii = {10.0, 30.0, 50.0};
  spec.games_per_cell = games_per_cell;
  spec.base_seed = base_seed;
  return spec;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

double unit_double(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

std::uint64_t game_seed(std::uint64_t base_seed, int p, double radius, int game_index) {
  std::uint64_t h = splitmix64(base_seed);
  h = splitmix64(h ^ static_cast<std::uint64_t>(p));
  h = splitmix64(h ^ std::bit_cast<std::uint64_t>(radius));
  h = splitmix64(h ^ static_cast<std::uint64_t>(game_index));
  return h;
}

Scenario generate_scenario(int p, double radius, std::uint64_t seed, double capture_radius) {
  if (p < 3) throw std::invalid_argument("generate_scenario needs p >= 3");
  if (!(radius > 0.0)) throw std::invalid_argument("radius must be positive");
  std::mt19937_64 rng(seed);
  Scenario sc;
  sc.capture_radius = capture_radius;
  sc.evader = {0.0, 0.0};
  sc.pursuers.resize(static_cast<std::size_t>(p));
  for (int attempt = 0; attempt < 10000; ++attempt) {
    bool ok = true;
    for (Vec2& q : sc.pursuers) {
      const double rho = radius * std::sqrt(unit_double(rng));
      const double theta = 2.0 * std::numbers::pi * unit_double(rng);
      q = {rho * std::cos(theta), rho * std::sin(theta)};
      ok = ok && q.norm() > capture_radius;
    }
    if (ok && convex_hull(sc.pursuers).strictly_contains(sc.evader, 1e-9)) return sc;
  }
  throw std::runtime_error("cannot satisfy hull condition");
}

Scenario square_preset(const std::string& pursuer_strategy) {
  (void)make_pursuit_strategy(pursuer_strategy);
  Scenario sc;
  sc.capture_radius = 1.0;
  sc.evader = {0.0, 5.0};
  sc.pursuers = {{-10.0, -10.0}, {-10.0, 10.0}, {10.0, -10.0}, {10.0, 10.0}};
  sc.pursuer_strategy = pursuer_strategy;
  sc.evader_strategy = "optimal-after-switch:fixed:0,1";
  return sc;
}

BoxStats box_stats(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("no values");
  std::sort(values.begin(), values.end());
  auto quantile = [&](double q) {
    const double pos = q * static_cast<double>(values.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const std::size_t hi = std::min(lo + 1, values.size() - 1);
    return values[lo] + (pos - static_cast<double>(lo)) * (values[hi] - values[lo]);
  };
  BoxStats s{values.front(), quantile(0.25), quantile(0.5), quantile(0.75), values.back(), {}};
  const double iqr = s.q3 - s.q1;
  for (double v : values) {
    if (v < s.q1 - 1.5 * iqr || v > s.q3 + 1.5 * iqr) s.outliers.push_back(v);
  }
  return s;
}

std::vector<CellSummary> summarize(const std::vector<RhoRecord>& records) {
  std::map<std::pair<int, double>, std::vector<const RhoRecord*>> by_cell;
  for (const RhoRecord& r : records) by_cell[{r.p, r.radius}].push_back(&r);
  std::vector<CellSummary> out;
  for (const auto& [key, recs] : by_cell) {
    CellSummary c;
    c.p = key.first;
    c.radius = key.second;
    c.n = static_cast<int>(recs.size());
    std::vector<double> rhos;
    int switched = 0;
    for (const RhoRecord* r : recs) {
      switched += r->switched ? 1 : 0;
      c.baseline_captures += r->baseline_outcome == OutcomeKind::Captured ? 1 : 0;
      c.treatment_captures += r->treatment_outcome == OutcomeKind::Captured ? 1 : 0;
      if (r->rho) rhos.push_back(*r->rho);
    }
    c.switched_frac = static_cast<double>(switched) / static_cast<double>(c.n);
    if (!rhos.empty()) c.rho = box_stats(std::move(rhos));
    out.push_back(std::move(c));
  }
  return out;
}

CampaignResult run_rho_campaign(const CampaignSpec& spec, const SimConfig& config, unsigned jobs) {
  spec.validate();
  config.validate();

  struct Job {
    int p;
    double radius;
    int index;
  };
  std::vector<Job> work;
  for (int p : spec.p_range) {
    for (double radius : spec.radii) {
      for (int g = 0; g < spec.games_per_cell; ++g) work.push_back({p, radius, g});
    }
  }

  SimConfig cfg = config;
  cfg.sample_stride = std::numeric_limits<std::size_t>::max();

  std::vector<RhoRecord> records(work.size());
  auto play = [&](const Job& job) {
    Scenario sc = generate_scenario(job.p, job.radius, game_seed(spec.base_seed, job.p, job.radius, job.index),
                                    spec.capture_radius);
    sc.evader_strategy = spec.evader_strategy;
    RhoRecord rec;
    rec.p = job.p;
    rec.radius = job.radius;
    rec.game_index = job.index;

    sc.pursuer_strategy = spec.pursuer_strategies.first;
    const SimulationTrace base = run_game(sc, cfg);
    sc.pursuer_strategy = spec.pursuer_strategies.second;
    const SimulationTrace treat = run_game(sc, cfg);

    rec.baseline_outcome = base.outcome.kind;
    rec.treatment_outcome = treat.outcome.kind;
    if (base.outcome.kind == OutcomeKind::Captured) rec.t_baseline = base.outcome.t;
    if (treat.outcome.kind == OutcomeKind::Captured) rec.t_treatment = treat.outcome.t;
    rec.switched = treat.switched();
    if (rec.t_baseline && rec.t_treatment) rec.rho = *rec.t_baseline / *rec.t_treatment;
    return rec;
  };

  const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(work.size())));
  if (threads == 1) {
    for (std::size_t i = 0; i < work.size(); ++i) records[i] = play(work[i]);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        try {
          for (std::size_t i = next++; i < work.size() && !failed; i = next++) records[i] = play(work[i]);
        } catch (...) {
          if (!failed.exchange(true)) failure = std::current_exception();
        }
      });
    }
    for (std::thread& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
  }

  std::sort(records.begin(), records.end(), [](const RhoRecord& a, const RhoRecord& b) {
    return std::tie(a.p, a.radius, a.game_index) < std::tie(b.p, b.radius, b.game_index);
  });
  CampaignResult result;
  result.cells = summarize(records);
  result.records = std::move(records);
  return result;
}

}  // namespace pursuit
