// pursuitlab: single games, ratio campaigns, one-shot analysis and presets.
//
// Exit codes: 0 game captured or escaped (or command succeeded), 2 timeout,
// 1 bad input.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "pursuit/campaign.hpp"
#include "pursuit/io.hpp"
#include "pursuit/svg.hpp"

namespace fs = std::filesystem;
using namespace pursuit;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitTimeout = 2;

struct SimFlags {
  std::optional<double> dt;
  std::optional<double> t_max;
  std::optional<std::uint64_t> seed;

  void add_to(CLI::App* app) {
    app->add_option("--dt", dt, "Integration step");
    app->add_option("--t-max", t_max, "Time limit");
    app->add_option("--seed", seed, "Random seed");
  }
  void apply(SimConfig& c) const {
    if (dt) c.dt = *dt;
    if (t_max) c.t_max = *t_max;
    if (seed) c.rng_seed = *seed;
  }
};

struct RunArgs {
  std::string scenario_path;
  std::string preset;
  std::string strategy;
  std::string plot;
  std::string out{"."};
  SimFlags sim;
};

struct CampaignArgs {
  std::string spec_path;
  std::string preset;
  std::optional<int> games;
  std::string strategies;
  unsigned jobs{1};
  std::string out{"."};
  SimFlags sim;
};

struct PresetArgs {
  std::string name;
  std::string strategy{"s-vs"};
  int games{100};
};

io::ScenarioFile square_file(const std::string& strategy) {
  io::ScenarioFile f;
  f.scenario = square_preset(strategy);
  return f;
}

int cmd_run(const RunArgs& a) {
  io::ScenarioFile file;
  if (!a.preset.empty()) {
    if (a.preset != "square") throw io::FormatError("unknown scenario preset '" + a.preset + "'");
    file = square_file(a.strategy.empty() ? "s-vs" : a.strategy);
  } else if (!a.scenario_path.empty()) {
    file = io::load_scenario(a.scenario_path);
    if (!a.strategy.empty()) file.scenario.pursuer_strategy = a.strategy;
  } else {
    throw io::FormatError("run needs a scenario file or --preset");
  }
  a.sim.apply(file.sim);
  file.scenario.validate();

  const SimulationTrace trace = run_game(file.scenario, file.sim);
  const fs::path out(a.out);
  io::write_file(out / "trace.csv", io::trace_csv(trace));
  io::write_file(out / "events.jsonl", io::events_jsonl(trace.events));
  const std::string outcome = io::outcome_json(trace, file.scenario).dump(2) + "\n";
  io::write_file(out / "outcome.json", outcome);
  if (!a.plot.empty()) io::write_file(a.plot, render_svg(trace));
  std::cout << outcome;
  return trace.outcome.kind == OutcomeKind::Timeout ? kExitTimeout : kExitOk;
}

std::pair<std::string, std::string> split_pair(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos || s.find(',', comma + 1) != std::string::npos) {
    throw io::FormatError("--strategies expects BASELINE,TREATMENT");
  }
  return {s.substr(0, comma), s.substr(comma + 1)};
}

int cmd_campaign(const CampaignArgs& a) {
  io::CampaignFile file;
  if (!a.spec_path.empty()) {
    file = io::load_campaign(a.spec_path);
  } else if (a.preset.empty() || a.preset == "disk") {
    file.spec = disk_campaign_spec();
  } else {
    throw io::FormatError("unknown campaign preset '" + a.preset + "'");
  }
  if (a.games) file.spec.games_per_cell = *a.games;
  if (!a.strategies.empty()) file.spec.pursuer_strategies = split_pair(a.strategies);
  if (a.sim.seed) file.spec.base_seed = *a.sim.seed;
  a.sim.apply(file.sim);
  file.spec.validate();

  const CampaignResult result = run_rho_campaign(file.spec, file.sim, a.jobs);
  const fs::path out(a.out);
  io::write_file(out / "records.csv", io::records_csv(result.records));
  io::write_file(out / "summary.json", io::summary_json(result, file.spec, file.sim).dump(2) + "\n");

  std::printf("%4s %6s %4s %9s %9s %9s\n", "p", "R_p", "n", "switched", "median", "max");
  for (const CellSummary& c : result.cells) {
    std::printf("%4d %6g %4d %9.2f %9.4f %9.4f\n", c.p, c.radius, c.n, c.switched_frac, c.rho ? c.rho->median : 0.0,
                c.rho ? c.rho->max : 0.0);
  }
  return kExitOk;
}

int cmd_analyze(const std::string& path) {
  const io::ScenarioFile file = io::load_scenario(path);
  const io::json report = io::analysis_report(file.scenario);
  std::cout << report.dump(2) << "\n";
  if (report["status"] == "already captured") {
    std::cerr << "error: already captured\n";
    return kExitConfig;
  }
  return kExitOk;
}

int cmd_preset_list() {
  std::cout << "square         four pursuers on a square of side 20, evader at (0, 5) running upward\n";
  std::cout << "disk-campaign  p = 3..10, R_p in {10, 30, 50}, evader at the origin, vs against s-vs\n";
  return kExitOk;
}

int cmd_preset_emit(const PresetArgs& a) {
  if (a.name == "square") {
    std::cout << io::emit_scenario(square_file(a.strategy));
  } else if (a.name == "disk-campaign") {
    io::CampaignFile f;
    f.spec = disk_campaign_spec(a.games);
    std::cout << io::campaign_to_json(f).dump(2) << "\n";
  } else {
    throw io::FormatError("unknown preset '" + a.name + "'");
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-pursuer single-evader pursuit lab"};
  app.require_subcommand(1);

  RunArgs run;
  CLI::App* run_cmd = app.add_subcommand("run", "Play one game");
  run_cmd->add_option("scenario", run.scenario_path, "Scenario JSON file");
  run_cmd->add_option("--preset", run.preset, "Built-in scenario instead of a file (square)");
  run_cmd->add_option("--strategy", run.strategy, "Override the pursuer strategy");
  run_cmd->add_option("--plot", run.plot, "Write an SVG trajectory plot");
  run_cmd->add_option("--out", run.out, "Directory for trace.csv, events.jsonl and outcome.json");
  run.sim.add_to(run_cmd);

  CampaignArgs camp;
  CLI::App* camp_cmd = app.add_subcommand("campaign", "Baseline against treatment over random scenarios");
  camp_cmd->add_option("spec", camp.spec_path, "Campaign JSON file");
  camp_cmd->add_option("--preset", camp.preset, "Built-in campaign (disk)");
  camp_cmd->add_option("--games", camp.games, "Games per cell");
  camp_cmd->add_option("--strategies", camp.strategies, "BASELINE,TREATMENT");
  camp_cmd->add_option("--jobs", camp.jobs, "Worker threads")->check(CLI::PositiveNumber);
  camp_cmd->add_option("--out", camp.out, "Directory for records.csv and summary.json");
  camp.sim.add_to(camp_cmd);

  std::string analyze_path;
  CLI::App* analyze_cmd = app.add_subcommand("analyze", "Report on a single instant");
  analyze_cmd->add_option("state", analyze_path, "Scenario JSON file")->required();

  PresetArgs preset;
  CLI::App* preset_cmd = app.add_subcommand("preset", "Built-in scenarios and campaigns");
  preset_cmd->require_subcommand(1);
  CLI::App* list_cmd = preset_cmd->add_subcommand("list", "List presets");
  CLI::App* emit_cmd = preset_cmd->add_subcommand("emit", "Print a preset as JSON");
  emit_cmd->add_option("name", preset.name, "Preset name")->required();
  emit_cmd->add_option("--strategy", preset.strategy, "Pursuer strategy for scenario presets");
  emit_cmd->add_option("--games", preset.games, "Games per cell for campaign presets");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*run_cmd) return cmd_run(run);
    if (*camp_cmd) return cmd_campaign(camp);
    if (*analyze_cmd) return cmd_analyze(analyze_path);
    if (*list_cmd) return cmd_preset_list();
    if (*emit_cmd) return cmd_preset_emit(preset);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  return kExitConfig;
}
