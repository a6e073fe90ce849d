#pragma once

// File formats: scenario and campaign JSON documents, trace CSV, event JSON
// lines, outcome and summary JSON, and the one-shot analysis report.

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pursuit/campaign.hpp"
#include "pursuit/sim.hpp"

namespace pursuit::io {

using nlohmann::json;

/// Malformed input. The message names the offending field or position.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ScenarioFile {
  Scenario scenario;
  SimConfig sim;

  bool operator==(const ScenarioFile& o) const;
};

/// Structural parse only; call Scenario::validate() for the game rules.
ScenarioFile parse_scenario(const std::string& text);
ScenarioFile load_scenario(const std::filesystem::path& path);
json scenario_to_json(const ScenarioFile& file);
std::string emit_scenario(const ScenarioFile& file);

struct CampaignFile {
  CampaignSpec spec;
  SimConfig sim;
};
CampaignFile parse_campaign(const std::string& text);
CampaignFile load_campaign(const std::filesystem::path& path);
json campaign_to_json(const CampaignFile& file);

/// "%.17g".
std::string format_double(double v);

std::string trace_csv(const SimulationTrace& trace);
json event_json(const Event& event);
std::string events_jsonl(const std::vector<Event>& events);
json outcome_json(const SimulationTrace& trace, const Scenario& scenario);

std::string records_csv(const std::vector<RhoRecord>& records);
json summary_json(const CampaignResult& result, const CampaignSpec& spec, const SimConfig& sim);

/// Game-of-kind verdict, qualifying pairs, switch decision and the covering
/// predicate for a single instant.
json analysis_report(const Scenario& state);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& content);

}  // namespace pursuit::io
