#include "pursuit/io.hpp"

#include <cstdio>
#include <fstream>
#include <initializer_list>
#include <sstream>

namespace pursuit::io {

namespace {

json parse_document(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(e.what());
  }
}

// Rejects unknown keys and reports missing or mistyped ones by path.
class Object {
 public:
  Object(const json& j, std::string path, std::initializer_list<const char*> allowed) : j_(j), path_(std::move(path)) {
    if (!j.is_object()) throw FormatError(path_ + ": expected an object");
    for (const auto& [key, value] : j.items()) {
      bool known = false;
      for (const char* a : allowed) known = known || key == a;
      if (!known) throw FormatError(where(key) + ": unknown key");
    }
  }

  bool has(const char* key) const { return j_.contains(key); }

  const json& at(const char* key) const {
    if (!has(key)) throw FormatError(where(key) + ": missing field");
    return j_.at(key);
  }

  std::string where(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }

  double number(const char* key) const {
    const json& v = at(key);
    if (!v.is_number()) throw FormatError(where(key) + ": expected a number");
    return v.get<double>();
  }
  double number(const char* key, double fallback) const { return has(key) ? number(key) : fallback; }

  std::string string(const char* key) const {
    const json& v = at(key);
    if (!v.is_string()) throw FormatError(where(key) + ": expected a string");
    return v.get<std::string>();
  }
  std::string string(const char* key, const std::string& fallback) const { return has(key) ? string(key) : fallback; }

  std::uint64_t unsigned_int(const char* key, std::uint64_t fallback) const {
    if (!has(key)) return fallback;
    const json& v = at(key);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
      throw FormatError(where(key) + ": expected a non-negative integer");
    }
    return v.get<std::uint64_t>();
  }

  Vec2 point(const char* key) const { return to_point(at(key), where(key)); }

  static Vec2 to_point(const json& v, const std::string& path) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
      throw FormatError(path + ": expected [x, y]");
    }
    return {v[0].get<double>(), v[1].get<double>()};
  }

 private:
  const json& j_;
  std::string path_;
};

json point_json(Vec2 p) { return json::array({p.x, p.y}); }

json ids_json(const std::vector<AgentId>& ids) {
  json out = json::array();
  for (AgentId id : ids) out.push_back(id.value);
  return out;
}

json decision_json(const SwitchDecision& d) {
  return {{"pair", {d.pair.first.value, d.pair.second.value}},
          {"h", point_json(d.h)},
          {"T", d.t_capture},
          {"decided_at", d.decided_at}};
}

SimConfig parse_sim(const json& j, const std::string& path) {
  Object o(j, path, {"dt", "t_max", "seed", "arena_halfwidth"});
  SimConfig c;
  c.dt = o.number("dt", c.dt);
  c.t_max = o.number("t_max", c.t_max);
  c.rng_seed = o.unsigned_int("seed", c.rng_seed);
  c.arena_halfwidth = o.number("arena_halfwidth", c.arena_halfwidth);
  return c;
}

json sim_json(const SimConfig& c) {
  return {{"dt", c.dt}, {"t_max", c.t_max}, {"seed", c.rng_seed}, {"arena_halfwidth", c.arena_halfwidth}};
}

}  // namespace

bool ScenarioFile::operator==(const ScenarioFile& o) const {
  return scenario == o.scenario && sim.dt == o.sim.dt && sim.t_max == o.sim.t_max && sim.rng_seed == o.sim.rng_seed &&
         sim.arena_halfwidth == o.sim.arena_halfwidth;
}

ScenarioFile parse_scenario(const std::string& text) {
  const json j = parse_document(text);
  Object root(j, "", {"capture_radius", "evader", "pursuers", "pursuer_strategy", "sim"});
  ScenarioFile f;
  f.scenario.capture_radius = root.number("capture_radius");

  Object ev(root.at("evader"), "evader", {"pos", "strategy"});
  f.scenario.evader = ev.point("pos");
  f.scenario.evader_strategy = ev.string("strategy", f.scenario.evader_strategy);

  const json& ps = root.at("pursuers");
  if (!ps.is_array() || ps.empty()) throw FormatError("pursuers: expected a non-empty array");
  for (std::size_t k = 0; k < ps.size(); ++k) {
    Object pk(ps[k], "pursuers[" + std::to_string(k) + "]", {"pos"});
    f.scenario.pursuers.push_back(pk.point("pos"));
  }
  f.scenario.pursuer_strategy = root.string("pursuer_strategy", f.scenario.pursuer_strategy);
  if (root.has("sim")) f.sim = parse_sim(root.at("sim"), "sim");

  try {
    (void)make_pursuit_strategy(f.scenario.pursuer_strategy);
  } catch (const std::exception& e) {
    throw FormatError(std::string("pursuer_strategy: ") + e.what());
  }
  try {
    (void)make_evader_strategy(f.scenario.evader_strategy);
  } catch (const std::exception& e) {
    throw FormatError(std::string("evader.strategy: ") + e.what());
  }
  return f;
}

ScenarioFile load_scenario(const std::filesystem::path& path) { return parse_scenario(read_file(path)); }

json scenario_to_json(const ScenarioFile& f) {
  json pursuers = json::array();
  for (Vec2 p : f.scenario.pursuers) pursuers.push_back({{"pos", point_json(p)}});
  return {{"capture_radius", f.scenario.capture_radius},
          {"evader", {{"pos", point_json(f.scenario.evader)}, {"strategy", f.scenario.evader_strategy}}},
          {"pursuers", pursuers},
          {"pursuer_strategy", f.scenario.pursuer_strategy},
          {"sim", sim_json(f.sim)}};
}

std::string emit_scenario(const ScenarioFile& f) { return scenario_to_json(f).dump(2) + "\n"; }

CampaignFile parse_campaign(const std::string& text) {
  const json j = parse_document(text);
  Object root(j, "",
              {"p_range", "radii", "games_per_cell", "base_seed", "pursuer_strategies", "evader_strategy",
               "capture_radius", "sim"});
  CampaignFile f;
  const json& pr = root.at("p_range");
  if (!pr.is_array()) throw FormatError("p_range: expected an array");
  for (const json& v : pr) {
    if (!v.is_number_integer()) throw FormatError("p_range: expected integers");
    f.spec.p_range.push_back(v.get<int>());
  }
  const json& radii = root.at("radii");
  if (!radii.is_array()) throw FormatError("radii: expected an array");
  for (const json& v : radii) {
    if (!v.is_number()) throw FormatError("radii: expected numbers");
    f.spec.radii.push_back(v.get<double>());
  }
  f.spec.games_per_cell = static_cast<int>(root.unsigned_int("games_per_cell", 100));
  f.spec.base_seed = root.unsigned_int("base_seed", 0);
  if (root.has("pursuer_strategies")) {
    const json& s = root.at("pursuer_strategies");
    if (!s.is_array() || s.size() != 2 || !s[0].is_string() || !s[1].is_string()) {
      throw FormatError("pursuer_strategies: expected [baseline, treatment]");
    }
    f.spec.pursuer_strategies = {s[0].get<std::string>(), s[1].get<std::string>()};
  }
  f.spec.evader_strategy = root.string("evader_strategy", f.spec.evader_strategy);
  f.spec.capture_radius = root.number("capture_radius", f.spec.capture_radius);
  if (root.has("sim")) f.sim = parse_sim(root.at("sim"), "sim");
  try {
    f.spec.validate();
  } catch (const std::exception& e) {
    throw FormatError(e.what());
  }
  return f;
}

CampaignFile load_campaign(const std::filesystem::path& path) { return parse_campaign(read_file(path)); }

json campaign_to_json(const CampaignFile& f) {
  return {{"p_range", f.spec.p_range},
          {"radii", f.spec.radii},
          {"games_per_cell", f.spec.games_per_cell},
          {"base_seed", f.spec.base_seed},
          {"pursuer_strategies", {f.spec.pursuer_strategies.first, f.spec.pursuer_strategies.second}},
          {"evader_strategy", f.spec.evader_strategy},
          {"capture_radius", f.spec.capture_radius},
          {"sim", sim_json(f.sim)}};
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string trace_csv(const SimulationTrace& trace) {
  std::string out = "t,ex,ey";
  const std::size_t p = trace.samples.empty() ? 0 : trace.samples.front().pursuers.size();
  for (std::size_t k = 1; k <= p; ++k) out += ",p" + std::to_string(k) + "x,p" + std::to_string(k) + "y";
  out += '\n';
  for (const GameState& s : trace.samples) {
    out += format_double(s.t);
    out += ',' + format_double(s.evader.x) + ',' + format_double(s.evader.y);
    for (Vec2 q : s.pursuers) out += ',' + format_double(q.x) + ',' + format_double(q.y);
    out += '\n';
  }
  return out;
}

json event_json(const Event& e) {
  json payload = {{"message", e.message}};
  if (e.decision) payload["decision"] = decision_json(*e.decision);
  if (!e.agents.empty()) payload["agents"] = ids_json(e.agents);
  if (e.point) payload["point"] = point_json(*e.point);
  return {{"t", e.t}, {"kind", to_string(e.kind)}, {"payload", payload}};
}

std::string events_jsonl(const std::vector<Event>& events) {
  std::string out;
  for (const Event& e : events) out += event_json(e).dump() + '\n';
  return out;
}

json outcome_json(const SimulationTrace& trace, const Scenario& scenario) {
  const Outcome& o = trace.outcome;
  json j = {{"outcome", to_string(o.kind)},
            {"t", o.t},
            {"t_capture", o.kind == OutcomeKind::Captured ? json(o.t) : json(nullptr)},
            {"by", ids_json(o.by)},
            {"point", o.point ? point_json(*o.point) : json(nullptr)},
            {"pursuer_strategy", scenario.pursuer_strategy},
            {"evader_strategy", scenario.evader_strategy},
            {"switched", trace.switched()}};
  const std::optional<Event> sw = trace.first_event(EventKind::Switch);
  j["switch"] = sw && sw->decision ? decision_json(*sw->decision) : json(nullptr);
  return j;
}

std::string records_csv(const std::vector<RhoRecord>& records) {
  auto opt = [](const std::optional<double>& v) { return v ? format_double(*v) : std::string(); };
  std::string out = "p,R_p,game_index,t_baseline,t_treatment,rho,switched,baseline_outcome,treatment_outcome\n";
  for (const RhoRecord& r : records) {
    out += std::to_string(r.p) + ',' + format_double(r.radius) + ',' + std::to_string(r.game_index) + ',' +
           opt(r.t_baseline) + ',' + opt(r.t_treatment) + ',' + opt(r.rho) + ',' + (r.switched ? "1" : "0") + ',' +
           to_string(r.baseline_outcome) + ',' + to_string(r.treatment_outcome) + '\n';
  }
  return out;
}

json summary_json(const CampaignResult& result, const CampaignSpec& spec, const SimConfig& sim) {
  json cells = json::array();
  for (const CellSummary& c : result.cells) {
    json rho = nullptr;
    if (c.rho) {
      rho = {{"min", c.rho->min},       {"q1", c.rho->q1},   {"median", c.rho->median},
             {"q3", c.rho->q3},         {"max", c.rho->max}, {"outliers", c.rho->outliers}};
    }
    cells.push_back({{"p", c.p},
                     {"R_p", c.radius},
                     {"n", c.n},
                     {"switched_frac", c.switched_frac},
                     {"baseline_captures", c.baseline_captures},
                     {"treatment_captures", c.treatment_captures},
                     {"rho", rho}});
  }
  json config = campaign_to_json({spec, sim});
  config.erase("base_seed");
  return {{"cells", cells}, {"config", config}, {"seed", spec.base_seed}};
}

json analysis_report(const Scenario& s) {
  json j;
  std::vector<AgentId> inside;
  for (std::size_t k = 0; k < s.pursuers.size(); ++k) {
    if (distance(s.pursuers[k], s.evader) <= s.capture_radius) inside.push_back(pursuer_id(k));
  }
  if (!inside.empty()) {
    j["status"] = "already captured";
    j["by"] = ids_json(inside);
    return j;
  }

  const GameOfKindVerdict verdict = in_region_M(s.evader, s.pursuers, s.capture_radius);
  j["verdict"] = verdict.capturable ? "capturable" : "escape";
  j["hull_distance"] = verdict.hull_distance;
  j["escape_direction"] = verdict.escape_direction ? point_json(*verdict.escape_direction) : json(nullptr);

  json pairs = json::array();
  for (const PairAssessment& a : assess_pairs(s.evader, s.pursuers, s.capture_radius)) {
    json hs = json::array();
    for (Vec2 h : a.solution.h_points) hs.push_back(point_json(h));
    json passing = json::array();
    for (Vec2 h : a.passing_h) passing.push_back(point_json(h));
    pairs.push_back({{"pair", {a.solution.pair.first.value, a.solution.pair.second.value}},
                     {"T", a.solution.t_capture},
                     {"h", hs},
                     {"switching_condition", passing}});
  }
  j["pairs"] = pairs;

  const std::optional<SwitchDecision> d = check_switch(s.evader, s.pursuers, s.capture_radius);
  j["switch"] = d ? decision_json(*d) : json(nullptr);
  j["covering_predicate"] = covering_predicate(s.pursuers, s.capture_radius);
  if (!verdict.capturable) {
    j["status"] = "escape";
  } else if (d) {
    j["status"] = "switch";
  } else {
    j["status"] = "capturable, no switch yet";
  }
  return j;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
}

}  // namespace pursuit::io
