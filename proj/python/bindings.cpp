// Thin bindings. Points cross the boundary as (x, y) tuples; scenarios,
// campaigns and reports cross as JSON text and are decoded in Python.

#include <array>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pursuit/campaign.hpp"
#include "pursuit/io.hpp"
#include "pursuit/svg.hpp"

namespace py = pybind11;
using namespace pursuit;

namespace {

using Point = std::array<double, 2>;

Vec2 vec(const Point& p) { return {p[0], p[1]}; }
Point point(Vec2 v) { return {v.x, v.y}; }

std::vector<Vec2> vecs(const std::vector<Point>& ps) {
  std::vector<Vec2> out;
  out.reserve(ps.size());
  for (const Point& p : ps) out.push_back(vec(p));
  return out;
}

py::dict solution_dict(const TwoPursuerSolution& s) {
  py::list hs;
  for (Vec2 h : s.h_points) hs.append(py::make_tuple(h.x, h.y));
  py::dict d;
  d["t_capture"] = s.t_capture;
  d["h_points"] = hs;
  d["kappa"] = s.kappa;
  return d;
}

void apply_sim(SimConfig& c, std::optional<double> dt, std::optional<double> t_max) {
  if (dt) c.dt = *dt;
  if (t_max) c.t_max = *t_max;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Multi-pursuer single-evader pursuit games";

  py::register_exception<io::FormatError>(m, "FormatError", PyExc_ValueError);

  m.def("solve_2p1e", [](Point e, Point p1, Point p2, double r) {
    return solution_dict(solve_2p1e(vec(e), vec(p1), vec(p2), r));
  }, py::arg("e"), py::arg("p1"), py::arg("p2"), py::arg("r"));

  m.def("solve_2p1e_numeric", [](Point e, Point p1, Point p2, double r) {
    return solution_dict(solve_2p1e_numeric(vec(e), vec(p1), vec(p2), r));
  }, py::arg("e"), py::arg("p1"), py::arg("p2"), py::arg("r"));

  m.def("in_region_M", [](Point e, const std::vector<Point>& ps, double r) {
    const GameOfKindVerdict v = in_region_M(vec(e), vecs(ps), r);
    py::dict d;
    d["capturable"] = v.capturable;
    d["hull_distance"] = v.hull_distance;
    d["escape_direction"] = v.escape_direction ? py::object(py::make_tuple(v.escape_direction->x, v.escape_direction->y))
                                               : py::object(py::none());
    return d;
  }, py::arg("e"), py::arg("pursuers"), py::arg("r"));

  m.def("check_switch", [](Point e, const std::vector<Point>& ps, double r) -> py::object {
    const auto s = check_switch(vec(e), vecs(ps), r);
    if (!s) return py::none();
    py::dict d;
    d["pair"] = py::make_tuple(s->pair.first.value, s->pair.second.value);
    d["h"] = point(s->h);
    d["t_capture"] = s->t_capture;
    return d;
  }, py::arg("e"), py::arg("pursuers"), py::arg("r"));

  m.def("covering_predicate", [](const std::vector<Point>& ps, double r) { return covering_predicate(vecs(ps), r); },
        py::arg("pursuers"), py::arg("r"));

  m.def("square_preset", [](const std::string& strategy) {
    io::ScenarioFile f;
    f.scenario = square_preset(strategy);
    return io::emit_scenario(f);
  }, py::arg("strategy") = "s-vs");

  m.def("run_game", [](const std::string& scenario_json, std::optional<double> dt, std::optional<double> t_max,
                       bool plot) {
    io::ScenarioFile f = io::parse_scenario(scenario_json);
    apply_sim(f.sim, dt, t_max);
    f.scenario.validate();
    SimulationTrace trace;
    {
      py::gil_scoped_release release;
      trace = run_game(f.scenario, f.sim);
    }
    return std::make_tuple(io::outcome_json(trace, f.scenario).dump(), io::trace_csv(trace),
                           io::events_jsonl(trace.events), plot ? render_svg(trace) : std::string());
  }, py::arg("scenario_json"), py::arg("dt") = py::none(), py::arg("t_max") = py::none(), py::arg("plot") = false);

  m.def("run_campaign", [](const std::string& campaign_json, unsigned jobs, std::optional<double> dt,
                           std::optional<double> t_max) {
    io::CampaignFile f = io::parse_campaign(campaign_json);
    apply_sim(f.sim, dt, t_max);
    CampaignResult result;
    {
      py::gil_scoped_release release;
      result = run_rho_campaign(f.spec, f.sim, jobs);
    }
    return std::make_tuple(io::records_csv(result.records), io::summary_json(result, f.spec, f.sim).dump());
  }, py::arg("campaign_json"), py::arg("jobs") = 1, py::arg("dt") = py::none(), py::arg("t_max") = py::none());

  m.def("disk_campaign", [](int games, std::uint64_t seed) {
    io::CampaignFile f;
    f.spec = disk_campaign_spec(games, seed);
    return io::campaign_to_json(f).dump();
  }, py::arg("games_per_cell") = 100, py::arg("seed") = 0);

  m.def("analyze", [](const std::string& state_json) {
    return io::analysis_report(io::parse_scenario(state_json).scenario).dump();
  }, py::arg("state_json"));
}
