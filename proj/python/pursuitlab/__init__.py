"""Multi-pursuer single-evader pursuit games on the plane."""

import csv
import io
import json
from dataclasses import dataclass, field

from . import _core
from ._core import (
    FormatError,
    check_switch,
    covering_predicate,
    in_region_M,
    solve_2p1e,
    solve_2p1e_numeric,
)

__all__ = [
    "FormatError",
    "GameResult",
    "analyze",
    "check_switch",
    "covering_predicate",
    "disk_campaign",
    "in_region_M",
    "run_campaign",
    "run_game",
    "solve_2p1e",
    "solve_2p1e_numeric",
    "square_preset",
]


def _text(doc):
    return doc if isinstance(doc, str) else json.dumps(doc)


@dataclass
class GameResult:
    outcome: dict
    trace_csv: str
    events: list = field(default_factory=list)
    svg: str = ""

    def trace(self):
        """Trace rows as dicts of floats keyed by the CSV header."""
        return [{k: float(v) for k, v in row.items()} for row in csv.DictReader(io.StringIO(self.trace_csv))]


def square_preset(strategy="s-vs"):
    return json.loads(_core.square_preset(strategy))


def disk_campaign(games_per_cell=100, seed=0):
    return json.loads(_core.disk_campaign(games_per_cell, seed))


def run_game(scenario, dt=None, t_max=None, plot=False):
    outcome, trace, events, svg = _core.run_game(_text(scenario), dt, t_max, plot)
    return GameResult(json.loads(outcome), trace, [json.loads(line) for line in events.splitlines()], svg)


def run_campaign(spec, jobs=1, dt=None, t_max=None):
    """Returns (records as a list of dicts, summary dict)."""
    records, summary = _core.run_campaign(_text(spec), jobs, dt, t_max)
    return list(csv.DictReader(io.StringIO(records))), json.loads(summary)


def analyze(state):
    return json.loads(_core.analyze(_text(state)))
