from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from builders import rec  # noqa: E402
from pubgraph import Roster, VenueGraph, build_bipartite, project  # noqa: E402

DATA = Path(__file__).parent / "data"


@pytest.fixture
def data_dir():
    return DATA


@pytest.fixture
def golden_records():
    # a1 publishes in j1, j2, j3; a2 in j2, j3, j4.
    return [rec(["a1"], j) for j in ("j1", "j2", "j3")] + [rec(["a2"], j) for j in ("j2", "j3", "j4")]


@pytest.fixture
def golden_roster():
    return Roster("golden", frozenset({"a1", "a2"}))


@pytest.fixture
def golden_graph(golden_records, golden_roster) -> VenueGraph:
    return project(build_bipartite(golden_records, golden_roster))


# One PASS/FAIL line per acceptance criterion in the terminal summary.
_acceptance: list[tuple[str, str]] = []


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        name = report.nodeid.split("::")[-1]
        _acceptance.append((name, "PASS" if report.outcome == "passed" else "FAIL"))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        terminalreporter.write_line(f"{outcome}  {name}")
