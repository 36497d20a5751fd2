"""Argument checks shared by the estimator classes."""

from __future__ import annotations

from typing import Iterable

from .errors import UsageError
from .ingest import PublicationRecord, Roster, TimeWindow
from .projection import VenueGraph


def check_records(X) -> list[PublicationRecord]:
    if isinstance(X, (str, bytes)) or not isinstance(X, Iterable):
        raise UsageError(f"expected an iterable of PublicationRecord, got {type(X).__name__}")
    records = list(X)
    for i, r in enumerate(records):
        if not isinstance(r, PublicationRecord):
            raise UsageError(f"item {i} is {type(r).__name__}, not PublicationRecord")
    return records


def check_roster(roster, name: str = "roster") -> Roster:
    if isinstance(roster, Roster):
        return roster
    if roster is None:
        raise UsageError("a roster is required")
    if isinstance(roster, str):
        raise UsageError("roster must be a Roster or an iterable of names, not a string")
    return Roster.from_names(name, roster)


def check_window(window) -> TimeWindow | None:
    if window is None or isinstance(window, TimeWindow):
        return window
    if isinstance(window, str):
        return TimeWindow.parse(window)
    if isinstance(window, int):
        return TimeWindow(window, window)
    try:
        start, end = window
    except (TypeError, ValueError):
        raise UsageError(f"cannot interpret {window!r} as a time window") from None
    return TimeWindow(int(start), int(end))


def check_graph(g) -> VenueGraph:
    if not isinstance(g, VenueGraph):
        raise UsageError(f"expected a VenueGraph, got {type(g).__name__}")
    return g


def check_graphs(graphs, min_k: int = 2) -> list[VenueGraph]:
    if isinstance(graphs, VenueGraph):
        raise UsageError("expected a sequence of VenueGraph, got a single graph")
    graphs = [check_graph(g) for g in graphs]
    if len(graphs) < min_k:
        raise UsageError(f"need at least {min_k} graphs, got {len(graphs)}")
    return graphs
