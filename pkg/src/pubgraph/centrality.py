"""Degree, closeness and betweenness of venue graphs.

Closeness and betweenness read projection weights as path lengths (a
heavily shared pair of venues is "near"). Pass ``weighted=False`` to treat
every edge as length 1. Betweenness is accumulated per source with the
dependency recursion of Brandes (2001), on Dijkstra orderings, and counts
ordered pairs ``(s, t)`` without halving.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from . import _paths
from .errors import DisconnectedGraph, UsageError
from .projection import VenueGraph

__all__ = [
    "METRICS",
    "NodeCentrality",
    "CentralityReport",
    "degree",
    "closeness",
    "betweenness",
    "centrality_report",
    "m_central_nodes",
    "above_mean",
]

METRICS = ("degree", "closeness", "betweenness")


def degree(g: VenueGraph) -> dict[str, int]:
    return {n: len(nbrs) for n, nbrs in g.adjacency(weighted=False).items()}


def _require_connected(adj, what):
    if not _paths.is_connected(adj):
        raise DisconnectedGraph(f"{what} needs a connected graph; take largest_component first")


def closeness(g: VenueGraph, weighted: bool = True) -> dict[str, float]:
    """``1 / sum of shortest-path distances`` to every other node.

    A single-node graph gets closeness 0.
    """
    adj = g.adjacency(weighted)
    _require_connected(adj, "closeness")
    if len(adj) == 1:
        return {n: 0.0 for n in adj}
    out = {}
    for s in adj:
        _, dist, _, _ = _paths.dijkstra(adj, s)
        out[s] = 1.0 / math.fsum(dist[t] for t in sorted(dist))
    return out


def betweenness(g: VenueGraph, weighted: bool = True) -> dict[str, float]:
    adj = g.adjacency(weighted)
    _require_connected(adj, "betweenness")
    bc = {n: 0.0 for n in adj}
    for s in adj:
        order, _, sigma, preds = _paths.dijkstra(adj, s)
        delta = {n: 0.0 for n in order}
        for w in reversed(order):
            coeff = (1.0 + delta[w]) / sigma[w]
            for v in preds[w]:
                delta[v] += sigma[v] * coeff
            if w != s:
                bc[w] += delta[w]
    return bc


@dataclass(frozen=True)
class NodeCentrality:
    degree: int
    closeness: float
    betweenness: float


def above_mean(values: Mapping[str, float]) -> frozenset[str]:
    """Nodes whose value strictly exceeds the mean, compared exactly."""
    if not values:
        return frozenset()
    exact = {n: Fraction(v) for n, v in values.items()}
    mean = sum(exact.values()) / len(exact)
    return frozenset(n for n, v in exact.items() if v > mean)


@dataclass(frozen=True)
class CentralityReport:
    nodes: Mapping[str, NodeCentrality]
    averages: Mapping[str, float]
    central: Mapping[str, frozenset[str]]
    weighted: bool = True

    def values(self, metric: str) -> dict[str, float]:
        _check_metric(metric)
        return {n: getattr(c, metric) for n, c in self.nodes.items()}


def _check_metric(metric):
    if metric not in METRICS:
        raise UsageError(f"unknown metric {metric!r}; choose from {', '.join(METRICS)}")


def centrality_report(g: VenueGraph, weighted: bool = True) -> CentralityReport:
    """All three metrics, their means and the m-central node sets."""
    per_metric = {
        "degree": degree(g),
        "closeness": closeness(g, weighted),
        "betweenness": betweenness(g, weighted),
    }
    nodes = {
        n: NodeCentrality(per_metric["degree"][n], per_metric["closeness"][n],
                          per_metric["betweenness"][n])
        for n in sorted(g.nodes)
    }
    averages = {
        m: (math.fsum(vals.values()) / len(vals) if vals else 0.0)
        for m, vals in per_metric.items()
    }
    central = {m: above_mean(vals) for m, vals in per_metric.items()}
    return CentralityReport(nodes, averages, central, weighted)


def m_central_nodes(report: CentralityReport, metric: str) -> frozenset[str]:
    _check_metric(metric)
    return report.central[metric]
