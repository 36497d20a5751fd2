"""Venue-side one-mode projection of the bipartite graph, plus union graphs.

Two venues are linked when at least one roster author published in both.
The link's weight is ``1 / shared_authors``, so venues that share many
authors sit close together when weights are read as path lengths.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Mapping, Sequence

from . import _paths
from .bipartite import BipartiteGraph
from .errors import DisconnectedGraph, UsageError
from .ingest import VenueKind

__all__ = [
    "VenueGraph",
    "UnionGraph",
    "GraphStats",
    "edge_key",
    "project",
    "largest_component",
    "union_graph",
    "graph_stats",
]


def edge_key(u: str, v: str) -> tuple[str, str]:
    """Canonical (sorted) key for the undirected edge ``{u, v}``."""
    return (u, v) if u <= v else (v, u)


@dataclass(frozen=True)
class VenueGraph:
    """Weighted undirected venue graph.

    ``shared_authors`` maps sorted node pairs to the number of roster
    authors the two venues have in common; weights are derived from it.
    ``kinds`` is optional display metadata (journal vs proceedings).
    """

    nodes: frozenset[str]
    shared_authors: Mapping[tuple[str, str], int]
    kinds: Mapping[str, VenueKind] = field(default_factory=dict, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "nodes", frozenset(self.nodes))
        normalized = {}
        for (u, v), count in self.shared_authors.items():
            if u == v:
                raise UsageError(f"self-loop on {u!r}")
            if u not in self.nodes or v not in self.nodes:
                raise UsageError(f"edge ({u!r}, {v!r}) has an endpoint outside the graph")
            if isinstance(count, bool) or not isinstance(count, int) or count < 1:
                raise UsageError(f"shared author count must be a positive integer, got {count!r}")
            normalized[edge_key(u, v)] = count
        object.__setattr__(self, "shared_authors", dict(sorted(normalized.items())))

    @classmethod
    def from_weights(cls, nodes, weights: Mapping[tuple[str, str], float]) -> "VenueGraph":
        """Build from ``1/k`` edge weights; each weight must be a unit fraction."""
        counts = {}
        for pair, w in weights.items():
            inv = Fraction(w).limit_denominator(1 << 20)
            if inv.numerator != 1 or abs(float(inv) - w) > 1e-12:
                raise UsageError(f"weight {w!r} is not of the form 1/k")
            counts[pair] = inv.denominator
        return cls(frozenset(nodes), counts)

    @property
    def edges(self) -> frozenset[tuple[str, str]]:
        return frozenset(self.shared_authors)

    def weight(self, u: str, v: str) -> Fraction:
        return Fraction(1, self.shared_authors[edge_key(u, v)])

    def weights(self) -> dict[tuple[str, str], Fraction]:
        return {e: Fraction(1, c) for e, c in self.shared_authors.items()}

    def adjacency(self, weighted: bool = True) -> dict[str, dict[str, float]]:
        adj: dict[str, dict[str, float]] = {n: {} for n in sorted(self.nodes)}
        for (u, v), count in self.shared_authors.items():
            length = 1.0 / count if weighted else 1.0
            adj[u][v] = length
            adj[v][u] = length
        return adj

    def subgraph(self, keep) -> "VenueGraph":
        keep = frozenset(keep) & self.nodes
        return VenueGraph(
            keep,
            {e: c for e, c in self.shared_authors.items() if e[0] in keep and e[1] in keep},
            {n: k for n, k in self.kinds.items() if n in keep},
        )

    def __len__(self) -> int:
        return len(self.nodes)


@dataclass(frozen=True)
class UnionGraph:
    """Union of several venue graphs; weights are dropped."""

    nodes: frozenset[str]
    edges: frozenset[tuple[str, str]]
    common_nodes: frozenset[str]

    def adjacency(self) -> dict[str, dict[str, float]]:
        return _paths.adjacency_from_edges(self.nodes, self.edges)


@dataclass(frozen=True)
class GraphStats:
    node_count: int
    edge_count: int
    average_distance: float
    diameter: int


def project(g: BipartiteGraph) -> VenueGraph:
    """Venue projection of ``g``; venues with no shared author stay isolated."""
    neighbourhoods = g.venue_authors()
    shared = {}
    for u, v in combinations(sorted(neighbourhoods), 2):
        common = len(neighbourhoods[u] & neighbourhoods[v])
        if common:
            shared[(u, v)] = common
    return VenueGraph(frozenset(g.venues), shared, dict(g.venues))


def largest_component(g: VenueGraph) -> VenueGraph:
    """Induced subgraph on the largest connected component.

    Ties go to the component holding the lexicographically smallest venue.
    """
    if not g.nodes:
        return g
    comps = _paths.connected_components(g.adjacency(weighted=False))
    return g.subgraph(comps[0])


def union_graph(graphs: Sequence[VenueGraph]) -> UnionGraph:
    if not graphs:
        raise UsageError("union_graph needs at least one graph")
    nodes = frozenset().union(*(g.nodes for g in graphs))
    edges = frozenset().union(*(g.edges for g in graphs))
    common = frozenset.intersection(*(g.nodes for g in graphs))
    return UnionGraph(nodes, edges, common)


def graph_stats(g: VenueGraph) -> GraphStats:
    """Node/edge counts, mean hop distance over unordered pairs, hop diameter."""
    adj = g.adjacency(weighted=False)
    if not _paths.is_connected(adj):
        raise DisconnectedGraph("graph_stats needs a connected graph; take largest_component first")
    pairs, total, diameter = _paths.hop_profile(adj)
    average = float(Fraction(total, pairs)) if pairs else 0.0
    return GraphStats(len(g.nodes), len(g.shared_authors), average, diameter)
