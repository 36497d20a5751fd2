"""Similarity and gap metrics between k venue graphs.

Similarity: share of common venues (``r_node``) and share of venue pairs
on which all graphs agree, either all linked or all unlinked
(``r_interaction``). Gap: mean hop distance from each venue of the union
graph to its nearest common venue (``c_common``) and the mean growth in
diameter when the graphs are merged (``delta_diameter``).

Every metric is a function of node and edge *sets* and is computed with
integer or rational arithmetic, so permuting the input graphs gives
bit-identical results.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import _paths
from .errors import DisconnectedGraph, UsageError
from .projection import UnionGraph, VenueGraph, union_graph

__all__ = [
    "ComparisonResult",
    "ratio_common_nodes",
    "ratio_common_interactions",
    "closeness_common_nodes",
    "common_closeness_detail",
    "avg_increasing_diameter",
    "compare_all",
]


def _check_k(graphs, op):
    if len(graphs) < 2:
        raise UsageError(f"{op} needs at least two graphs, got {len(graphs)}")


def _check_nonempty(graphs, op):
    if any(not g.nodes for g in graphs):
        raise UsageError(f"{op} got an empty graph")


def ratio_common_nodes(graphs: Sequence[VenueGraph]) -> float:
    _check_k(graphs, "ratio_common_nodes")
    _check_nonempty(graphs, "ratio_common_nodes")
    u = union_graph(graphs)
    return float(Fraction(len(u.common_nodes), len(u.nodes)))


def _interaction_ratio(graphs: Sequence[VenueGraph]) -> Fraction:
    # Pairs linked in every graph plus pairs linked in none, over all pairs of
    # the union node set. A pair missing from some graph's node set counts as
    # an absent edge there.
    n = len(frozenset().union(*(g.nodes for g in graphs)))
    if n < 2:
        raise UsageError("r_interaction needs at least two nodes in the union")
    edge_sets = [g.edges for g in graphs]
    in_all = len(frozenset.intersection(*edge_sets))
    in_any = len(frozenset().union(*edge_sets))
    pairs = n * (n - 1) // 2
    return Fraction(in_all + pairs - in_any, pairs)


def ratio_common_interactions(graphs: Sequence[VenueGraph]) -> float:
    _check_k(graphs, "ratio_common_interactions")
    return float(_interaction_ratio(graphs))


def common_closeness_detail(union: UnionGraph) -> tuple[float, int]:
    """``(c_common, excluded)`` evaluated on the union's largest component.

    ``excluded`` counts union nodes outside that component. Returns
    infinity when no common node lies in the evaluated component.
    """
    if not union.common_nodes:
        return math.inf, 0
    adj = union.adjacency()
    comp = _paths.connected_components(adj)[0]
    excluded = len(union.nodes) - len(comp)
    sources = union.common_nodes & comp
    if not sources:
        return math.inf, excluded
    dist = _paths.bfs_hops(_paths.induced(adj, comp), sources)
    return float(Fraction(sum(dist.values()), len(comp))), excluded


def closeness_common_nodes(graphs: Sequence[VenueGraph]) -> float:
    _check_k(graphs, "closeness_common_nodes")
    return common_closeness_detail(union_graph(graphs))[0]


def _hop_diameter(adj) -> int:
    return _paths.hop_profile(adj)[2]


def _diameters(graphs: Sequence[VenueGraph], union: UnionGraph) -> tuple[list[int], int]:
    per_graph = []
    for g in graphs:
        adj = g.adjacency(weighted=False)
        if not _paths.is_connected(adj):
            raise DisconnectedGraph("diameter comparison needs connected input graphs")
        per_graph.append(_hop_diameter(adj))
    adj = union.adjacency()
    comp = _paths.connected_components(adj)[0]
    return per_graph, _hop_diameter(_paths.induced(adj, comp))


def avg_increasing_diameter(graphs: Sequence[VenueGraph]) -> float:
    _check_k(graphs, "avg_increasing_diameter")
    _check_nonempty(graphs, "avg_increasing_diameter")
    per_graph, union_d = _diameters(graphs, union_graph(graphs))
    return float(Fraction(sum(union_d - d for d in per_graph), len(graphs)))


@dataclass(frozen=True)
class ComparisonResult:
    labels: tuple[str, ...]
    common_nodes: tuple[str, ...]
    r_node: float
    r_interaction: float
    c_common: float
    delta_diameter: float
    diameters: tuple[int, ...]
    union_diameter: int
    excluded_nodes: int = 0

    @property
    def k(self) -> int:
        return len(self.labels)

    def to_dict(self) -> dict:
        return {
            "labels": list(self.labels),
            "k": self.k,
            "common_nodes": list(self.common_nodes),
            "r_node": self.r_node,
            "r_interaction": self.r_interaction,
            "c_common": self.c_common,
            "c_common_excluded_nodes": self.excluded_nodes,
            "delta_diameter": self.delta_diameter,
            "diameters": list(self.diameters),
            "union_diameter": self.union_diameter,
        }


def compare_all(graphs: Sequence[VenueGraph], labels: Sequence[str] | None = None) -> ComparisonResult:
    """All four metrics in one pass over a shared union graph."""
    graphs = list(graphs)
    _check_k(graphs, "compare_all")
    _check_nonempty(graphs, "compare_all")
    if labels is None:
        labels = [f"G{i + 1}" for i in range(len(graphs))]
    if len(labels) != len(graphs):
        raise UsageError("one label per graph is required")
    union = union_graph(graphs)
    c_common, excluded = common_closeness_detail(union)
    per_graph, union_d = _diameters(graphs, union)
    return ComparisonResult(
        labels=tuple(labels),
        common_nodes=tuple(sorted(union.common_nodes)),
        r_node=float(Fraction(len(union.common_nodes), len(union.nodes))),
        r_interaction=float(_interaction_ratio(graphs)),
        c_common=c_common,
        delta_diameter=float(Fraction(sum(union_d - d for d in per_graph), len(graphs))),
        diameters=tuple(per_graph),
        union_diameter=union_d,
        excluded_nodes=excluded,
    )
