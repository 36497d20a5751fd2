"""scikit-learn compatible wrappers around the graph pipeline.

The estimators follow the usual conventions (constructor arguments are
hyper-parameters only, ``fit`` returns ``self``, learned state ends with an
underscore) so they work with ``clone``, ``get_params`` and ``Pipeline``::

    from sklearn.pipeline import make_pipeline
    pipe = make_pipeline(VenueGraphBuilder(roster=names, window="2008:2008"),
                         CentralityProfiler())
    pipe.fit(records)
    pipe[-1].central_nodes_["degree"]
"""

from __future__ import annotations

from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from ._validation import check_graph, check_graphs, check_records, check_roster, check_window
from .bipartite import bipartite_stats, build_bipartite
from .centrality import METRICS, CentralityReport, centrality_report
from .compare import ComparisonResult, compare_all
from .errors import DisconnectedGraph
from .ingest import apply_aliases, filter_records
from .projection import VenueGraph, graph_stats, largest_component, project

__all__ = ["VenueGraphBuilder", "CentralityProfiler", "GraphComparator"]


class VenueGraphBuilder(TransformerMixin, BaseEstimator):
    """Turn a record corpus into a group's venue graph.

    Parameters
    ----------
    roster : Roster or iterable of str
        Researchers whose venues make up the graph.
    window : TimeWindow, "START:END", int, (start, end) or None
        Years to keep; ``None`` keeps all.
    largest_component : bool, default=True
        Keep only the largest connected component of the projection.
    aliases : dict or None
        Venue alias map applied before graph construction.

    Attributes
    ----------
    bipartite_ : BipartiteGraph
    projection_ : VenueGraph
        Full projection, before component filtering.
    graph_ : VenueGraph
    bipartite_stats_ : BipartiteStats
    graph_stats_ : GraphStats or None
        ``None`` when ``graph_`` is disconnected.
    """

    def __init__(self, roster=None, window=None, largest_component=True, aliases=None):
        self.roster = roster
        self.window = window
        self.largest_component = largest_component
        self.aliases = aliases

    def _build(self, X):
        records = check_records(X)
        roster = check_roster(self.roster)
        if self.aliases:
            records = apply_aliases(records, self.aliases)
        kept = filter_records(records, roster, check_window(self.window))
        bipartite = build_bipartite(kept, roster)
        projection = project(bipartite)
        graph = largest_component(projection) if self.largest_component else projection
        return bipartite, projection, graph

    def fit(self, X, y=None):
        self.bipartite_, self.projection_, self.graph_ = self._build(X)
        self.bipartite_stats_ = bipartite_stats(self.bipartite_)
        try:
            self.graph_stats_ = graph_stats(self.graph_)
        except DisconnectedGraph:
            self.graph_stats_ = None
        return self

    def transform(self, X) -> VenueGraph:
        check_is_fitted(self, "graph_")
        return self._build(X)[2]

    def fit_transform(self, X, y=None, **fit_params) -> VenueGraph:
        return self.fit(X, y).graph_


class CentralityProfiler(TransformerMixin, BaseEstimator):
    """Degree/closeness/betweenness profile and m-central sets of a graph.

    Attributes
    ----------
    report_ : CentralityReport
    degree_, closeness_, betweenness_ : dict
    central_nodes_ : dict of str -> list of str
        Sorted m-central venues per metric.
    """

    def __init__(self, weighted=True):
        self.weighted = weighted

    def fit(self, X, y=None):
        self.report_ = centrality_report(check_graph(X), weighted=self.weighted)
        for metric in METRICS:
            setattr(self, f"{metric}_", self.report_.values(metric))
        self.central_nodes_ = {m: sorted(self.report_.central[m]) for m in METRICS}
        return self

    def transform(self, X) -> CentralityReport:
        check_is_fitted(self, "report_")
        return centrality_report(check_graph(X), weighted=self.weighted)

    def fit_transform(self, X, y=None, **fit_params) -> CentralityReport:
        return self.fit(X).report_


class GraphComparator(BaseEstimator):
    """Similarity/gap metrics for two or more venue graphs.

    ``fit(graphs, labels)`` stores the :class:`ComparisonResult` as
    ``result_`` and mirrors its headline numbers as ``r_node_``,
    ``r_interaction_``, ``c_common_`` and ``delta_diameter_``.
    """

    def fit(self, X, y=None):
        graphs = check_graphs(X, min_k=2)
        self.result_ = compare_all(graphs, y)
        self.r_node_ = self.result_.r_node
        self.r_interaction_ = self.result_.r_interaction
        self.c_common_ = self.result_.c_common
        self.delta_diameter_ = self.result_.delta_diameter
        self.common_nodes_ = list(self.result_.common_nodes)
        return self

    def transform(self, X, y=None) -> ComparisonResult:
        check_is_fitted(self, "result_")
        return compare_all(check_graphs(X, min_k=2), y)
