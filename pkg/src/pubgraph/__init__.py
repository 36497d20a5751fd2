"""Journal/proceeding graphs for comparing research groups' publication patterns.

Pipeline: parse records (:mod:`pubgraph.ingest`), build the author/venue
bipartite graph (:mod:`pubgraph.bipartite`), project it onto venues
(:mod:`pubgraph.projection`), then profile it (:mod:`pubgraph.centrality`)
or compare several groups (:mod:`pubgraph.compare`).
"""

from .bipartite import BipartiteGraph, BipartiteStats, bipartite_stats, build_bipartite
from .centrality import (
    CentralityReport,
    betweenness,
    centrality_report,
    closeness,
    degree,
    m_central_nodes,
)
from .compare import (
    ComparisonResult,
    avg_increasing_diameter,
    closeness_common_nodes,
    compare_all,
    ratio_common_interactions,
    ratio_common_nodes,
)
from .errors import DisconnectedGraph, InvalidName, IoError, ParseError, PubGraphError, UsageError
from .estimators import CentralityProfiler, GraphComparator, VenueGraphBuilder
from .export import export_graph, from_json, to_dot, to_json
from .ingest import (
    ParseWarning,
    PublicationRecord,
    Roster,
    TimeWindow,
    VenueKind,
    filter_records,
    normalize_name,
    parse_records,
)
from .projection import (
    GraphStats,
    UnionGraph,
    VenueGraph,
    graph_stats,
    largest_component,
    project,
    union_graph,
)

__version__ = "0.1.0"
