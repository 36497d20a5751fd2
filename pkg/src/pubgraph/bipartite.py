"""Author/venue bipartite graph built from filtered publication records."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import UsageError
from .ingest import PublicationRecord, Roster, VenueKind

__all__ = ["BipartiteGraph", "BipartiteStats", "build_bipartite", "bipartite_stats"]


@dataclass(frozen=True)
class BipartiteGraph:
    """Authors on one side, venues on the other.

    An edge ``(author, venue)`` means the author published at least one
    paper in that venue; repeated papers collapse into one edge.
    ``venues`` maps each venue key to its kind.
    """

    authors: frozenset[str]
    venues: Mapping[str, VenueKind]
    edges: frozenset[tuple[str, str]]
    publication_count: int = 0

    def __post_init__(self):
        touched_a = {a for a, _ in self.edges}
        touched_v = {v for _, v in self.edges}
        if not touched_a <= self.authors or not touched_v <= set(self.venues):
            raise UsageError("bipartite edge endpoint missing from node sets")
        if touched_a != set(self.authors) or touched_v != set(self.venues):
            raise UsageError("every bipartite node needs at least one edge")

    def venue_authors(self) -> dict[str, frozenset[str]]:
        """Neighbourhood of each venue on the author side."""
        out: dict[str, set[str]] = {v: set() for v in self.venues}
        for a, v in self.edges:
            out[v].add(a)
        return {v: frozenset(s) for v, s in out.items()}


@dataclass(frozen=True)
class BipartiteStats:
    author_count: int
    venue_count: int
    publication_count: int


def _merge_kind(current: VenueKind | None, new: VenueKind) -> VenueKind:
    # Order-independent: a venue ever seen as a journal stays a journal.
    if current is None:
        return new
    return min(current, new, key=lambda k: k.value)


def build_bipartite(records: Iterable[PublicationRecord], roster: Roster) -> BipartiteGraph:
    """Connect every roster author to every venue they published in.

    Co-authors outside the roster produce no nodes. ``publication_count``
    is the number of records passed in.
    """
    members = roster.members
    edges = set()
    kinds: dict[str, VenueKind] = {}
    count = 0
    for record in records:
        count += 1
        for author in record.authors:
            if author in members:
                edges.add((author, record.venue))
                kinds[record.venue] = _merge_kind(kinds.get(record.venue), record.venue_kind)
    authors = frozenset(a for a, _ in edges)
    return BipartiteGraph(authors, dict(sorted(kinds.items())), frozenset(edges), count)


def bipartite_stats(g: BipartiteGraph) -> BipartiteStats:
    return BipartiteStats(len(g.authors), len(g.venues), g.publication_count)
