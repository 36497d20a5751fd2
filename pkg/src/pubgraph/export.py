"""DOT and JSON serialization of bipartite and venue graphs.

Output is byte-stable: nodes and edges are emitted in sorted order and JSON
keys are sorted, so identical graphs always produce identical files.
"""

from __future__ import annotations

import json
from pathlib import Path

from .bipartite import BipartiteGraph
from .errors import IoError, ParseError, UsageError
from .ingest import VenueKind
from .projection import VenueGraph

__all__ = ["to_dot", "to_json", "from_json", "export_graph"]


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _weight(count: int) -> str:
    return repr(1.0 / count)


def to_dot(g: VenueGraph | BipartiteGraph) -> str:
    if isinstance(g, BipartiteGraph):
        lines = ["graph bipartite {"]
        for a in sorted(g.authors):
            lines.append(f"  {_quote(a)} [kind=author];")
        for v, kind in sorted(g.venues.items()):
            lines.append(f"  {_quote(v)} [kind=venue, venue_kind={kind.value}];")
        for a, v in sorted(g.edges):
            lines.append(f"  {_quote(a)} -- {_quote(v)};")
    else:
        lines = ["graph venues {"]
        for n in sorted(g.nodes):
            kind = g.kinds.get(n)
            attr = f", venue_kind={kind.value}" if kind else ""
            lines.append(f"  {_quote(n)} [kind=venue{attr}];")
        for (u, v), count in g.shared_authors.items():
            lines.append(
                f"  {_quote(u)} -- {_quote(v)} [weight={_weight(count)}, label=\"{count}\"];"
            )
    lines.append("}")
    return "\n".join(lines) + "\n"


def _venue_node(n: str, kind: VenueKind | None) -> dict:
    node = {"id": n, "kind": "venue"}
    if kind is not None:
        node["venue_kind"] = kind.value
    return node


def to_json(g: VenueGraph | BipartiteGraph) -> str:
    if isinstance(g, BipartiteGraph):
        doc = {
            "graph": "bipartite",
            "publication_count": g.publication_count,
            "nodes": [{"id": a, "kind": "author"} for a in sorted(g.authors)]
            + [_venue_node(v, k) for v, k in sorted(g.venues.items())],
            "edges": [{"source": a, "target": v} for a, v in sorted(g.edges)],
        }
    else:
        doc = {
            "graph": "venue_projection",
            "nodes": [_venue_node(n, g.kinds.get(n)) for n in sorted(g.nodes)],
            "edges": [
                {"source": u, "target": v, "weight": 1.0 / c, "shared_authors": c}
                for (u, v), c in g.shared_authors.items()
            ],
        }
    return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def from_json(text: str) -> VenueGraph | BipartiteGraph:
    """Inverse of :func:`to_json`."""
    try:
        doc = json.loads(text)
        nodes = doc["nodes"]
        edges = doc["edges"]
        kind_of = {
            n["id"]: VenueKind(n["venue_kind"]) for n in nodes
            if n["kind"] == "venue" and "venue_kind" in n
        }
        if doc.get("graph") == "bipartite":
            authors = frozenset(n["id"] for n in nodes if n["kind"] == "author")
            venues = {n["id"]: kind_of.get(n["id"], VenueKind.JOURNAL)
                      for n in nodes if n["kind"] == "venue"}
            return BipartiteGraph(
                authors, dict(sorted(venues.items())),
                frozenset((e["source"], e["target"]) for e in edges),
                doc.get("publication_count", 0),
            )
        return VenueGraph(
            frozenset(n["id"] for n in nodes),
            {(e["source"], e["target"]): e["shared_authors"] for e in edges},
            kind_of,
        )
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, UsageError):
            raise
        raise ParseError(f"not a pubgraph JSON graph: {exc}") from None


def export_graph(g: VenueGraph | BipartiteGraph, format: str, path: str | Path | None = None) -> str:
    """Serialize ``g`` as ``dot`` or ``json``; write to ``path`` when given."""
    if format == "dot":
        text = to_dot(g)
    elif format == "json":
        text = to_json(g)
    else:
        raise UsageError(f"unknown graph format {format!r}")
    if path is not None:
        try:
            Path(path).write_text(text, encoding="utf-8")
        except OSError as exc:
            raise IoError(f"cannot write {path}: {exc.strerror or exc}") from None
    return text
