"""Command-line front end: ``pubgraph {stats,centrality,compare,export}``.

Every subcommand reads one or more record files (pooled into one corpus),
one roster per research group, and zero or more ``--window START:END``
options. Without ``--window`` a single window spanning the corpus is used.
"""

from __future__ import annotations

import argparse
import logging
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

from .bipartite import bipartite_stats, build_bipartite
from .centrality import METRICS, centrality_report
from .compare import compare_all
from .errors import DisconnectedGraph, IoError, PubGraphError, UsageError
from .export import export_graph
from .ingest import (
    PublicationRecord,
    Roster,
    TimeWindow,
    apply_aliases,
    filter_records,
    parse_alias_map,
    parse_records,
    parse_roster,
)
from .projection import graph_stats, largest_component, project
from .report import render, to_json

log = logging.getLogger("pubgraph")

STATS_COLUMNS = (
    "group", "window", "authors", "venues", "publications",
    "nodes", "edges", "average_distance", "diameter",
)
CENTRALITY_COLUMNS = ("group", "window", "venue", *METRICS, *(f"{m}_central" for m in METRICS))
COMPARE_COLUMNS = (
    "window", "groups", "common_nodes", "r_node", "r_interaction",
    "c_common", "c_common_excluded", "delta_diameter",
)


@dataclass
class RunConfig:
    subcommand: str
    records: list[Path]
    rosters: list[Path]
    alias_map: Path | None = None
    windows: list[TimeWindow] = field(default_factory=list)
    labels: list[str] | None = None
    format: str = "canonical"
    unweighted: bool = False
    skip_component_filter: bool = False
    output_format: str = "table"
    output: Path | None = None
    graph: str = "projection"


def _read_bytes(path: Path) -> bytes:
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        raise IoError(f"cannot read {path}: {exc.strerror or exc}") from None


@dataclass
class _Inputs:
    records: list[PublicationRecord]
    groups: list[tuple[str, Roster]]
    windows: list[TimeWindow | None]


def _load(config: RunConfig) -> _Inputs:
    if not config.records:
        raise UsageError("at least one --records file is required")
    if not config.rosters:
        raise UsageError("at least one --roster file is required")
    labels = config.labels or [Path(p).stem for p in config.rosters]
    if len(labels) != len(config.rosters):
        raise UsageError("give exactly one --label per --roster")
    if len(set(labels)) != len(labels):
        raise UsageError(f"duplicate group labels: {', '.join(labels)}")

    records: list[PublicationRecord] = []
    for path in config.records:
        parsed, warnings = parse_records(_read_bytes(path), config.format)
        for w in warnings:
            log.warning("%s: %s", path, w)
        records.extend(parsed)
    if config.alias_map is not None:
        records = apply_aliases(records, parse_alias_map(_read_bytes(config.alias_map)))

    groups = [
        (label, parse_roster(_read_bytes(path), label))
        for label, path in zip(labels, config.rosters)
    ]
    windows: list[TimeWindow | None] = list(config.windows) or [None]
    return _Inputs(records, groups, windows)


def _window_label(window: TimeWindow | None) -> str:
    return "all" if window is None else str(window)


def _graphs(inputs: _Inputs, roster: Roster, window, config: RunConfig):
    kept = filter_records(inputs.records, roster, window)
    bipartite = build_bipartite(kept, roster)
    projection = project(bipartite)
    graph = projection if config.skip_component_filter else largest_component(projection)
    return bipartite, graph


def _write(text: str, config: RunConfig) -> str:
    if config.output is not None:
        try:
            Path(config.output).write_text(text, encoding="utf-8")
        except OSError as exc:
            raise IoError(f"cannot write {config.output}: {exc.strerror or exc}") from None
    return text


def cmd_stats(config: RunConfig) -> str:
    """Publication summary and projected-graph properties per group and window."""
    inputs = _load(config)
    rows = []
    for window in inputs.windows:
        for label, roster in inputs.groups:
            bipartite, graph = _graphs(inputs, roster, window, config)
            b = bipartite_stats(bipartite)
            row = {
                "group": label, "window": _window_label(window),
                "authors": b.author_count, "venues": b.venue_count,
                "publications": b.publication_count,
                "nodes": len(graph.nodes), "edges": len(graph.shared_authors),
                "average_distance": 0.0, "diameter": 0,
            }
            if not graph.nodes:
                log.warning("group %s, window %s: no matching publications",
                            label, _window_label(window))
            try:
                s = graph_stats(graph)
                row["average_distance"], row["diameter"] = s.average_distance, s.diameter
            except DisconnectedGraph:
                log.warning("group %s, window %s: projection is disconnected; "
                            "distance columns left empty", label, _window_label(window))
                row["average_distance"] = row["diameter"] = None
            rows.append(row)
    return _write(render(rows, STATS_COLUMNS, config.output_format), config)


def cmd_centrality(config: RunConfig) -> str:
    """Per-venue degree/closeness/betweenness with m-central membership."""
    inputs = _load(config)
    rows = []
    listings = []
    for window in inputs.windows:
        for label, roster in inputs.groups:
            _, graph = _graphs(inputs, roster, window, config)
            wl = _window_label(window)
            if not graph.nodes:
                log.warning("group %s, window %s: no matching publications", label, wl)
                continue
            report = centrality_report(graph, weighted=not config.unweighted)
            for venue, c in report.nodes.items():
                row = {"group": label, "window": wl, "venue": venue,
                       "degree": c.degree, "closeness": c.closeness,
                       "betweenness": c.betweenness}
                for m in METRICS:
                    row[f"{m}_central"] = venue in report.central[m]
                rows.append(row)
            for m in METRICS:
                listings.append({"group": label, "window": wl, "metric": m,
                                 "nodes": sorted(report.central[m])})

    if config.output_format == "json":
        text = to_json({"rows": [{c: r[c] for c in CENTRALITY_COLUMNS} for r in rows],
                        "central": listings})
    else:
        text = render(rows, CENTRALITY_COLUMNS, config.output_format)
        prefix = "# " if config.output_format == "tsv" else ""
        text += "\n" if config.output_format == "table" else ""
        text += "".join(
            f"{prefix}{e['group']} {e['window']} {e['metric']}-central: {', '.join(e['nodes'])}\n"
            for e in listings
        )
    return _write(text, config)


def cmd_compare(config: RunConfig) -> str:
    """One row of similarity/gap metrics per window across all groups."""
    inputs = _load(config)
    if len(inputs.groups) < 2:
        raise UsageError("compare needs at least two --roster groups")
    labels = [label for label, _ in inputs.groups]
    rows = []
    for window in inputs.windows:
        wl = _window_label(window)
        graphs = [_graphs(inputs, roster, window, config)[1] for _, roster in inputs.groups]
        row = {"window": wl, "groups": " vs ".join(labels)}
        empty = [label for label, g in zip(labels, graphs) if not g.nodes]
        if empty:
            log.warning("window %s: no publications for %s; metrics left empty",
                        wl, ", ".join(empty))
            rows.append(row)
            continue
        result = compare_all(graphs, labels)
        row.update(
            common_nodes=list(result.common_nodes), r_node=result.r_node,
            r_interaction=result.r_interaction, c_common=result.c_common,
            c_common_excluded=result.excluded_nodes, delta_diameter=result.delta_diameter,
        )
        rows.append(row)
    return _write(render(rows, COMPARE_COLUMNS, config.output_format), config)


def cmd_export(config: RunConfig) -> str:
    """Serialize one group's bipartite or projected graph as DOT or JSON."""
    inputs = _load(config)
    if len(inputs.groups) != 1 or len(inputs.windows) != 1:
        raise UsageError("export takes exactly one --roster and at most one --window")
    if config.output_format not in ("dot", "json"):
        raise UsageError("export supports --output-format dot or json")
    _, roster = inputs.groups[0]
    bipartite, graph = _graphs(inputs, roster, inputs.windows[0], config)
    target = bipartite if config.graph == "bipartite" else graph
    return export_graph(target, config.output_format, config.output)


COMMANDS = {
    "stats": cmd_stats,
    "centrality": cmd_centrality,
    "compare": cmd_compare,
    "export": cmd_export,
}


def _window_arg(text: str) -> TimeWindow:
    try:
        return TimeWindow.parse(text)
    except UsageError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pubgraph",
        description="Build venue graphs from research groups' publications and compare them.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--records", action="append", type=Path, default=[], required=True,
                        metavar="FILE", help="publication records; may repeat")
    common.add_argument("--format", choices=("canonical", "dblp_xml"), default="canonical",
                        help="record file format (default: canonical)")
    common.add_argument("--roster", action="append", type=Path, default=[], required=True,
                        dest="rosters", metavar="FILE",
                        help="one researcher name per line; one file per group; may repeat")
    common.add_argument("--label", action="append", dest="labels", metavar="NAME",
                        help="group label, one per --roster (default: roster file stem)")
    common.add_argument("--alias-map", type=Path, metavar="FILE",
                        help="tab-separated 'raw<TAB>canonical' venue aliases")
    common.add_argument("--window", action="append", type=_window_arg, default=[],
                        dest="windows", metavar="START:END",
                        help="inclusive year range; repeat for one row per window")
    common.add_argument("--skip-component-filter", action="store_true",
                        help="keep the whole projection instead of its largest component")
    common.add_argument("--output", type=Path, metavar="PATH",
                        help="write output here instead of stdout")
    common.add_argument("-v", "--verbose", action="store_true", help="log progress")

    report_formats = ("tsv", "table", "json")
    for name, help_text in (
        ("stats", "publication summary and projected-graph properties"),
        ("centrality", "degree, closeness, betweenness and m-central venues"),
        ("compare", "similarity/gap metrics between two or more groups"),
    ):
        p = sub.add_parser(name, parents=[common], help=help_text, description=help_text)
        p.add_argument("--output-format", choices=report_formats, default="table")
        if name == "centrality":
            p.add_argument("--unweighted", action="store_true",
                           help="treat every edge as length 1 for closeness/betweenness")

    p = sub.add_parser("export", parents=[common], help="write a graph as DOT or JSON",
                       description="write a graph as DOT or JSON")
    p.add_argument("--output-format", choices=("dot", "json"), default="json")
    p.add_argument("--graph", choices=("projection", "bipartite"), default="projection")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="pubgraph: %(levelname)s: %(message)s",
        stream=sys.stderr,
    )
    config = RunConfig(
        subcommand=args.subcommand,
        records=args.records,
        rosters=args.rosters,
        alias_map=args.alias_map,
        windows=args.windows,
        labels=args.labels,
        format=args.format,
        unweighted=getattr(args, "unweighted", False),
        skip_component_filter=args.skip_component_filter,
        output_format=args.output_format,
        output=args.output,
        graph=getattr(args, "graph", "projection"),
    )
    try:
        text = COMMANDS[config.subcommand](config)
    except PubGraphError as exc:
        print(f"pubgraph: error: {exc}", file=sys.stderr)
        return exc.exit_code
    if config.output is None:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
