"""Render report rows as TSV, aligned text tables or JSON.

Rows are dicts sharing one column order. ``None`` marks a value that could
not be computed and renders as an empty cell (``null`` in JSON). Infinity
renders as ``inf`` everywhere, including JSON.
"""

from __future__ import annotations

import json
import math
from typing import Sequence

__all__ = ["render", "to_tsv", "to_table", "to_json"]


def _cell(value, precision: int | None) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "1" if value else "0"
    if isinstance(value, float):
        if math.isinf(value):
            return "inf" if value > 0 else "-inf"
        return repr(value) if precision is None else f"{value:.{precision}f}"
    if isinstance(value, (list, tuple, frozenset, set)):
        return ", ".join(str(v) for v in value)
    return str(value)


def to_tsv(rows: Sequence[dict], columns: Sequence[str]) -> str:
    lines = ["\t".join(columns)]
    lines += ["\t".join(_cell(r.get(c), None) for c in columns) for r in rows]
    return "\n".join(lines) + "\n"


def to_table(rows: Sequence[dict], columns: Sequence[str], precision: int = 3) -> str:
    cells = [list(columns)] + [[_cell(r.get(c), precision) for c in columns] for r in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(columns))]
    rule = "  ".join("-" * w for w in widths)
    out = []
    for i, row in enumerate(cells):
        out.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
        if i == 0:
            out.append(rule)
    return "\n".join(out) + "\n"


def _jsonable(value):
    if isinstance(value, float) and math.isinf(value):
        return "inf" if value > 0 else "-inf"
    if isinstance(value, (frozenset, set, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, list):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    return value


def to_json(payload) -> str:
    return json.dumps(_jsonable(payload), indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def render(rows: Sequence[dict], columns: Sequence[str], fmt: str) -> str:
    if fmt == "tsv":
        return to_tsv(rows, columns)
    if fmt == "table":
        return to_table(rows, columns)
    if fmt == "json":
        return to_json([{c: r.get(c) for c in columns} for r in rows])
    raise ValueError(f"unsupported report format {fmt!r}")
