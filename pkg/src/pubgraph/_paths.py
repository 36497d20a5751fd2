"""Shortest-path and connectivity primitives over plain adjacency maps.

An adjacency map is ``{node: {neighbour: length}}`` and must be symmetric.
Iteration is always in sorted node order so results never depend on set or
dict ordering.
"""

from __future__ import annotations

import heapq
from collections import deque
from typing import Iterable, Mapping

Adjacency = Mapping[str, Mapping[str, float]]

# Relative tolerance for treating two weighted path lengths as equal.
PATH_RTOL = 1e-9


def lengths_equal(a: float, b: float) -> bool:
    return abs(a - b) <= PATH_RTOL * max(abs(a), abs(b))


def adjacency_from_edges(nodes: Iterable[str], edges: Iterable[tuple[str, str]]) -> dict:
    adj = {n: {} for n in sorted(nodes)}
    for u, v in edges:
        adj[u][v] = 1
        adj[v][u] = 1
    return adj


def bfs_hops(adj: Adjacency, sources: Iterable[str]) -> dict[str, int]:
    """Hop distance from the nearest of ``sources`` to every reachable node."""
    dist = {}
    queue = deque()
    for s in sorted(sources):
        dist[s] = 0
        queue.append(s)
    while queue:
        v = queue.popleft()
        for w in sorted(adj[v]):
            if w not in dist:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def connected_components(adj: Adjacency) -> list[frozenset[str]]:
    """Components ordered by decreasing size, ties by smallest member."""
    seen: set[str] = set()
    comps = []
    for n in sorted(adj):
        if n in seen:
            continue
        comp = frozenset(bfs_hops(adj, [n]))
        seen |= comp
        comps.append(comp)
    comps.sort(key=lambda c: (-len(c), min(c)))
    return comps


def is_connected(adj: Adjacency) -> bool:
    return len(adj) <= 1 or len(bfs_hops(adj, [next(iter(adj))])) == len(adj)


def induced(adj: Adjacency, keep: Iterable[str]) -> dict:
    keep = set(keep)
    return {n: {w: l for w, l in adj[n].items() if w in keep} for n in sorted(keep)}


def hop_profile(adj: Adjacency) -> tuple[int, int, int]:
    """Return ``(pair_count, total_hops, diameter)`` over unordered pairs.

    Assumes ``adj`` is connected.
    """
    nodes = sorted(adj)
    total = 0
    diameter = 0
    for s in nodes:
        dist = bfs_hops(adj, [s])
        for t, d in dist.items():
            if t > s:
                total += d
                diameter = max(diameter, d)
    n = len(nodes)
    return n * (n - 1) // 2, total, diameter


def dijkstra(adj: Adjacency, source: str):
    """Single-source shortest paths with path counting.

    Returns ``(order, dist, sigma, preds)``: nodes in non-decreasing
    distance order, distances, number of shortest paths, and shortest-path
    predecessors. Lengths within ``PATH_RTOL`` are treated as ties.
    """
    tentative = {source: 0.0}
    sigma = {source: 1}
    preds: dict[str, list[str]] = {source: []}
    dist: dict[str, float] = {}
    order = []
    heap = [(0.0, source)]
    while heap:
        d, v = heapq.heappop(heap)
        if v in dist:
            continue
        d = tentative[v]
        dist[v] = d
        order.append(v)
        for w in sorted(adj[v]):
            if w in dist:
                continue
            nd = d + adj[v][w]
            old = tentative.get(w)
            if old is None or (nd < old and not lengths_equal(nd, old)):
                tentative[w] = nd
                sigma[w] = sigma[v]
                preds[w] = [v]
                heapq.heappush(heap, (nd, w))
            elif lengths_equal(nd, old):
                sigma[w] += sigma[v]
                preds[w].append(v)
    return order, dist, sigma, preds
