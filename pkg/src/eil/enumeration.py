"""Canonical forms, exhaustive small-graph generation and seeded random graphs."""

from __future__ import annotations

import random
from functools import lru_cache
from typing import Iterator

from .graph import Graph, iter_bits, popcount


def _refine(adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    """Coarsest equitable refinement of an ordered partition.

    Cells split by their neighbour counts into every current cell; pieces are
    ordered by that signature, so the result does not depend on vertex ids.
    """
    while True:
        masks = [sum(1 << v for v in c) for c in cells]
        new: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                new.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                sig = tuple(popcount(adj[v] & m) for m in masks)
                groups.setdefault(sig, []).append(v)
            if len(groups) > 1:
                changed = True
            for sig in sorted(groups):
                new.append(groups[sig])
        cells = new
        if not changed:
            return cells


def _code(adj: tuple[int, ...], order: list[int]) -> int:
    code = 0
    for j in range(1, len(order)):
        row = adj[order[j]]
        for i in range(j):
            code = code << 1 | (row >> order[i] & 1)
    return code


def canonical_labeling(g: Graph) -> list[int]:
    """Vertex order producing the canonical adjacency code
    (individualization and refinement, exhaustive over the search tree)."""
    adj = g.adj
    if g.n == 0:
        return []
    best: list = [None, None]

    def search(cells: list[list[int]]) -> None:
        cells = _refine(adj, cells)
        if all(len(c) == 1 for c in cells):
            order = [c[0] for c in cells]
            code = _code(adj, order)
            if best[0] is None or code > best[0]:
                best[0], best[1] = code, order
            return
        idx = min((i for i, c in enumerate(cells) if len(c) > 1), key=lambda i: (len(cells[i]), i))
        cell = cells[idx]
        tried: set[int] = set()
        for v in cell:
            # swapping twins is an automorphism fixing the partition
            if adj[v] in tried or adj[v] | 1 << v in tried:
                continue
            tried.add(adj[v])
            tried.add(adj[v] | 1 << v)
            rest = [u for u in cell if u != v]
            search(cells[:idx] + [[v], rest] + cells[idx + 1 :])

    search([list(range(g.n))])
    return best[1]


def canonical_form(g: Graph) -> Graph:
    order = canonical_labeling(g)
    perm = [0] * g.n
    for new, old in enumerate(order):
        perm[old] = new
    return g.relabel(perm)


def canonical_key(g: Graph) -> str:
    return canonical_form(g).to_graph6()


def is_isomorphic(a: Graph, b: Graph) -> bool:
    return a.n == b.n and a.m == b.m and canonical_key(a) == canonical_key(b)


def _far_sets(g: Graph, dist: int, connected: bool) -> Iterator[int]:
    """Vertex sets whose members are pairwise at distance >= ``dist``."""
    # near[v]: vertices within distance dist-1 of v
    near = []
    for v in range(g.n):
        ball = frontier = 1 << v
        for _ in range(dist - 1):
            nxt = 0
            for u in iter_bits(frontier):
                nxt |= g.adj[u]
            frontier = nxt & ~ball
            ball |= nxt
        near.append(ball)

    def rec(start: int, chosen: int, blocked: int) -> Iterator[int]:
        if chosen or not connected:
            yield chosen
        for v in range(start, g.n):
            if not blocked >> v & 1:
                yield from rec(v + 1, chosen | 1 << v, blocked | near[v])

    yield from rec(0, 0, 0)


def _extend(g: Graph, nbrs: int) -> Graph:
    n = g.n
    adj = [a | ((nbrs >> v & 1) << n) for v, a in enumerate(g.adj)]
    adj.append(nbrs)
    return Graph(n + 1, adj)


@lru_cache(maxsize=None)
def _graphs(n: int, connected: bool, min_girth: int) -> tuple[Graph, ...]:
    if n == 0:
        return () if connected else (Graph(0, []),)
    if n == 1:
        return (Graph(1, [0]),)
    seen: dict[str, Graph] = {}
    for h in _graphs(n - 1, connected, min_girth):
        # every connected graph has a non-cut vertex, so extending connected
        # graphs by a vertex with a nonempty neighbourhood reaches them all
        if min_girth:
            # a new vertex closes cycles of length dist(a, b) + 2
            candidates = _far_sets(h, min_girth - 2, connected)
        else:
            candidates = range(1 if connected else 0, 1 << h.n)
        for nbrs in candidates:
            g = _extend(h, nbrs)
            canon = canonical_form(g)
            seen.setdefault(canon.to_graph6(), canon)
    return tuple(seen[k] for k in sorted(seen, key=lambda k: (seen[k].m, k)))


def all_graphs(n: int) -> tuple[Graph, ...]:
    """One representative per isomorphism class on exactly n vertices."""
    return _graphs(n, False, 0)


def connected_graphs(n: int) -> tuple[Graph, ...]:
    return _graphs(n, True, 0)


def connected_graphs_min_girth(n: int, girth: int) -> tuple[Graph, ...]:
    """Connected graphs on n vertices with girth at least ``girth``."""
    return _graphs(n, True, girth)


def graphs_up_to(n: int, connected: bool = False) -> Iterator[Graph]:
    for k in range(1, n + 1):
        yield from (connected_graphs(k) if connected else all_graphs(k))


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def random_forest(rng: random.Random, n: int, keep: float = 0.8) -> Graph:
    """Random recursive tree with each edge kept with probability ``keep``."""
    edges = [(rng.randrange(v), v) for v in range(1, n) if rng.random() < keep]
    return Graph.from_edges(n, edges)
