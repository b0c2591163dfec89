"""Chordality, co-chordality and exact co-chordal cover numbers.

``cochord_number`` works through the complement.  An edge set ``P`` of ``G``
is co-chordal exactly when ``K_n - P`` is a chordal supergraph of the
complement of ``G``, and every chordal supergraph contains the fill graph of
one of its perfect elimination orderings.  So the maximal co-chordal parts
are the complements of the inclusion-minimal elimination fills of
``complement(G)``, which a subset dynamic program enumerates exactly.  A
branch-and-bound set cover over those parts then gives the cover number.
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass, field

from .errors import ConsistencyError, InputValidationError, PreconditionError, ResourceError, check_vertex_budget
from .graph import Edge, Graph, iter_bits, members, popcount, to_mask
from .matchings import induced_matching_number, min_maximal_matching_number

DEFAULT_EDGE_BUDGET = 60
# the fill enumeration walks all 2^k subsets of one component
COMPONENT_VERTEX_LIMIT = 20


def edge_budget() -> int:
    return int(os.environ.get("EIL_BUDGET_EDGES", DEFAULT_EDGE_BUDGET))


# -- chordality ---------------------------------------------------------------


def mcs_order(g: Graph) -> list[int]:
    """Maximum cardinality search; returns the elimination order (reverse visit)."""
    weight = [0] * g.n
    unvisited = g.all_mask
    visit = []
    while unvisited:
        v = max(iter_bits(unvisited), key=lambda x: (weight[x], -x))
        visit.append(v)
        unvisited &= ~(1 << v)
        for u in iter_bits(g.adj[v] & unvisited):
            weight[u] += 1
    return visit[::-1]


def is_perfect_elimination_order(g: Graph, order: list[int]) -> bool:
    later = g.all_mask
    for v in order:
        later &= ~(1 << v)
        if not g.is_clique(g.adj[v] & later):
            return False
    return True


def find_chordless_cycle(g: Graph) -> list[int] | None:
    """An induced cycle of length at least four, or None."""
    for v in range(g.n):
        nbrs = g.neighbors(v)
        blocked = g.adj[v] | (1 << v)
        for i, a in enumerate(nbrs):
            for b in nbrs[i + 1 :]:
                if g.has_edge(a, b):
                    continue
                allowed = g.all_mask & ~blocked | (1 << a) | (1 << b)
                path = _shortest_path(g, a, b, allowed)
                if path is not None:
                    return [v] + path
    return None


def _shortest_path(g: Graph, s: int, t: int, allowed: int) -> list[int] | None:
    parent = {s: -1}
    queue = deque([s])
    while queue:
        u = queue.popleft()
        if u == t:
            path = []
            while u != -1:
                path.append(u)
                u = parent[u]
            return path[::-1]
        for w in iter_bits(g.adj[u] & allowed):
            if w not in parent:
                parent[w] = u
                queue.append(w)
    return None


def chordality_witness(g: Graph) -> tuple[bool, list[int]]:
    """(True, perfect elimination order) or (False, chordless cycle of length >= 4)."""
    order = mcs_order(g)
    if is_perfect_elimination_order(g, order):
        return True, order
    cycle = find_chordless_cycle(g)
    assert cycle is not None and len(cycle) >= 4
    return False, cycle


def is_chordal(g: Graph) -> bool:
    return is_perfect_elimination_order(g, mcs_order(g))


def simplicial_vertices(g: Graph) -> list[int]:
    return [v for v in range(g.n) if g.is_clique(g.adj[v])]


def is_cochordal(g: Graph) -> bool:
    return is_chordal(g.complement())


def edge_subgraph(host: Graph, edges) -> Graph:
    """The graph formed by ``edges`` on the set of their endpoints."""
    verts = sorted({v for e in edges for v in e})
    index = {v: i for i, v in enumerate(verts)}
    adj = [0] * len(verts)
    for u, v in edges:
        adj[index[u]] |= 1 << index[v]
        adj[index[v]] |= 1 << index[u]
    return Graph(len(verts), adj, [host.labels[v] for v in verts], verts)


def is_cochordal_edge_set(host: Graph, edges) -> bool:
    return is_cochordal(edge_subgraph(host, edges))


# -- covers -------------------------------------------------------------------


@dataclass(frozen=True)
class CochordalCover:
    host: Graph = field(repr=False, compare=False)
    parts: tuple[tuple[Edge, ...], ...] = ()

    def __len__(self) -> int:
        return len(self.parts)

    def validate(self) -> None:
        host_edges = set(self.host.edges())
        covered = set()
        for part in self.parts:
            norm = {tuple(sorted(e)) for e in part}
            if not norm:
                raise InputValidationError("cover contains an empty part")
            if not norm <= host_edges:
                raise InputValidationError(f"part uses non-edges {sorted(norm - host_edges)}")
            if not is_cochordal_edge_set(self.host, norm):
                raise InputValidationError(f"part {sorted(norm)} is not co-chordal")
            covered |= norm
        if covered != host_edges:
            raise InputValidationError(f"cover misses edges {sorted(host_edges - covered)}")

    def to_json(self) -> dict:
        return {"parts": [[list(e) for e in part] for part in self.parts]}


def maximal_cochordal_parts(g: Graph) -> list[int]:
    """All maximal co-chordal edge subsets of ``g`` as masks over ``g.edges()``.

    ``g`` should be connected with at least one edge; parts never straddle
    components anyway.
    """
    edges = g.edges()
    index = {e: i for i, e in enumerate(edges)}
    n = g.n
    if n > COMPONENT_VERTEX_LIMIT:
        raise ResourceError(f"co-chordal cover: component with {n} vertices exceeds {COMPONENT_VERTEX_LIMIT}")
    comp = g.complement().adj
    gadj = g.adj
    # G-edges within each vertex pair set, as edge-index masks
    edge_bit = [[0] * n for _ in range(n)]
    for (u, v), i in index.items():
        edge_bit[u][v] = edge_bit[v][u] = 1 << i

    def fill(reach: int) -> int:
        out = 0
        for a in iter_bits(reach):
            for b in iter_bits(gadj[a] & reach):
                if a < b:
                    out |= edge_bit[a][b]
        return out

    full = (1 << n) - 1
    states: dict[int, list[int]] = {0: [0]}
    by_size: list[list[int]] = [[] for _ in range(n + 1)]
    by_size[0].append(0)
    for size in range(n):
        for s in by_size[size]:
            partial = states.pop(s)
            for v in iter_bits(full & ~s):
                # vertices reachable from v through eliminated vertices
                region = 1 << v
                frontier = region
                while frontier:
                    nxt = 0
                    for x in iter_bits(frontier):
                        nxt |= comp[x]
                    nxt &= s & ~region
                    region |= nxt
                    frontier = nxt
                reach = 0
                for x in iter_bits(region):
                    reach |= comp[x]
                reach &= ~s & ~(1 << v)
                f = fill(reach)
                t = s | (1 << v)
                bucket = states.get(t)
                if bucket is None:
                    states[t] = bucket = []
                    by_size[size + 1].append(t)
                for p in partial:
                    _add_minimal(bucket, p | f)
    every = (1 << len(edges)) - 1
    return sorted(every & ~f for f in states[full])


def _add_minimal(bucket: list[int], item: int) -> None:
    for x in bucket:
        if x & item == x:
            return
    bucket[:] = [x for x in bucket if x & item != item]
    bucket.append(item)


def _min_set_cover(universe: int, parts: list[int], lower: int, upper: int) -> list[int]:
    """Smallest list of parts covering ``universe``; ``upper`` must be achievable."""
    containing: dict[int, list[int]] = {}
    for i in iter_bits(universe):
        containing[i] = [p for p in parts if p >> i & 1]

    def search(uncovered: int, budget: int) -> list[int] | None:
        if not uncovered:
            return []
        if budget == 0:
            return None
        # branch on the uncovered edge with the fewest candidate parts
        e = min(iter_bits(uncovered), key=lambda i: (len(containing[i]), i))
        for p in sorted(containing[e], key=lambda q: -popcount(q & uncovered)):
            rest = search(uncovered & ~p, budget - 1)
            if rest is not None:
                return [p] + rest
        return None

    for t in range(max(lower, 0), upper + 1):
        found = search(universe, t)
        if found is not None:
            return found
    raise AssertionError("set cover upper bound was not achievable")


def cochord_number(g: Graph) -> tuple[int, CochordalCover]:
    """Exact co-chordal cover number with a witness cover."""
    check_vertex_budget(g.n, "cochord_number")
    if g.m > edge_budget():
        raise ResourceError(f"cochord_number: {g.m} edges exceeds edge budget {edge_budget()}")
    parts_out: list[tuple[Edge, ...]] = []
    for comp in g.connected_components():
        if len(comp) < 2:
            continue
        sub = g.induced_subgraph(comp)
        sub_edges = sub.edges()
        lower = induced_matching_number(sub)
        upper = min_maximal_matching_number(sub)
        if is_cochordal(sub):
            chosen = [(1 << len(sub_edges)) - 1]
        else:
            candidates = maximal_cochordal_parts(sub)
            chosen = _min_set_cover((1 << len(sub_edges)) - 1, candidates, lower, upper)
        for mask in chosen:
            part = tuple(
                tuple(sorted((sub.origin[u], sub.origin[v]))) for i, (u, v) in enumerate(sub_edges) if mask >> i & 1
            )
            parts_out.append(part)
    cover = CochordalCover(g, tuple(parts_out))
    return len(parts_out), cover


def lemma_cochord_witness(g: Graph, cover: CochordalCover) -> tuple[int, CochordalCover]:
    """Vertex ``w`` and a cover of ``G - N[w]`` with one part fewer.

    ``w`` is a simplicial vertex of the complement of the first part; the
    remaining parts are restricted to ``G - N[w]``.
    """
    if g.is_edgeless():
        raise PreconditionError("graph has no edge")
    cover.validate()
    first = edge_subgraph(g, cover.parts[0])
    simp = simplicial_vertices(first.complement())
    if not simp:
        raise InputValidationError("first part is not co-chordal")
    w = first.origin[simp[0]]
    rest_graph = g.delete_closed_neighborhood(w)
    new_id = {old: new for new, old in enumerate(rest_graph.origin)}
    removed = g.closed_neighborhood(w)
    new_parts = []
    for part in cover.parts[1:]:
        kept = tuple(
            tuple(sorted((new_id[u], new_id[v]))) for u, v in part if not (removed >> u & 1 or removed >> v & 1)
        )
        if kept:
            new_parts.append(kept)
    result = CochordalCover(rest_graph, tuple(new_parts))
    result.validate()
    if len(result) > len(cover) - 1:
        raise ConsistencyError("restricted cover did not shrink")
    return w, result


def brute_force_cochord(g: Graph) -> int:
    """Enumerate every co-chordal edge subset; test oracle for small graphs."""
    edges = g.edges()
    m = len(edges)
    if m == 0:
        return 0
    good = [
        mask
        for mask in range(1, 1 << m)
        if is_cochordal_edge_set(g, [edges[i] for i in range(m) if mask >> i & 1])
    ]
    full = (1 << m) - 1
    layer = {0}
    for t in range(1, m + 1):
        layer = {a | p for a in layer for p in good}
        if full in layer:
            return t
    raise AssertionError("single edges are co-chordal, a cover must exist")
