"""Structural classes (pendant edges, basic 5-cycles, class PC, vertex
decomposability) and the graph constructors used by the harness."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .errors import ConsistencyError, InputValidationError, PreconditionError, check_vertex_budget
from .graph import Edge, Graph, disjoint_union, iter_bits, members, popcount, to_mask
from .matchings import five_cycles


# -- pendant edges and basic cycles ------------------------------------------


def pendant_edges(g: Graph) -> list[Edge]:
    return [(u, v) for u, v in g.edges() if g.degree(u) == 1 or g.degree(v) == 1]


def pendant_vertices(g: Graph) -> list[int]:
    """P(G): vertices incident to a pendant edge."""
    return sorted({v for e in pendant_edges(g) for v in e})


def is_basic_cycle(g: Graph, cycle: Sequence[int]) -> bool:
    """No two vertices of the cycle of degree >= 3 are adjacent in ``g``."""
    heavy = [v for v in cycle if g.degree(v) >= 3]
    return not any(g.has_edge(a, b) for i, a in enumerate(heavy) for b in heavy[i + 1 :])


def basic_five_cycles(g: Graph) -> list[tuple[int, ...]]:
    check_vertex_budget(g.n, "basic_five_cycles")
    return [c for c in five_cycles(g) if is_basic_cycle(g, c)]


def chorded_five_cycles(g: Graph) -> list[tuple[int, ...]]:
    """5-cycle vertex sets whose induced subgraph has more than five edges."""
    induced = {to_mask(c) for c in five_cycles(g, induced=True)}
    return [c for c in five_cycles(g) if to_mask(c) not in induced]


def cycle_vertices(g: Graph) -> list[int]:
    """C(G): vertices lying on basic 5-cycles."""
    return sorted({v for c in basic_five_cycles(g) for v in c})


# -- class PC -----------------------------------------------------------------


@dataclass(frozen=True)
class PCDecomposition:
    pendant_pairs: tuple[tuple[int, int], ...]
    basic_cycles: tuple[tuple[int, ...], ...]

    def to_json(self) -> dict:
        return {
            "pendant_pairs": [list(p) for p in self.pendant_pairs],
            "basic_cycles": [list(c) for c in self.basic_cycles],
        }

    def validate(self, g: Graph) -> None:
        seen = 0
        for s, leaf in self.pendant_pairs:
            if not g.has_edge(s, leaf) or g.degree(leaf) != 1:
                raise InputValidationError(f"({s},{leaf}) is not a pendant edge")
        for part in list(self.pendant_pairs) + list(self.basic_cycles):
            m = to_mask(part)
            if m & seen:
                raise InputValidationError("decomposition parts overlap")
            seen |= m
        for c in self.basic_cycles:
            if not is_basic_cycle(g, c):
                raise InputValidationError(f"cycle {c} is not basic")
        if seen != g.all_mask:
            raise InputValidationError("decomposition does not cover V(G)")


def pc_membership(g: Graph) -> tuple[bool, PCDecomposition | None]:
    """Test membership in class PC and return the decomposition.

    P(G) and C(G) are determined by ``g``, so the three conditions are checked
    directly: P and C partition V, the pendant edges are pairwise disjoint
    (a perfect matching of G[P]), and the basic 5-cycles are pairwise disjoint.
    """
    check_vertex_budget(g.n, "pc_membership")
    if g.n == 0:
        return False, None
    pend = pendant_edges(g)
    cycles = basic_five_cycles(g)
    p_mask = 0
    for e in pend:
        m = to_mask(e)
        if p_mask & m:
            return False, None
        p_mask |= m
    c_mask = 0
    for c in cycles:
        m = to_mask(c)
        if c_mask & m:
            return False, None
        c_mask |= m
    if p_mask & c_mask or p_mask | c_mask != g.all_mask:
        return False, None
    pairs = []
    for u, v in pend:
        # support first; an isolated K2 lists its smaller end as support
        if g.degree(v) == 1:
            pairs.append((u, v))
        else:
            pairs.append((v, u))
    return True, PCDecomposition(tuple(sorted(pairs)), tuple(cycles))


# -- vertex decomposability -----------------------------------------------------


def maximal_independent_sets(g: Graph, mask: int) -> list[int]:
    """All maximal independent sets of ``g[mask]`` (Bron-Kerbosch with pivoting)."""
    adj = g.adj
    out: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(r)
            return
        # pivot: vertex whose closed neighbourhood leaves fewest candidates
        pivot = max(iter_bits(p | x), key=lambda u: popcount(p & (adj[u] | (1 << u))))
        for v in iter_bits(p & (adj[pivot] | (1 << pivot))):
            closed = adj[v] | (1 << v)
            expand(r | (1 << v), p & ~closed, x & ~closed)
            p &= ~(1 << v)
            x |= 1 << v

    expand(0, mask, 0)
    return out


def _has_edge_within(g: Graph, mask: int) -> bool:
    return any(g.adj[v] & mask for v in iter_bits(mask))


def is_vertex_decomposable(g: Graph) -> bool:
    """Recursive definition evaluated literally, memoized on vertex subsets."""
    check_vertex_budget(g.n, "is_vertex_decomposable")
    adj = g.adj

    def condition_ii(mask: int, v: int) -> bool:
        # every maximal independent set of G[mask] - v meets N(v)
        return all(s & adj[v] for s in maximal_independent_sets(g, mask & ~(1 << v)))

    @lru_cache(maxsize=None)
    def vd(mask: int) -> bool:
        if not _has_edge_within(g, mask):
            return True
        for v in iter_bits(mask):
            if not adj[v] & mask:
                continue
            if condition_ii(mask, v) and vd(mask & ~(1 << v)) and vd(mask & ~adj[v] & ~(1 << v)):
                return True
        return False

    return vd(g.all_mask)


def is_well_covered(g: Graph) -> bool:
    """All maximal independent sets have the same size (the independence
    complex is pure)."""
    check_vertex_budget(g.n, "is_well_covered")
    return len({popcount(s) for s in maximal_independent_sets(g, g.all_mask)}) <= 1


def is_shedding_vertex(g: Graph, v: int, mask: int | None = None) -> bool:
    """Shortcut form of condition (ii): no independent set of G - N[v] is
    maximal in G - v.  Used only to cross-check the literal definition."""
    mask = g.all_mask if mask is None else mask
    outside = mask & ~g.adj[v] & ~(1 << v)
    for s in maximal_independent_sets(g, outside):
        # s is maximal in G - N[v]; it stays maximal in G - v unless some
        # neighbour of v can be added
        if not any(not (g.adj[u] & s) for u in iter_bits(g.adj[v] & mask)):
            return False
    return True


def is_cm_girth5(g: Graph, cross_check: bool = False) -> bool:
    """Cohen-Macaulayness of a connected graph of girth at least five.

    With ``cross_check`` the answer is compared against vertex
    decomposability together with well-coveredness.
    """
    if not g.is_connected():
        raise PreconditionError("is_cm_girth5 needs a connected graph")
    if g.girth() < 5:
        raise PreconditionError(f"is_cm_girth5 needs girth >= 5, got {g.girth()}")
    answer = g.n == 1 or pc_membership(g)[0]
    if cross_check and answer != (is_vertex_decomposable(g) and is_well_covered(g)):
        raise ConsistencyError(f"class PC and pure vertex decomposability disagree on {g.to_graph6()}")
    return answer


# -- constructors ---------------------------------------------------------------


def whisker(g: Graph) -> Graph:
    """W(G): originals keep ids 0..n-1, the whisker of vertex i is n+i."""
    n = g.n
    adj = list(g.adj) + [0] * n
    for i in range(n):
        adj[i] |= 1 << (n + i)
        adj[n + i] = 1 << i
    labels = list(g.labels) + [f"u({lab})" for lab in g.labels]
    return Graph(2 * n, adj, labels)


def build_hn(n: int) -> Graph:
    """Chain of n five-cycles; v_3 of cycle i is joined to v_1 of cycle i+1.

    Vertex ``v_k^i`` gets id ``5(i-1) + (k-1)``.
    """
    if n < 1:
        raise InputValidationError(f"H_n needs n >= 1, got {n}")
    vid = lambda i, k: 5 * (i - 1) + (k - 1)
    edges = []
    for i in range(1, n + 1):
        edges += [(vid(i, 1), vid(i, 2)), (vid(i, 2), vid(i, 3)), (vid(i, 3), vid(i, 4)),
                  (vid(i, 4), vid(i, 5)), (vid(i, 1), vid(i, 5))]
    edges += [(vid(i, 3), vid(i + 1, 1)) for i in range(1, n)]
    labels = [f"v{k}^{i}" for i in range(1, n + 1) for k in range(1, 6)]
    return Graph.from_edges(5 * n, edges, labels)


def identify_vertices(g1: Graph, u: int, g2: Graph, x: int) -> Graph:
    """Glue ``u`` of ``g1`` to ``x`` of ``g2``.

    Layout: ``g1 - u``, then ``g2 - x``, then the merged vertex z last.
    """
    if not 0 <= u < g1.n or not 0 <= x < g2.n:
        raise InputValidationError(f"identify_vertices: ids ({u}, {x}) out of range")
    a = g1.delete_vertex(u)
    b = g2.delete_vertex(x)
    base = disjoint_union(a, b)
    z = base.n
    pos1 = {old: new for new, old in enumerate(a.origin)}
    pos2 = {old: new + a.n for new, old in enumerate(b.origin)}
    nbrs = [pos1[y] for y in g1.neighbors(u)] + [pos2[y] for y in g2.neighbors(x)]
    edges = base.edges() + [(z, y) for y in nbrs]
    labels = list(a.labels) + list(b.labels) + ["z"]
    return Graph.from_edges(z + 1, edges, labels)


def build_gn(h: Graph, u: int, n: int, x: int) -> Graph:
    """Glue ``u`` of ``h`` to vertex ``x`` of H_n inside W(H_n)."""
    if not 0 <= x < 5 * n:
        raise InputValidationError(f"x={x} is not an H_{n} vertex (whiskers excluded)")
    return identify_vertices(h, u, whisker(build_hn(n)), x)


def figure2_candidate() -> tuple[Graph, int, int, int]:
    """An 18-vertex graph with the properties stated for the gluing gadget.

    Three pairwise non-adjacent 5-cycles; u joined to one vertex of each
    cycle; v joined to u and to a vertex of the first cycle that is not
    adjacent to u's neighbour there; w a leaf on v.  It has induced
    {K2,C5}-matching number 6 and induced matching number 4.  Returns
    ``(H, u, v, w)``.  This is a reconstruction from the stated properties,
    not a copy of any drawing.
    """
    edges = []
    for c in range(3):
        base = 5 * c
        edges += [(base + i, base + (i + 1) % 5) for i in range(5)]
    u, v, w = 15, 16, 17
    edges += [(u, 0), (u, 5), (u, 10), (v, u), (v, 2), (w, v)]
    return Graph.from_edges(18, edges), u, v, w


def build_standard(kind: str, *params) -> Graph:
    if kind == "cycle":
        (n,) = params
        if n < 3:
            raise InputValidationError(f"cycle needs n >= 3, got {n}")
        return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])
    if kind == "path":
        (n,) = params
        if n < 1:
            raise InputValidationError(f"path needs n >= 1, got {n}")
        return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])
    if kind == "complete":
        (n,) = params
        if n < 1:
            raise InputValidationError(f"complete graph needs n >= 1, got {n}")
        return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
    if kind == "empty":
        (n,) = params
        if n < 0:
            raise InputValidationError(f"empty graph needs n >= 0, got {n}")
        return Graph.from_edges(n, [])
    if kind == "disjoint_union":
        graphs = params[0] if len(params) == 1 and isinstance(params[0], (list, tuple)) else params
        if not graphs:
            raise InputValidationError("disjoint_union needs at least one graph")
        return disjoint_union(*graphs)
    raise InputValidationError(f"unknown family {kind!r}")


def cycle(n: int) -> Graph:
    return build_standard("cycle", n)


def path(n: int) -> Graph:
    return build_standard("path", n)


def complete(n: int) -> Graph:
    return build_standard("complete", n)
