"""Exact matching-type invariants.

All searches recurse on the bitset of still-available vertices and memoize on
it, which keeps them fast well past the sizes used by the bounds harness.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .errors import InputValidationError, check_vertex_budget
from .graph import Edge, Graph, iter_bits, popcount, to_mask


@dataclass(frozen=True)
class HSubgraph:
    """Vertex-disjoint K2 and C5 components inside ``host``."""

    host: Graph = field(repr=False, compare=False)
    k2: tuple[Edge, ...] = ()
    c5: tuple[tuple[int, ...], ...] = ()

    @property
    def match_number(self) -> int:
        return len(self.k2) + 2 * len(self.c5)

    @property
    def vertex_mask(self) -> int:
        mask = 0
        for e in self.k2:
            mask |= to_mask(e)
        for c in self.c5:
            mask |= to_mask(c)
        return mask

    def validate(self, induced: bool = False) -> None:
        g = self.host
        seen = 0
        parts = [tuple(e) for e in self.k2] + [tuple(c) for c in self.c5]
        for part in parts:
            m = to_mask(part)
            if popcount(m) != len(part) or m & seen:
                raise InputValidationError(f"component {part} overlaps another component")
            seen |= m
        for u, v in self.k2:
            if not g.has_edge(u, v):
                raise InputValidationError(f"({u},{v}) is not an edge of the host")
        for c in self.c5:
            if len(c) != 5:
                raise InputValidationError(f"C5 component {c} does not have 5 vertices")
            for i in range(5):
                if not g.has_edge(c[i], c[(i + 1) % 5]):
                    raise InputValidationError(f"C5 component {c} misses edge {c[i]}-{c[(i + 1) % 5]}")
        if induced:
            # induced: no host edges besides the component edges
            inner = sum(popcount(g.adj[v] & seen) for v in iter_bits(seen)) // 2
            if inner != len(self.k2) + 5 * len(self.c5):
                raise InputValidationError("H-subgraph is not induced")

    def to_json(self) -> dict:
        return {
            "k2": [list(e) for e in self.k2],
            "c5": [list(c) for c in self.c5],
            "match_number": self.match_number,
        }


def five_cycles(g: Graph, induced: bool = False) -> list[tuple[int, ...]]:
    """One cyclic sequence per vertex set that carries a 5-cycle subgraph.

    Sequences start at their smallest vertex; when a vertex set carries more
    than one 5-cycle the lexicographically smallest sequence is kept.  With
    ``induced`` only chordless cycles are returned.
    """
    adj = g.adj
    best: dict[int, tuple[int, ...]] = {}
    for a in range(g.n):
        higher = ~((1 << (a + 1)) - 1)
        for b in iter_bits(adj[a] & higher):
            for c in iter_bits(adj[b] & higher & ~(1 << a)):
                for d in iter_bits(adj[c] & higher & ~(1 << b)):
                    for e in iter_bits(adj[d] & adj[a] & higher & ~(1 << b) & ~(1 << c)):
                        if e < b:
                            continue
                        seq = (a, b, c, d, e)
                        mask = to_mask(seq)
                        if popcount(mask) != 5:
                            continue
                        if induced and sum(popcount(adj[v] & mask) for v in seq) != 10:
                            continue
                        if mask not in best or seq < best[mask]:
                            best[mask] = seq
    return sorted(best.values())


def _cycles_by_vertex(g: Graph, induced: bool) -> list[list[tuple[int, tuple[int, ...]]]]:
    by_vertex: list[list[tuple[int, tuple[int, ...]]]] = [[] for _ in range(g.n)]
    for seq in five_cycles(g, induced=induced):
        mask = to_mask(seq)
        for v in seq:
            by_vertex[v].append((mask, seq))
    return by_vertex


def _first_active(adj, rest: int) -> int:
    for v in iter_bits(rest):
        if adj[v] & rest:
            return v
    return -1


def matching_number(g: Graph) -> int:
    check_vertex_budget(g.n, "matching_number")
    adj = g.adj

    @lru_cache(maxsize=None)
    def best(rest: int) -> int:
        v = _first_active(adj, rest)
        if v < 0:
            return 0
        rest_v = rest & ~(1 << v)
        val = best(rest_v)
        for u in iter_bits(adj[v] & rest):
            val = max(val, 1 + best(rest_v & ~(1 << u)))
        return val

    return best(g.all_mask)


def min_maximal_matching_number(g: Graph) -> int:
    """Smallest size of a matching that cannot be extended."""
    check_vertex_budget(g.n, "min_maximal_matching_number")
    adj = g.adj
    inf = g.n + 1

    # forced: vertices that must end up matched (a neighbour was left unmatched)
    @lru_cache(maxsize=None)
    def best(rest: int, forced: int) -> int:
        v = -1
        for x in iter_bits(rest):
            if not adj[x] & rest:
                if forced >> x & 1:
                    return inf
                continue
            v = x
            break
        if v < 0:
            return 0
        rest_v = rest & ~(1 << v)
        val = inf
        for u in iter_bits(adj[v] & rest):
            val = min(val, 1 + best(rest_v & ~(1 << u), forced & ~(1 << u) & ~(1 << v)))
        if not forced >> v & 1:
            val = min(val, best(rest_v, forced | (adj[v] & rest)))
        return val

    return best(g.all_mask, 0)


def induced_matching_number(g: Graph) -> int:
    check_vertex_budget(g.n, "induced_matching_number")
    adj = g.adj

    @lru_cache(maxsize=None)
    def best(rest: int) -> int:
        v = _first_active(adj, rest)
        if v < 0:
            return 0
        val = best(rest & ~(1 << v))
        nv = adj[v] | (1 << v)
        for u in iter_bits(adj[v] & rest):
            val = max(val, 1 + best(rest & ~nv & ~adj[u]))
        return val

    return best(g.all_mask)


def has_gap(g: Graph) -> bool:
    edges = g.edges()
    for i, (a, b) in enumerate(edges):
        reach = g.adj[a] | g.adj[b] | (1 << a) | (1 << b)
        for c, d in edges[i + 1 :]:
            if not (reach >> c & 1) and not (reach >> d & 1):
                return True
    return False


def is_maximal_h_subgraph(h: HSubgraph) -> bool:
    g = h.host
    rest = g.all_mask & ~h.vertex_mask
    return all(not (g.adj[v] & rest) for v in iter_bits(rest))


def ind_match_k2c5(g: Graph) -> tuple[int, HSubgraph]:
    """Largest ``m + 2s`` over induced subgraphs made of m K2's and s C5's."""
    check_vertex_budget(g.n, "ind_match_k2c5")
    adj = g.adj
    cycles = _cycles_by_vertex(g, induced=True)

    def closed(mask: int) -> int:
        out = mask
        for v in iter_bits(mask):
            out |= adj[v]
        return out

    @lru_cache(maxsize=None)
    def best(rest: int) -> tuple[int, tuple]:
        v = _first_active(adj, rest)
        if v < 0:
            return 0, ()
        options = []
        val, parts = best(rest & ~(1 << v))
        options.append((val, parts))
        for mask, seq in cycles[v]:
            if mask & rest == mask:
                val, parts = best(rest & ~closed(mask))
                options.append((val + 2, (("c5", seq),) + parts))
        for u in iter_bits(adj[v] & rest):
            val, parts = best(rest & ~closed((1 << u) | (1 << v)))
            options.append((val + 1, (("k2", (v, u)),) + parts))
        top = max(o[0] for o in options)
        return min((o for o in options if o[0] == top), key=_witness_key)

    val, parts = best(g.all_mask)
    return val, _assemble(g, parts)


def min_match_k2c5(g: Graph, induced_c5: bool = False) -> tuple[int, HSubgraph]:
    """Smallest ``m + 2s`` over maximal {K2, C5}-subgraphs.

    C5 components may carry chords in ``g`` unless ``induced_c5`` is set.
    """
    check_vertex_budget(g.n, "min_match_k2c5")
    adj = g.adj
    cycles = _cycles_by_vertex(g, induced=induced_c5)
    inf = (g.n + 1, ())

    @lru_cache(maxsize=None)
    def best(rest: int, forced: int) -> tuple[int, tuple]:
        v = -1
        for x in iter_bits(rest):
            if not adj[x] & rest:
                if forced >> x & 1:
                    return inf
                continue
            v = x
            break
        if v < 0:
            return 0, ()
        options = [inf]
        rest_v = rest & ~(1 << v)
        for mask, seq in cycles[v]:
            if mask & rest == mask:
                val, parts = best(rest & ~mask, forced & ~mask)
                options.append((val + 2, (("c5", seq),) + parts))
        for u in iter_bits(adj[v] & rest):
            pair = (1 << u) | (1 << v)
            val, parts = best(rest_v & ~(1 << u), forced & ~pair)
            options.append((val + 1, (("k2", (v, u)),) + parts))
        if not forced >> v & 1:
            options.append(best(rest_v, forced | (adj[v] & rest)))
        low = min(o[0] for o in options)
        return min((o for o in options if o[0] == low), key=_witness_key)

    val, parts = best(g.all_mask, 0)
    return val, _assemble(g, parts)


def _witness_key(option) -> tuple:
    # deterministic tie-break: lexicographically smallest sorted vertex lists
    return tuple(sorted(tuple(sorted(p[1])) for p in option[1]))


def _assemble(g: Graph, parts) -> HSubgraph:
    k2 = tuple(sorted(tuple(sorted(p[1])) for p in parts if p[0] == "k2"))
    c5 = tuple(sorted(p[1] for p in parts if p[0] == "c5"))
    return HSubgraph(g, k2, c5)
