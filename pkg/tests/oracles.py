"""Brute-force reference implementations, written independently of the
library's search code.  They only read ``n`` and the edge list."""

from __future__ import annotations

from itertools import combinations, permutations

import networkx as nx


def edge_list(g):
    return [tuple(e) for e in g.edges()]


def adjacency_sets(g):
    adj = {v: set() for v in range(g.n)}
    for u, v in edge_list(g):
        adj[u].add(v)
        adj[v].add(u)
    return adj


def all_matchings(g):
    edges = edge_list(g)
    out = []

    def rec(i, used, chosen):
        if i == len(edges):
            out.append(list(chosen))
            return
        rec(i + 1, used, chosen)
        u, v = edges[i]
        if u not in used and v not in used:
            chosen.append(edges[i])
            rec(i + 1, used | {u, v}, chosen)
            chosen.pop()

    rec(0, frozenset(), [])
    return out


def covered(matching):
    return {v for e in matching for v in e}


def is_maximal_matching(g, matching):
    cov = covered(matching)
    return all(u in cov or v in cov for u, v in edge_list(g))


def is_induced_matching(g, matching):
    adj = adjacency_sets(g)
    for (a, b), (c, d) in combinations(matching, 2):
        if {c, d} & (adj[a] | adj[b]):
            return False
    return True


def match(g):
    return max(len(m) for m in all_matchings(g))


def min_match(g):
    return min(len(m) for m in all_matchings(g) if is_maximal_matching(g, m))


def ind_match(g):
    return max(len(m) for m in all_matchings(g) if is_induced_matching(g, m))


def independence_number(g):
    adj = adjacency_sets(g)
    for k in range(g.n, -1, -1):
        for s in combinations(range(g.n), k):
            if all(b not in adj[a] for a, b in combinations(s, 2)):
                return k
    return 0


def five_cycle_edge_sets(g):
    """Every 5-cycle subgraph as (vertex set, edge set)."""
    adj = adjacency_sets(g)
    seen = set()
    out = []
    for vs in combinations(range(g.n), 5):
        first = vs[0]
        for rest in permutations(vs[1:]):
            order = (first,) + rest
            if order[1] > order[4]:
                continue
            if all(order[(i + 1) % 5] in adj[order[i]] for i in range(5)):
                es = frozenset(frozenset((order[i], order[(i + 1) % 5])) for i in range(5))
                if es not in seen:
                    seen.add(es)
                    out.append((frozenset(vs), es))
    return out


def h_subgraphs(g):
    """All {K2,C5}-subgraphs as (vertex set, edge set, match number)."""
    comps = [(frozenset(e), frozenset([frozenset(e)]), 1) for e in edge_list(g)]
    comps += [(vs, es, 2) for vs, es in five_cycle_edge_sets(g)]
    out = []

    def rec(i, used, edges, value):
        if i == len(comps):
            out.append((used, edges, value))
            return
        rec(i + 1, used, edges, value)
        vs, es, val = comps[i]
        if not vs & used:
            rec(i + 1, used | vs, edges | es, value + val)

    rec(0, frozenset(), frozenset(), 0)
    return out


def induced_edges(g, vs):
    return frozenset(frozenset(e) for e in edge_list(g) if set(e) <= vs)


def ind_match_k2c5(g):
    return max(val for vs, es, val in h_subgraphs(g) if induced_edges(g, vs) == es)


def min_match_k2c5(g, induced_c5=False):
    best = None
    for vs, es, val in h_subgraphs(g):
        if any(not (set(e) & vs) for e in edge_list(g)):
            continue
        if induced_c5:
            # each C5 component must be induced: no chord inside any 5-set
            ok = all(len(induced_edges(g, c)) == 5 for c in _c5_parts(vs, es))
            if not ok:
                continue
        best = val if best is None else min(best, val)
    return best


def _c5_parts(vs, es):
    h = nx.Graph()
    h.add_edges_from(tuple(e) for e in es)
    return [set(c) for c in nx.connected_components(h) if len(c) == 5]


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(edge_list(g))
    return h


def is_cochordal_edges(edges):
    """Co-chordality of the subgraph formed by ``edges`` on their endpoints."""
    h = nx.Graph()
    h.add_edges_from(edges)
    return nx.is_chordal(nx.complement(h))


def cochord(g):
    edges = edge_list(g)
    if not edges:
        return 0
    good = [frozenset(s) for k in range(1, len(edges) + 1)
            for s in combinations(edges, k) if is_cochordal_edges(s)]
    full = frozenset(edges)
    for t in range(1, len(edges) + 1):
        for parts in combinations(good, t):
            if frozenset().union(*parts) == full:
                return t
    raise AssertionError("unreachable")


def maximal_independent_sets(g, vertices):
    adj = adjacency_sets(g)
    vertices = list(vertices)
    out = []
    for k in range(len(vertices), -1, -1):
        for s in combinations(vertices, k):
            if any(b in adj[a] for a, b in combinations(s, 2)):
                continue
            if any(set(s) <= set(t) for t in out):
                continue
            out.append(frozenset(s))
    return out


def complex_vertex_decomposable(facets):
    """Vertex decomposability of a simplicial complex given by its facets:
    a simplex (or {}), or a shedding vertex v whose link and deletion are
    vertex decomposable and no facet of the link is a facet of the deletion."""
    facets = [frozenset(f) for f in facets]
    facets = [f for f in facets if not any(f < h for h in facets)]
    if len(facets) <= 1:
        return True
    verts = frozenset().union(*facets)
    for v in sorted(verts):
        link = [f - {v} for f in facets if v in f]
        dele = [f - {v} if v in f else f for f in facets]
        dele = [f for f in dele if not any(f < h for h in dele)]
        link_max = [f for f in link if not any(f < h for h in link)]
        if any(f in dele for f in link_max):
            continue
        if complex_vertex_decomposable(link_max) and complex_vertex_decomposable(dele):
            return True
    return False


def graph_vertex_decomposable(g):
    return complex_vertex_decomposable(maximal_independent_sets(g, range(g.n)))


def reduced_homology(facets, field="gf2"):
    """Reduced Betti numbers of the complex generated by ``facets`` using
    sympy-free dense elimination (GF(2) or exact fractions)."""
    from fractions import Fraction

    faces = set()
    for f in facets:
        f = tuple(sorted(f))
        for k in range(len(f) + 1):
            faces.update(combinations(f, k))
    by_dim = {}
    for f in faces:
        by_dim.setdefault(len(f) - 1, []).append(f)
    for d in by_dim:
        by_dim[d].sort()

    def rank(d):
        # boundary from dim d to dim d-1
        if d not in by_dim or d - 1 not in by_dim:
            return 0
        index = {f: i for i, f in enumerate(by_dim[d - 1])}
        rows = []
        for f in by_dim[d]:
            row = [0] * len(index)
            for i in range(len(f)):
                row[index[f[:i] + f[i + 1:]]] = (-1) ** i
            rows.append(row)
        if field == "gf2":
            rows = [[x % 2 for x in r] for r in rows]
        else:
            rows = [[Fraction(x) for x in r] for r in rows]
        r = 0
        ncols = len(index)
        for c in range(ncols):
            piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
            if piv is None:
                continue
            rows[r], rows[piv] = rows[piv], rows[r]
            for i in range(len(rows)):
                if i != r and rows[i][c]:
                    if field == "gf2":
                        rows[i] = [(a + b) % 2 for a, b in zip(rows[i], rows[r])]
                    else:
                        f = rows[i][c] / rows[r][c]
                        rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
            r += 1
        return r

    out = {}
    top = max(by_dim)
    for d in range(-1, top + 1):
        h = len(by_dim.get(d, [])) - rank(d) - rank(d + 1)
        if h:
            out[d] = h
    return out


def edge_ideal_regularity(g, field="gf2"):
    """reg(I(G)) from Hochster's formula on the independence complex,
    every vertex subset visited."""
    best = 0
    adj = adjacency_sets(g)
    for k in range(1, g.n + 1):
        for w in combinations(range(g.n), k):
            facets = [s for s in maximal_independent_sets(g, w)]
            dims = reduced_homology(facets, field)
            if dims:
                best = max(best, max(dims) + 1)
    return best + 1
