"""Simple undirected graphs on vertices ``0..n-1`` with bitset adjacency.

Graphs are immutable.  Every operation that removes vertices returns a new
graph whose ``origin`` tuple maps each new vertex id to its id in the graph it
was derived from, so results can always be reported in host coordinates.
"""

from __future__ import annotations

import json
import math
from collections import deque
from typing import Iterable, Iterator, Sequence

from .errors import InputValidationError, check_vertex_budget

Edge = tuple[int, int]


def to_mask(vertices: Iterable[int] | int) -> int:
    if isinstance(vertices, int):
        return vertices
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def members(mask: int) -> list[int]:
    return list(iter_bits(mask))


def popcount(mask: int) -> int:
    return bin(mask).count("1")


class Graph:
    __slots__ = ("n", "adj", "_labels", "origin", "_hash")

    def __init__(
        self,
        n: int,
        adj: Sequence[int],
        labels: Sequence[str] | None = None,
        origin: Sequence[int] | None = None,
    ):
        self.n = n
        self.adj = tuple(adj)
        self._labels = None if labels is None else tuple(labels)
        self.origin = tuple(range(n)) if origin is None else tuple(origin)
        self._hash = None

    # -- construction -----------------------------------------------------

    @classmethod
    def from_edges(
        cls, n: int, edges: Iterable[Sequence[int]], labels: Sequence[str] | None = None
    ) -> "Graph":
        if n < 0:
            raise InputValidationError(f"vertex count must be nonnegative, got {n}")
        adj = [0] * n
        for e in edges:
            if len(e) != 2:
                raise InputValidationError(f"edge {e!r} is not a pair")
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise InputValidationError(f"loop edge ({u},{v}) is not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise InputValidationError(f"edge ({u},{v}) out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        if labels is not None and len(labels) != n:
            raise InputValidationError("labels must have one entry per vertex")
        return cls(n, adj, labels)

    # -- basic queries -----------------------------------------------------

    @property
    def labels(self) -> tuple[str, ...]:
        if self._labels is None:
            return tuple(str(i) for i in range(self.n))
        return self._labels

    @property
    def all_mask(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> list[Edge]:
        out = []
        for u in range(self.n):
            for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1)):
                out.append((u, v))
        return out

    @property
    def m(self) -> int:
        return sum(popcount(a) for a in self.adj) // 2

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def neighbors(self, v: int) -> list[int]:
        return members(self.adj[v])

    def closed_neighborhood(self, v: int) -> int:
        return self.adj[v] | (1 << v)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def is_edgeless(self) -> bool:
        return not any(self.adj)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.adj))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"

    # -- derived graphs ----------------------------------------------------

    def complement(self) -> "Graph":
        full = self.all_mask
        adj = [(full ^ a) & ~(1 << v) for v, a in enumerate(self.adj)]
        return Graph(self.n, adj, self._labels)

    def induced_subgraph(self, vertices: Iterable[int] | int) -> "Graph":
        mask = to_mask(vertices)
        if mask >> self.n:
            raise InputValidationError(f"vertex set {members(mask)} not inside 0..{self.n - 1}")
        keep = members(mask)
        index = {v: i for i, v in enumerate(keep)}
        adj = []
        for v in keep:
            a = 0
            for u in iter_bits(self.adj[v] & mask):
                a |= 1 << index[u]
            adj.append(a)
        labels = [self.labels[v] for v in keep]
        return Graph(len(keep), adj, labels, keep)

    def delete_vertices(self, vertices: Iterable[int] | int) -> "Graph":
        mask = to_mask(vertices)
        if mask >> self.n:
            raise InputValidationError(f"vertex set {members(mask)} not inside 0..{self.n - 1}")
        return self.induced_subgraph(self.all_mask & ~mask)

    def delete_vertex(self, w: int) -> "Graph":
        return self.delete_vertices(1 << w)

    def delete_closed_neighborhood(self, w: int) -> "Graph":
        """``G - N_G[w]``."""
        return self.delete_vertices(self.closed_neighborhood(w))

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        adj = [0] * self.n
        for u, v in self.edges():
            adj[perm[u]] |= 1 << perm[v]
            adj[perm[v]] |= 1 << perm[u]
        return Graph(self.n, adj)

    # -- invariants --------------------------------------------------------

    def girth(self) -> float:
        """Length of a shortest cycle; ``math.inf`` for forests."""
        best = math.inf
        for s in range(self.n):
            dist = {s: 0}
            parent = {s: -1}
            queue = deque([s])
            while queue:
                u = queue.popleft()
                if 2 * dist[u] + 1 >= best:
                    break
                for w in iter_bits(self.adj[u]):
                    if w not in dist:
                        dist[w] = dist[u] + 1
                        parent[w] = u
                        queue.append(w)
                    elif parent[u] != w:
                        best = min(best, dist[u] + dist[w] + 1)
        return best

    def connected_components(self) -> list[list[int]]:
        seen = 0
        comps = []
        for s in range(self.n):
            if seen >> s & 1:
                continue
            comp = 1 << s
            frontier = comp
            while frontier:
                nxt = 0
                for v in iter_bits(frontier):
                    nxt |= self.adj[v]
                frontier = nxt & ~comp
                comp |= nxt
            seen |= comp
            comps.append(members(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n > 0 and len(self.connected_components()) == 1

    def independence_number(self) -> int:
        check_vertex_budget(self.n, "independence_number")
        adj = self.adj
        memo: dict[int, int] = {}

        def alpha(rest: int) -> int:
            if not rest:
                return 0
            if rest in memo:
                return memo[rest]
            # isolated vertices of the remainder always join
            iso = 0
            best_v, best_d = -1, -1
            for v in iter_bits(rest):
                d = popcount(adj[v] & rest)
                if d == 0:
                    iso |= 1 << v
                elif d > best_d:
                    best_v, best_d = v, d
            if best_v < 0:
                val = popcount(iso)
            else:
                core = rest & ~iso
                val = popcount(iso) + max(
                    alpha(core & ~(1 << best_v)),
                    1 + alpha(core & ~adj[best_v] & ~(1 << best_v)),
                )
            memo[rest] = val
            return val

        return alpha(self.all_mask)

    def is_independent(self, vertices: Iterable[int] | int) -> bool:
        mask = to_mask(vertices)
        return all(not (self.adj[v] & mask) for v in iter_bits(mask))

    def is_clique(self, vertices: Iterable[int] | int) -> bool:
        mask = to_mask(vertices)
        return all((self.adj[v] | (1 << v)) & mask == mask for v in iter_bits(mask))

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        out = {"n": self.n, "edges": [list(e) for e in self.edges()]}
        if self._labels is not None:
            out["labels"] = {str(i): lab for i, lab in enumerate(self._labels)}
        return out

    @classmethod
    def from_json(cls, data: dict | str) -> "Graph":
        if isinstance(data, str):
            data = json.loads(data)
        n = int(data["n"])
        labels = None
        if data.get("labels"):
            raw = data["labels"]
            labels = [str(raw.get(str(i), i)) for i in range(n)]
        return cls.from_edges(n, data.get("edges", []), labels)

    def to_edgelist(self) -> str:
        edges = self.edges()
        lines = [f"{self.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_edgelist(cls, text: str) -> "Graph":
        rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
        if not rows or len(rows[0]) != 2:
            raise InputValidationError("edge list must start with a line 'n m'")
        n, m = int(rows[0][0]), int(rows[0][1])
        edges = [(int(r[0]), int(r[1])) for r in rows[1:]]
        if len(edges) != m:
            raise InputValidationError(f"header announces {m} edges, found {len(edges)}")
        return cls.from_edges(n, edges)

    def to_graph6(self) -> str:
        return encode_graph6(self)

    @classmethod
    def from_graph6(cls, text: str) -> "Graph":
        return decode_graph6(text)


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    return Graph.from_edges(n, edges)


def disjoint_union(*graphs: Graph) -> Graph:
    adj: list[int] = []
    offset = 0
    for g in graphs:
        adj.extend(a << offset for a in g.adj)
        offset += g.n
    return Graph(offset, adj)


# -- graph6 -------------------------------------------------------------------


def _encode_n(n: int) -> list[int]:
    if n <= 62:
        return [n]
    if n <= 258047:
        return [63] + [(n >> s) & 63 for s in (12, 6, 0)]
    return [63, 63] + [(n >> s) & 63 for s in (30, 24, 18, 12, 6, 0)]


def encode_graph6(g: Graph) -> str:
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(g.adj[i] >> j & 1)
    bits.extend([0] * (-len(bits) % 6))
    values = _encode_n(g.n)
    for k in range(0, len(bits), 6):
        chunk = 0
        for b in bits[k : k + 6]:
            chunk = chunk << 1 | b
        values.append(chunk)
    return "".join(chr(v + 63) for v in values)


def decode_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    if not s:
        raise InputValidationError("empty graph6 string")
    data = [ord(c) - 63 for c in s]
    if any(not 0 <= d <= 63 for d in data):
        raise InputValidationError(f"invalid graph6 character in {s!r}")
    if data[0] < 63:
        n, pos = data[0], 1
    elif len(data) > 1 and data[1] < 63:
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        pos = 4
    else:
        n = 0
        for d in data[2:8]:
            n = n << 6 | d
        pos = 8
    need = (n * (n - 1) // 2 + 5) // 6
    body = data[pos:]
    if len(body) != need:
        raise InputValidationError(f"graph6 body has {len(body)} bytes, expected {need} for n={n}")
    bits = []
    for d in body:
        bits.extend((d >> s) & 1 for s in range(5, -1, -1))
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)


def read_graph(path: str, fmt: str | None = None) -> Graph:
    with open(path) as fh:
        text = fh.read()
    return parse_graph(text, fmt or _guess_format(path, text))


def parse_graph(text: str, fmt: str) -> Graph:
    if fmt == "graph6":
        return decode_graph6(text.strip().splitlines()[0])
    if fmt == "edgelist":
        return Graph.from_edgelist(text)
    if fmt == "json":
        return Graph.from_json(text)
    raise InputValidationError(f"unknown graph format {fmt!r}")


def format_graph(g: Graph, fmt: str) -> str:
    if fmt == "graph6":
        return g.to_graph6() + "\n"
    if fmt == "edgelist":
        return g.to_edgelist()
    if fmt == "json":
        return json.dumps(g.to_json()) + "\n"
    raise InputValidationError(f"unknown graph format {fmt!r}")


def _guess_format(path: str, text: str) -> str:
    if path.endswith(".json") or text.lstrip().startswith("{"):
        return "json"
    if path.endswith((".g6", ".graph6")):
        return "graph6"
    first = text.strip().splitlines()[0] if text.strip() else ""
    if len(first.split()) == 2:
        return "edgelist"
    return "graph6"
