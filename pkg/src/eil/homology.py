"""Simplicial complexes given by minimal nonfaces, and their reduced homology
over GF(2) or the rationals."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable

from .errors import InputValidationError, ResourceError, subset_budget
from .graph import iter_bits, members, popcount

GF2 = "gf2"
RATIONAL = "rational"
FIELDS = (GF2, RATIONAL)


def check_field(field: str) -> str:
    if field not in FIELDS:
        raise InputValidationError(f"unknown field {field!r}; expected one of {FIELDS}")
    return field


@dataclass(frozen=True)
class SimplicialComplex:
    """Complex on vertices ``0..nverts-1``: a set is a face iff it contains no
    minimal nonface.  Nonfaces are bitmasks and form an antichain."""

    nverts: int
    minimal_nonfaces: tuple[int, ...]

    @classmethod
    def from_nonfaces(cls, nverts: int, nonfaces: Iterable[int | Iterable[int]]) -> "SimplicialComplex":
        masks = set()
        for f in nonfaces:
            masks.add(f if isinstance(f, int) else sum(1 << v for v in f))
        ordered = sorted(masks, key=popcount)
        kept: list[int] = []
        for m in ordered:
            if not any(k & m == k for k in kept):
                kept.append(m)
        return cls(nverts, tuple(sorted(kept)))

    def is_face(self, face: int) -> bool:
        return not any(nf & face == nf for nf in self.minimal_nonfaces)

    def faces(self, within: int | None = None) -> list[list[int]]:
        """Faces of the induced subcomplex on ``within`` grouped by size.

        ``result[k]`` lists the faces with k vertices (so ``result[0] == [0]``).
        """
        within = (1 << self.nverts) - 1 if within is None else within
        relevant = [nf for nf in self.minimal_nonfaces if nf & within == nf]
        # nonfaces whose largest vertex is v, checked when v is added
        by_top: dict[int, list[int]] = {}
        for nf in relevant:
            by_top.setdefault(nf.bit_length() - 1, []).append(nf)
        verts = members(within)
        layers: list[list[int]] = [[0]]

        def extend(face: int, start: int, size: int) -> None:
            for idx in range(start, len(verts)):
                v = verts[idx]
                cand = face | (1 << v)
                if any(nf & cand == nf for nf in by_top.get(v, ())):
                    continue
                if len(layers) <= size + 1:
                    layers.append([])
                layers[size + 1].append(cand)
                extend(cand, idx + 1, size + 1)

        extend(0, 0, 0)
        return layers


def _rank_gf2(rows: list[int]) -> int:
    basis: dict[int, int] = {}
    rank = 0
    for r in rows:
        while r:
            top = r.bit_length() - 1
            if top in basis:
                r ^= basis[top]
            else:
                basis[top] = r
                rank += 1
                break
    return rank


def _rank_rational(rows: list[dict[int, int]]) -> int:
    """Exact rank over Q by integer row reduction with content removal."""
    pivots: dict[int, dict[int, int]] = {}
    rank = 0
    for row in rows:
        row = dict(row)
        while row:
            col = max(row)
            piv = pivots.get(col)
            if piv is None:
                pivots[col] = row
                rank += 1
                break
            a, b = piv[col], row[col]
            new: dict[int, int] = {}
            for k in set(row) | set(piv):
                val = a * row.get(k, 0) - b * piv.get(k, 0)
                if val:
                    new[k] = val
            if new:
                g = 0
                for val in new.values():
                    g = gcd(g, val)
                if g > 1:
                    new = {k: v // g for k, v in new.items()}
            row = new
    return rank


def boundary_ranks(layers: list[list[int]], field: str) -> list[int]:
    """``ranks[k]`` = rank of the boundary map from k-vertex faces to
    (k-1)-vertex faces (``ranks[0] = 0``)."""
    ranks = [0] * (len(layers) + 1)
    for k in range(1, len(layers)):
        lower = {f: i for i, f in enumerate(layers[k - 1])}
        if field == GF2:
            rows = []
            for f in layers[k]:
                r = 0
                for v in iter_bits(f):
                    r |= 1 << lower[f & ~(1 << v)]
                rows.append(r)
            ranks[k] = _rank_gf2(rows)
        else:
            drows = []
            for f in layers[k]:
                r = {}
                for pos, v in enumerate(iter_bits(f)):
                    r[lower[f & ~(1 << v)]] = -1 if pos % 2 else 1
                drows.append(r)
            ranks[k] = _rank_rational(drows)
    return ranks


def homology_from_layers(layers: list[list[int]], field: str) -> dict[int, int]:
    ranks = boundary_ranks(layers, field)
    out = {}
    for k in range(len(layers)):
        # k-vertex faces have dimension k-1
        h = len(layers[k]) - ranks[k] - ranks[k + 1]
        if h:
            out[k - 1] = h
    return out


def reduced_homology_dims(
    cx: SimplicialComplex, within: int | Iterable[int] | None = None, field: str = GF2
) -> dict[int, int]:
    """Nonzero reduced Betti numbers of the induced subcomplex, by dimension."""
    check_field(field)
    if within is None:
        within = (1 << cx.nverts) - 1
    elif not isinstance(within, int):
        within = sum(1 << v for v in within)
    if popcount(within) > subset_budget():
        raise ResourceError(f"homology on {popcount(within)} vertices exceeds subset budget {subset_budget()}")
    return homology_from_layers(cx.faces(within), field)


def reduced_euler_characteristic(layers: list[list[int]]) -> int:
    return sum((-1) ** (k - 1) * len(faces) for k, faces in enumerate(layers))


def homology_euler(dims: dict[int, int]) -> int:
    return sum((-1) ** d * h for d, h in dims.items())


# -- complexes given by facets --------------------------------------------------


def maximal_sets(sets: Iterable[int]) -> list[int]:
    ordered = sorted(set(sets), key=lambda x: -popcount(x))
    out: list[int] = []
    for s in ordered:
        if not any(o & s == s for o in out):
            out.append(s)
    return out


def strong_core(facets: Iterable[int]) -> list[int]:
    """Remove dominated vertices until none is left.

    Vertex v is dominated when the facets containing v share another vertex;
    deleting v is a strong collapse, so the homotopy type is unchanged.
    """
    facets = maximal_sets(facets)
    while len(facets) > 1:
        verts = 0
        for f in facets:
            verts |= f
        for v in iter_bits(verts):
            bit = 1 << v
            common = -1
            for f in facets:
                if f & bit:
                    common &= f
            if common & ~bit:
                facets = maximal_sets(f & ~bit for f in facets)
                break
        else:
            break
    return facets


def faces_from_facets(facets: list[int]) -> list[list[int]]:
    seen = set()
    for f in facets:
        sub = f
        while True:
            seen.add(sub)
            if not sub:
                break
            sub = (sub - 1) & f
    layers: list[list[int]] = [[] for _ in range(max(popcount(f) for f in facets) + 1)]
    for s in seen:
        layers[popcount(s)].append(s)
    return layers


def nerve_layers(facets: list[int]) -> list[list[int]]:
    """Faces of the nerve of the facet cover (subfamilies with a common vertex)."""
    layers: list[list[int]] = [[0]]
    k = len(facets)

    def extend(face: int, common: int, start: int, size: int) -> None:
        for i in range(start, k):
            meet = common & facets[i]
            if meet:
                cand = face | (1 << i)
                if len(layers) <= size + 1:
                    layers.append([])
                layers[size + 1].append(cand)
                extend(cand, meet, i + 1, size + 1)

    extend(0, -1, 0, 0)
    return layers


def homology_from_facets(facets: Iterable[int], field: str = GF2) -> dict[int, int]:
    """Reduced homology of the complex generated by ``facets`` (nonvoid)."""
    core = strong_core(facets)
    if not core:
        raise InputValidationError("void complex has no reduced homology convention here")
    if len(core) == 1:
        return {} if core[0] else {-1: 1}
    # nerve lemma: the facet nerve has the same homotopy type
    direct = sum(1 << popcount(f) for f in core)
    if len(core) < 20 and (1 << len(core)) < direct:
        return homology_from_layers(nerve_layers(core), field)
    return homology_from_layers(faces_from_facets(core), field)
