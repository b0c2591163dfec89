"""Graded Betti tables of monomial quotients and Castelnuovo-Mumford regularity.

Two independent routes:

* :func:`betti_table` applies Hochster's formula to a squarefree ideal,
  summing reduced homology of induced subcomplexes of its Stanley-Reisner
  complex.  Vertex sets that are not unions of generator supports are
  skipped: any vertex of W outside every nonface contained in W is a cone
  point of the restriction, which is then acyclic.
* :func:`koszul_betti_table` works on any monomial ideal without
  polarizing.  For each element ``b`` of the lcm lattice it takes the upper
  Koszul complex ``{F squarefree, F <= b : x^(b-F) in I}`` whose reduced
  homology in degree ``i-2`` is the multigraded Betti number of ``S/I`` in
  homological degree ``i``.

Regularity always refers to the ideal unless the name says quotient:
``reg(I) = reg(S/I) + 1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import MonomialIdeal, edge_ideal, ideal_power, polarize, support_mask
from .errors import InputValidationError, PreconditionError, ResourceError, subset_budget
from .graph import Graph, iter_bits, popcount
from .homology import (
    GF2,
    SimplicialComplex,
    check_field,
    homology_from_facets,
    homology_from_layers,
    reduced_homology_dims,
)

HOCHSTER = "hochster"
KOSZUL = "koszul"
METHODS = (HOCHSTER, KOSZUL)
DIRECT = "direct"
DUAL = "dual"


@dataclass
class BettiTable:
    """Graded Betti numbers ``beta_{i,j}`` of a quotient ``S/I``."""

    entries: dict[tuple[int, int], int] = field(default_factory=dict)
    field: str = GF2

    def add(self, i: int, j: int, value: int) -> None:
        if value:
            self.entries[(i, j)] = self.entries.get((i, j), 0) + value

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.entries.get(key, 0)

    @property
    def reg_quotient(self) -> int:
        return max(j - i for i, j in self.entries)

    @property
    def reg_ideal(self) -> int:
        return self.reg_quotient + 1

    @property
    def projective_dimension(self) -> int:
        return max(i for i, _ in self.entries)

    def to_json(self) -> dict:
        return {
            "field": self.field,
            "entries": [[i, j, v] for (i, j), v in sorted(self.entries.items())],
            "reg_quotient": self.reg_quotient,
            "reg_ideal": self.reg_ideal,
        }

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BettiTable):
            return NotImplemented
        return self.entries == other.entries

    def __str__(self) -> str:
        # Macaulay2 layout: row r, column i holds beta_{i, i+r}
        cols = self.projective_dimension + 1
        rows = self.reg_quotient + 1
        width = max(len(str(v)) for v in self.entries.values()) + 1
        lines = [" " * 7 + "".join(f"{i:>{width}}" for i in range(cols))]
        totals = [sum(v for (i, _), v in self.entries.items() if i == c) for c in range(cols)]
        lines.append(f"{'total:':>7}" + "".join(f"{t:>{width}}" for t in totals))
        for r in range(rows):
            cells = [self.entries.get((i, i + r), 0) for i in range(cols)]
            lines.append(f"{str(r) + ':':>7}" + "".join(f"{(c or '.'):>{width}}" for c in cells))
        return "\n".join(lines)


def stanley_reisner(ideal: MonomialIdeal) -> SimplicialComplex:
    if not ideal.is_squarefree():
        raise InputValidationError("Stanley-Reisner complex needs a squarefree ideal")
    return SimplicialComplex.from_nonfaces(ideal.nvars, [support_mask(g) for g in ideal.generators])


def support_unions(supports: list[int]) -> set[int]:
    """All unions of nonempty subfamilies, plus the empty set."""
    out = {0}
    for s in supports:
        out |= {u | s for u in out}
    return out


def betti_table(
    ideal: MonomialIdeal, field: str = GF2, prune: bool = True, strategy: str = DUAL
) -> BettiTable:
    """Hochster's formula for ``S/I`` with ``I`` squarefree.

    ``strategy="direct"`` builds boundary matrices of every restriction
    ``Delta_W``.  ``strategy="dual"`` reads the same numbers off the
    Alexander dual of ``Delta_W`` inside ``W`` (facets ``W - N`` for the
    minimal nonfaces ``N`` in ``W``) after strong collapses; reduced homology
    of the dual in degree e equals that of ``Delta_W`` in degree
    ``|W| - e - 3``.  ``prune=False`` visits every vertex subset.
    """
    check_field(field)
    if strategy not in (DIRECT, DUAL):
        raise InputValidationError(f"unknown strategy {strategy!r}")
    if not ideal.is_squarefree():
        raise InputValidationError("betti_table needs a squarefree ideal; polarize first")
    if ideal.nvars > subset_budget():
        raise ResourceError(f"betti_table: {ideal.nvars} variables exceeds subset budget {subset_budget()}")
    cx = stanley_reisner(ideal)
    table = BettiTable(field=field)
    if prune:
        subsets = sorted(support_unions(list(cx.minimal_nonfaces)))
    else:
        subsets = range(1 << ideal.nvars)
    for w in subsets:
        size = popcount(w)
        if strategy == DIRECT or w == 0:
            for d, h in homology_from_layers(cx.faces(w), field).items():
                table.add(size - d - 1, size, h)
            continue
        dual_facets = [w & ~nf for nf in cx.minimal_nonfaces if nf & w == nf]
        if not dual_facets:
            # Delta_W is the full simplex on W
            continue
        for e, h in homology_from_facets(dual_facets, field).items():
            table.add(e + 2, size, h)
    return table


def lcm_lattice(ideal: MonomialIdeal) -> set[tuple[int, ...]]:
    """LCMs of all nonempty generator subsets."""
    packer = _Packer(ideal)
    return {packer.unpack(b) for b in packer.lcm_lattice()}


class _Packer:
    """Exponent vectors packed into one integer, one bit field per variable.

    Each field has a spare top (guard) bit, so componentwise comparison is a
    single subtraction: no borrow leaves a field whose guard bit was set.
    """

    def __init__(self, ideal: MonomialIdeal):
        top = max((max(g) for g in ideal.generators), default=1)
        self.width = w = max(2, top.bit_length() + 1)
        self.n = ideal.nvars
        self.value_mask = (1 << (w - 1)) - 1
        self.guard = sum(1 << (w * i + w - 1) for i in range(self.n))
        self.low = sum(self.value_mask << (w * i) for i in range(self.n))
        self.gens = [self.pack(g) for g in ideal.generators]

    def pack(self, e) -> int:
        return sum(x << (self.width * i) for i, x in enumerate(e))

    def unpack(self, b: int) -> tuple[int, ...]:
        w, m = self.width, self.value_mask
        return tuple((b >> (w * i)) & m for i in range(self.n))

    def degree(self, b: int) -> int:
        return sum(self.unpack(b))

    def lcm_lattice(self) -> set[int]:
        guard, shift, vm = self.guard, self.width - 1, self.value_mask
        out: set[int] = set()
        for g in self.gens:
            new = {g}
            for a in out:
                ge = (((a | guard) - g) & guard) >> shift
                fm = ge * vm
                new.add((a & fm) | (g & ~fm))
            out |= new
        return out

    def koszul_facets(self, b: int) -> list[int]:
        """Maximal faces of the upper Koszul complex at ``b`` (guard-bit masks)."""
        guard, low = self.guard, self.low
        bg = b | guard
        out = []
        for g in self.gens:
            d = bg - g
            if d & guard == guard:
                out.append(((d & low) + low) & guard)
        return out


def koszul_betti_table(ideal: MonomialIdeal, field: str = GF2) -> BettiTable:
    """Betti table of ``S/I`` for any monomial ideal, no polarization needed."""
    check_field(field)
    table = BettiTable(field=field)
    table.add(0, 0, 1)
    if ideal.is_zero():
        return table
    packer = _Packer(ideal)
    for b in packer.lcm_lattice():
        deg = packer.degree(b)
        for e, h in homology_from_facets(packer.koszul_facets(b), field).items():
            table.add(e + 2, deg, h)
    return table


@dataclass
class RegularityResult:
    reg_ideal: int
    table: BettiTable
    polarized_variables: int
    method: str

    @property
    def reg_quotient(self) -> int:
        return self.reg_ideal - 1

    def to_json(self) -> dict:
        out = self.table.to_json()
        out["polarized_variables"] = self.polarized_variables
        out["method"] = self.method
        return out


def power_betti_table(
    g: Graph, s: int, field: str = GF2, method: str = HOCHSTER, budget: int | None = None
) -> RegularityResult:
    if g.is_edgeless():
        raise PreconditionError("regularity of the zero ideal is not defined")
    if method not in METHODS:
        raise InputValidationError(f"unknown method {method!r}; expected one of {METHODS}")
    power = ideal_power(edge_ideal(g), s)
    # polarized variable count = sum of per-variable maximal exponents
    npol = sum(power.max_exponents())
    limit = subset_budget() if budget is None else budget
    if npol > limit:
        raise ResourceError(f"reg(I^{s}): polarized power has {npol} variables, subset budget {limit}")
    if method == HOCHSTER:
        pol, _ = polarize(power)
        table = betti_table(pol, field)
    else:
        table = koszul_betti_table(power, field)
    return RegularityResult(table.reg_ideal, table, npol, method)


def regularity_of_power(
    g: Graph, s: int, field: str = GF2, method: str = HOCHSTER, budget: int | None = None
) -> int:
    """``reg(I(G)^s)`` of the ideal (quotient regularity plus one)."""
    return power_betti_table(g, s, field, method, budget).reg_ideal


def independence_complex(g: Graph) -> SimplicialComplex:
    return SimplicialComplex.from_nonfaces(g.n, [(1 << u) | (1 << v) for u, v in g.edges()])


def edge_ideal_regularity_direct(g: Graph, field: str = GF2) -> int:
    """``reg(I(G))`` as 1 + max(d + 1) over induced subcomplexes of the
    independence complex with nonzero reduced homology in dimension d,
    visiting every vertex subset with no pruning."""
    if g.is_edgeless():
        raise PreconditionError("graph has no edge")
    if g.n > subset_budget():
        raise ResourceError(f"{g.n} vertices exceeds subset budget {subset_budget()}")
    cx = independence_complex(g)
    best = 0
    for w in range(1, 1 << g.n):
        dims = reduced_homology_dims(cx, w, field)
        if dims:
            best = max(best, max(dims) + 1)
    return best + 1
