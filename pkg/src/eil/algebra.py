"""Monomial ideals: edge ideals, powers, polarization."""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InputValidationError, ResourceError
from .graph import Graph

Exponents = tuple[int, ...]

DEFAULT_GENERATOR_BUDGET = 20000


def generator_budget() -> int:
    return int(os.environ.get("EIL_BUDGET_GENERATORS", DEFAULT_GENERATOR_BUDGET))


def divides(a: Exponents, b: Exponents) -> bool:
    return all(x <= y for x, y in zip(a, b))


def lcm(a: Exponents, b: Exponents) -> Exponents:
    return tuple(max(x, y) for x, y in zip(a, b))


def minimalize(gens: Iterable[Exponents]) -> tuple[Exponents, ...]:
    """Minimal generating antichain under divisibility."""
    ordered = sorted(set(gens), key=lambda e: (sum(e), e))
    kept: list[Exponents] = []
    for g in ordered:
        if not any(divides(k, g) for k in kept):
            kept.append(g)
    return tuple(sorted(kept))


@dataclass(frozen=True)
class MonomialIdeal:
    """Ideal generated by the monomials ``x^e`` for ``e`` in ``generators``.

    Exponent vectors are dense over ``variables``.  Construct through
    :meth:`create` to get a minimal generating set.
    """

    variables: tuple[str, ...]
    generators: tuple[Exponents, ...]

    @classmethod
    def create(cls, variables: Sequence[str], gens: Iterable[Sequence[int]]) -> "MonomialIdeal":
        variables = tuple(variables)
        cleaned = []
        for g in gens:
            g = tuple(int(x) for x in g)
            if len(g) != len(variables):
                raise InputValidationError(f"exponent vector {g} does not match {len(variables)} variables")
            if any(x < 0 for x in g):
                raise InputValidationError(f"negative exponent in {g}")
            cleaned.append(g)
        return cls(variables, minimalize(cleaned))

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def is_zero(self) -> bool:
        return not self.generators

    def is_squarefree(self) -> bool:
        return all(x <= 1 for g in self.generators for x in g)

    def degrees(self) -> list[int]:
        return [sum(g) for g in self.generators]

    def max_exponents(self) -> list[int]:
        return [max((g[i] for g in self.generators), default=0) for i in range(self.nvars)]

    def contains_monomial(self, e: Sequence[int]) -> bool:
        return any(divides(g, e) for g in self.generators)

    def format_generator(self, g: Exponents) -> str:
        parts = []
        for name, x in zip(self.variables, g):
            if x == 1:
                parts.append(name)
            elif x > 1:
                parts.append(f"{name}^{x}")
        return "*".join(parts) or "1"

    def __str__(self) -> str:
        return "(" + ", ".join(self.format_generator(g) for g in self.generators) + ")"

    def to_json(self) -> dict:
        return {
            "variables": list(self.variables),
            "generators": [
                {self.variables[i]: x for i, x in enumerate(g) if x} for g in self.generators
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "MonomialIdeal":
        variables = list(data["variables"])
        pos = {v: i for i, v in enumerate(variables)}
        gens = []
        for mono in data["generators"]:
            e = [0] * len(variables)
            for name, x in mono.items():
                e[pos[name]] = int(x)
            gens.append(e)
        return cls.create(variables, gens)


def edge_ideal(g: Graph) -> MonomialIdeal:
    variables = tuple(f"x{i}" for i in range(g.n))
    gens = []
    for u, v in g.edges():
        e = [0] * g.n
        e[u] = e[v] = 1
        gens.append(tuple(e))
    return MonomialIdeal(variables, tuple(sorted(gens)))


def ideal_product(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    if a.variables != b.variables:
        raise InputValidationError("ideals live in different rings")
    prods = {tuple(x + y for x, y in zip(p, q)) for p in a.generators for q in b.generators}
    if len(prods) > generator_budget():
        raise ResourceError(f"product has {len(prods)} candidate generators, budget {generator_budget()}")
    return MonomialIdeal(a.variables, minimalize(prods))


def ideal_power(ideal: MonomialIdeal, s: int) -> MonomialIdeal:
    if s < 1:
        raise InputValidationError(f"power must be >= 1, got {s}")
    out = ideal
    for _ in range(s - 1):
        out = ideal_product(out, ideal)
    return out


def polarize(ideal: MonomialIdeal) -> tuple[MonomialIdeal, list[tuple[int, int]]]:
    """Squarefree polarization.

    Variable ``x`` of maximal exponent ``d`` becomes ``x_1..x_d``; the factor
    ``x^e`` becomes ``x_1...x_e``.  The returned map sends each new variable
    index to ``(old variable index, copy number)``.
    """
    maxes = ideal.max_exponents()
    varmap: list[tuple[int, int]] = []
    names: list[str] = []
    start: list[int] = []
    for i, d in enumerate(maxes):
        start.append(len(varmap))
        for k in range(1, d + 1):
            varmap.append((i, k))
            names.append(f"{ideal.variables[i]}_{k}")
    if ideal.is_squarefree():
        # identity up to dropping unused variables
        names = [ideal.variables[i] for i, _ in varmap]
    gens = []
    for g in ideal.generators:
        e = [0] * len(varmap)
        for i, x in enumerate(g):
            for k in range(x):
                e[start[i] + k] = 1
        gens.append(tuple(e))
    return MonomialIdeal(tuple(names), tuple(sorted(gens))), varmap


def support_mask(e: Exponents) -> int:
    mask = 0
    for i, x in enumerate(e):
        if x:
            mask |= 1 << i
    return mask
