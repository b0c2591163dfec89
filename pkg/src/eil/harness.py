"""Bound checks for reg(I(G)^s), hereditary vertex witnesses, and scans."""

from __future__ import annotations

import json
import math
import os
import random
from concurrent.futures import ProcessPoolExecutor
from contextlib import contextmanager
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterator

from .betti import HOCHSTER, regularity_of_power
from .cochordal import cochord_number
from .enumeration import connected_graphs, random_forest, random_graph
from .errors import ConsistencyError, EILError, PreconditionError, ResourceError
from .graph import Graph
from .homology import FIELDS, GF2, RATIONAL, check_field
from .matchings import (
    ind_match_k2c5,
    induced_matching_number,
    matching_number,
    min_match_k2c5,
    min_maximal_matching_number,
)
from .structure import build_gn, build_hn, build_standard, figure2_candidate, is_cm_girth5, whisker

HOLDS = "holds"
VIOLATED = "violated"
SKIPPED = "skipped-over-budget"


@dataclass
class Check:
    id: str
    lhs: int | None
    relation: str
    rhs: int | list[int] | None
    status: str
    engines: list[str]
    note: str = ""

    def to_json(self) -> dict:
        return asdict(self)


@dataclass
class BoundsReport:
    graph: dict
    s: int
    field: str
    invariants: dict
    reg: dict
    checks: list[Check]
    reg_lower: int | None = None

    @property
    def violations(self) -> list[Check]:
        return [c for c in self.checks if c.status == VIOLATED]

    def to_json(self) -> dict:
        return {
            "graph": self.graph,
            "s": self.s,
            "field": self.field,
            "invariants": self.invariants,
            "reg": self.reg,
            "reg_lower": self.reg_lower,
            "checks": [c.to_json() for c in self.checks],
        }


def describe(g: Graph, **extra) -> dict:
    out = {"graph6": g.to_graph6(), "n": g.n, "m": g.m}
    out.update(extra)
    return out


def _guarded(fn: Callable, *args):
    try:
        return fn(*args)
    except ResourceError:
        return None


def compute_invariants(g: Graph) -> tuple[dict, dict]:
    """Every graph invariant the bounds use; None marks an over-budget value.

    Also returns the induced {K2,C5} witness (or None) for sub-computations.
    """
    inv: dict = {}
    inv["match"] = _guarded(matching_number, g)
    inv["min_match"] = _guarded(min_maximal_matching_number, g)
    inv["ind_match"] = _guarded(induced_matching_number, g)
    ik = _guarded(ind_match_k2c5, g)
    inv["ind_match_k2c5"] = ik[0] if ik else None
    mk = _guarded(min_match_k2c5, g)
    inv["min_match_k2c5"] = mk[0] if mk else None
    cc = _guarded(cochord_number, g)
    inv["cochord"] = cc[0] if cc else None
    girth = g.girth()
    inv["girth"] = None if girth == math.inf else girth
    inv["independence_number"] = _guarded(g.independence_number)
    if g.n and g.is_connected() and girth >= 5:
        inv["is_cm_girth5"] = _guarded(is_cm_girth5, g)
    return inv, {"ind_match_k2c5": ik[1] if ik else None}


def _compare(lhs, relation, rhs) -> bool:
    if relation == ">=":
        return lhs >= rhs
    if relation == "<=":
        return lhs <= rhs
    if relation == "==":
        return lhs == rhs
    if relation == "in":
        return lhs in rhs
    raise ValueError(relation)


def evaluate_bounds(
    g: Graph,
    s: int,
    field: str = GF2,
    method: str = HOCHSTER,
    budget: int | None = None,
    cross_field: bool = False,
    name: str | None = None,
) -> BoundsReport:
    """Compute the invariants and reg(I(G)^s) and evaluate checks (a)-(h).

    Checks whose hypothesis fails are omitted.  When reg is over budget,
    lower-bound checks may still be certified from the regularity of the
    induced {K2,C5} witness, a lower bound for reg(I(G)^s).
    """
    check_field(field)
    if s < 1:
        raise PreconditionError(f"power must be >= 1, got {s}")
    extra = {"name": name} if name else {}
    inv, witnesses = compute_invariants(g)
    report = BoundsReport(describe(g, **extra), s, field, inv, {}, [])
    if g.is_edgeless():
        report.reg[field] = None
        return report

    reg = _guarded(regularity_of_power, g, s, field, method, budget)
    report.reg[field] = reg
    if cross_field:
        other = RATIONAL if field == GF2 else GF2
        reg2 = _guarded(regularity_of_power, g, s, other, method, budget)
        report.reg[other] = reg2
        _add(report, "field_agreement", reg, "==", reg2, [f"regularity[{field}]", f"regularity[{other}]"])

    lower = reg
    if reg is None and witnesses["ind_match_k2c5"] is not None:
        h = g.induced_subgraph(witnesses["ind_match_k2c5"].vertex_mask)
        lower = _guarded(regularity_of_power, h, s, field, method, budget)
        report.reg_lower = lower

    def rhs(key: str, offset: int):
        v = inv.get(key)
        return None if v is None else 2 * s + v + offset

    ik = inv["ind_match_k2c5"]
    _add_lower(report, "a", reg, lower, rhs("ind_match", -1), ["regularity", "ind_match"])
    _add_lower(report, "b", reg, lower, rhs("ind_match_k2c5", -2), ["regularity", "ind_match_k2c5"])
    if ik is not None and ik % 2 == 1:
        _add_lower(report, "c", reg, lower, rhs("ind_match_k2c5", -1), ["regularity", "ind_match_k2c5"])
    _add(report, "d", reg, "<=", rhs("cochord", -1), ["regularity", "cochord"])
    _add(report, "e", reg, "<=", rhs("min_match_k2c5", -1), ["regularity", "min_match_k2c5"])
    _add(report, "f", reg, "<=", rhs("min_match", -1), ["regularity", "min_match"])
    if inv["ind_match"] is not None and inv["ind_match"] == inv["min_match"]:
        _add(report, "g", reg, "==", rhs("ind_match", -1), ["regularity", "ind_match", "min_match"])
    if inv.get("is_cm_girth5") and ik is not None:
        _add(report, "h", reg, "in", [2 * s + ik - 2, 2 * s + ik - 1], ["regularity", "ind_match_k2c5", "pc_membership"])
    return report


def _add(report: BoundsReport, cid: str, lhs, relation: str, rhs, engines: list[str]) -> None:
    if lhs is None or rhs is None:
        status = SKIPPED
    else:
        status = HOLDS if _compare(lhs, relation, rhs) else VIOLATED
    report.checks.append(Check(cid, lhs, relation, rhs, status, engines))


def _add_lower(report: BoundsReport, cid: str, reg, lower, rhs, engines: list[str]) -> None:
    if reg is not None or rhs is None or lower is None or lower < rhs:
        _add(report, cid, reg, ">=", rhs, engines)
        return
    # reg >= lower >= rhs, certified without the full computation
    report.checks.append(Check(cid, lower, ">=", rhs, HOLDS, engines, "lhs is a lower bound from an induced subgraph"))


# -- hereditary witnesses --------------------------------------------------------


def _f_cochord(g: Graph) -> int:
    return cochord_number(g)[0] + 1


def _f_minmatch(g: Graph) -> int:
    return min_maximal_matching_number(g) + 1


def _f_minmatch_k2c5(g: Graph) -> int:
    return min_match_k2c5(g)[0] + 1


HEREDITARY_INVARIANTS: dict[str, Callable[[Graph], int]] = {
    "cochord+1": _f_cochord,
    "minmatch+1": _f_minmatch,
    "minmatch_k2c5+1": _f_minmatch_k2c5,
}

LEMMA_ALIASES = {
    "cochord": "cochord+1",
    "minmatch": "minmatch+1",
    "minmatch-k2c5": "minmatch_k2c5+1",
}


def _invariant_fn(invariant_id: str) -> Callable[[Graph], int]:
    invariant_id = LEMMA_ALIASES.get(invariant_id, invariant_id)
    try:
        return HEREDITARY_INVARIANTS[invariant_id]
    except KeyError:
        raise PreconditionError(f"unknown invariant {invariant_id!r}; expected one of {sorted(HEREDITARY_INVARIANTS)}")


def hereditary_witness_search(g: Graph, invariant_id: str) -> tuple[int, dict]:
    """First vertex w (by id) with f(G-w) <= f(G) and f(G-N[w]) <= f(G) - 1.

    The strict drop implies the weaker ``max(f(G) - 1, 2)`` condition; both are
    recorded.  Raises :class:`ConsistencyError` when no vertex qualifies.
    """
    f = _invariant_fn(invariant_id)
    invariant_id = LEMMA_ALIASES.get(invariant_id, invariant_id)
    if g.is_edgeless():
        raise PreconditionError("hereditary witness search needs a graph with an edge")
    fg = f(g)
    for w in range(g.n):
        f_closed = f(g.delete_closed_neighborhood(w))
        if f_closed > fg - 1:
            continue
        f_del = f(g.delete_vertex(w))
        if f_del > fg:
            continue
        return w, {
            "invariant": invariant_id,
            "w": w,
            "label": g.labels[w],
            "f_G": fg,
            "f_G_minus_w": f_del,
            "f_G_minus_closed_nbhd": f_closed,
            "deletion_condition": f_del <= fg,
            "closed_nbhd_condition": f_closed <= max(fg - 1, 2),
            "strict_drop": f_closed <= fg - 1,
        }
    raise ConsistencyError(f"no vertex witness for {invariant_id} on {g.to_graph6()} (f(G) = {fg})")


def deletion_monotonicity_failures(g: Graph, invariant_id: str = "minmatch_k2c5+1") -> list[int]:
    """Vertices w with f(G-w) > f(G)."""
    f = _invariant_fn(invariant_id)
    fg = f(g)
    return [w for w in range(g.n) if f(g.delete_vertex(w)) > fg]


def disjoint_union_lower_check(a: Graph, b: Graph, s: int, field: str = GF2, method: str = HOCHSTER) -> dict:
    """reg(I(A+B)^s) >= reg(I(A)^s) + reg(I(B)) - 1, all three exact."""
    union = build_standard("disjoint_union", [a, b])
    lhs = regularity_of_power(union, s, field, method)
    ra = regularity_of_power(a, s, field, method)
    rb = regularity_of_power(b, 1, field, method)
    rhs = ra + rb - 1
    return {
        "A": a.to_graph6(),
        "B": b.to_graph6(),
        "s": s,
        "field": field,
        "reg_union_s": lhs,
        "reg_A_s": ra,
        "reg_B": rb,
        "rhs": rhs,
        "holds": lhs >= rhs,
    }


# -- scans ------------------------------------------------------------------------

FAMILY_DEFAULT_SIZES = {
    "cycle": range(3, 9),
    "path": range(2, 9),
    "complete": range(2, 6),
    "hn": range(1, 4),
    "whisker-hn": range(1, 2),
    "gn": range(1, 2),
}


def family_graphs(name: str, sizes=None) -> list[tuple[str, Graph]]:
    if name not in FAMILY_DEFAULT_SIZES:
        raise PreconditionError(f"unknown family {name!r}; expected one of {sorted(FAMILY_DEFAULT_SIZES)}")
    sizes = FAMILY_DEFAULT_SIZES[name] if sizes is None else sizes
    out = []
    for k in sizes:
        if name in ("cycle", "path", "complete"):
            out.append((f"{name}({k})", build_standard(name, k)))
        elif name == "hn":
            out.append((f"H_{k}", build_hn(k)))
        elif name == "whisker-hn":
            out.append((f"W(H_{k})", whisker(build_hn(k))))
        else:
            h, u, _, _ = figure2_candidate()
            out.append((f"G_{k}", build_gn(h, u, k, 0)))
    return out


@dataclass
class ScanConfig:
    mode: str  # exhaustive | random | family
    n: int = 0
    seed: int | None = None
    count: int = 0
    family: str | None = None
    family_sizes: list[int] | None = None
    s_values: list[int] = field(default_factory=lambda: [1])
    field: str = GF2
    method: str = HOCHSTER
    vertex_budget: int | None = None
    subset_budget: int | None = None
    output: str | None = None
    workers: int = 1
    edge_probability: float = 0.5
    forests: bool = False

    def to_json(self) -> dict:
        return asdict(self)


def scan_graphs(config: ScanConfig) -> list[tuple[dict, Graph]]:
    """Deterministic (descriptor extras, graph) list for a config."""
    if config.mode == "exhaustive":
        return [({"index": i}, g) for i, g in enumerate(
            g for k in range(1, config.n + 1) for g in connected_graphs(k))]
    if config.mode == "random":
        if config.seed is None:
            raise PreconditionError("random scans need a seed")
        rng = random.Random(config.seed)
        out = []
        for i in range(config.count):
            if config.forests:
                g = random_forest(rng, config.n)
            else:
                g = random_graph(rng, config.n, config.edge_probability)
            out.append(({"seed": config.seed, "index": i}, g))
        return out
    if config.mode == "family":
        return [({"name": nm}, g) for nm, g in family_graphs(config.family, config.family_sizes)]
    raise PreconditionError(f"unknown scan mode {config.mode!r}")


@contextmanager
def _budgets(config: ScanConfig):
    saved = {}
    for key, value in (("EIL_BUDGET_VERTICES", config.vertex_budget), ("EIL_BUDGET_SUBSET", config.subset_budget)):
        if value is not None:
            saved[key] = os.environ.get(key)
            os.environ[key] = str(value)
    try:
        yield
    finally:
        for key, old in saved.items():
            if old is None:
                os.environ.pop(key, None)
            else:
                os.environ[key] = old


def _scan_task(task) -> dict:
    extra, g6, s, fld, method = task
    g = Graph.from_graph6(g6)
    report = evaluate_bounds(g, s, fld, method)
    report.graph.update(extra)
    return report.to_json()


def is_strict_gap(report: dict) -> bool:
    """Both 2s+ind-match-1 < reg and reg < 2s+cochord-1, certified exactly."""
    reg = report["reg"].get(report["field"])
    inv = report["invariants"]
    if reg is None or inv.get("ind_match") is None or inv.get("cochord") is None:
        return False
    s = report["s"]
    return 2 * s + inv["ind_match"] - 1 < reg < 2 * s + inv["cochord"] - 1


def iter_scan(config: ScanConfig) -> Iterator[dict]:
    check_field(config.field)
    tasks = [(extra, g.to_graph6(), s, config.field, config.method)
             for extra, g in scan_graphs(config) for s in config.s_values]
    with _budgets(config):
        if config.workers > 1:
            with ProcessPoolExecutor(config.workers) as pool:
                # map preserves submission order
                yield from pool.map(_scan_task, tasks)
        else:
            for t in tasks:
                yield _scan_task(t)


def summarize(reports: list[dict], config: ScanConfig) -> dict:
    counts = {HOLDS: 0, VIOLATED: 0, SKIPPED: 0}
    violations = []
    for r in reports:
        for c in r["checks"]:
            counts[c["status"]] += 1
            if c["status"] == VIOLATED:
                violations.append({"graph": r["graph"], "s": r["s"], "check": c})
    return {
        "summary": True,
        "config": config.to_json(),
        "reports": len(reports),
        "checks": counts,
        "violations": violations,
        "strict_gap_candidates": [{"graph": r["graph"], "s": r["s"]} for r in reports if is_strict_gap(r)],
    }


def scan(config: ScanConfig, sink=None) -> dict:
    """Run a scan, writing JSON lines (reports then summary) to ``config.output``
    or ``sink``; returns the summary."""
    handle = None
    if config.output:
        handle = open(config.output, "w")
        sink = handle
    try:
        reports = []
        for r in iter_scan(config):
            reports.append(r)
            if sink is not None:
                sink.write(json.dumps(r, sort_keys=True) + "\n")
        summary = summarize(reports, config)
        if sink is not None:
            sink.write(json.dumps(summary, sort_keys=True) + "\n")
        return summary
    finally:
        if handle is not None:
            handle.close()


__all__ = [
    "BoundsReport", "Check", "ScanConfig", "evaluate_bounds", "hereditary_witness_search",
    "deletion_monotonicity_failures", "disjoint_union_lower_check", "scan", "iter_scan",
    "family_graphs", "summarize", "is_strict_gap", "HOLDS", "VIOLATED", "SKIPPED", "FIELDS",
    "EILError",
]
