"""Exception types and the desk-scale resource budgets."""

from __future__ import annotations

import os

DEFAULT_VERTEX_BUDGET = 24
DEFAULT_SUBSET_BUDGET = 20


class EILError(Exception):
    """Base class for all library errors."""


class InputValidationError(EILError, ValueError):
    pass


class PreconditionError(EILError, ValueError):
    pass


class ResourceError(EILError):
    """An exact computation would exceed its configured budget."""


class ConsistencyError(EILError):
    """Two independent computations disagree, or a checked bound failed."""


def vertex_budget() -> int:
    return int(os.environ.get("EIL_BUDGET_VERTICES", DEFAULT_VERTEX_BUDGET))


def subset_budget() -> int:
    return int(os.environ.get("EIL_BUDGET_SUBSET", DEFAULT_SUBSET_BUDGET))


def check_vertex_budget(n: int, what: str, budget: int | None = None) -> None:
    limit = vertex_budget() if budget is None else budget
    if n > limit:
        raise ResourceError(f"{what}: {n} vertices exceeds vertex budget {limit}")
