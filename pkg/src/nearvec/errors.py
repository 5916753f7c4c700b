"""Shared exception types and budget configuration.

The environment variable ``NEARVEC_BUDGET`` overrides both the enumeration
budget (number of sequences a brute-force classification may visit) and the
verification budget (number of field evaluations an exhaustive check may
perform).
"""

from __future__ import annotations

import os

DEFAULT_ENUMERATION_BUDGET = 10_000_000
DEFAULT_VERIFICATION_BUDGET = 1 << 24

_ENV_BUDGET = "NEARVEC_BUDGET"


class BudgetExceededError(RuntimeError):
    """An enumeration or verification would exceed its configured budget."""

    def __init__(self, message: str, required: int, budget: int):
        super().__init__(message)
        self.required = required
        self.budget = budget


class NotIsomorphicError(ValueError):
    """A witness was requested for a pair that is not isomorphic."""


def _env_budget() -> int | None:
    raw = os.environ.get(_ENV_BUDGET)
    if raw is None or not raw.strip():
        return None
    try:
        value = int(raw)
    except ValueError as exc:
        raise ValueError(f"{_ENV_BUDGET} must be an integer, got {raw!r}") from exc
    if value < 1:
        raise ValueError(f"{_ENV_BUDGET} must be positive, got {value}")
    return value


def enumeration_budget(override: int | None = None) -> int:
    if override is not None:
        return override
    return _env_budget() or DEFAULT_ENUMERATION_BUDGET


def verification_budget(override: int | None = None) -> int:
    if override is not None:
        return override
    return _env_budget() or DEFAULT_VERIFICATION_BUDGET
