"""Enumeration budget shared by every exhaustive search."""

from __future__ import annotations

import os

from .errors import TooLarge

DEFAULT_BUDGET = 10**7


def get_budget() -> int:
    """Visited-state cap; ``GHWFORGE_BUDGET`` overrides the default."""
    raw = os.environ.get("GHWFORGE_BUDGET")
    if raw:
        return int(float(raw))
    return DEFAULT_BUDGET


def require(states: int, what: str, budget: int | None = None) -> None:
    cap = get_budget() if budget is None else budget
    if states > cap:
        raise TooLarge(f"{what}: {states} states exceeds budget {cap}")
