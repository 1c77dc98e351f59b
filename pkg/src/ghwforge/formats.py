"""JSON file formats shared by the CLI.

* field:   ``{"p": 2, "m": 2, "modulus": [1, 1, 1]}`` (constant term first)
* matrix:  ``{"rows": k, "cols": n, "entries": [[...], ...]}``
* code:    ``{"field": {...}, "n": 8, "k": 3, "generator": [[...], ...]}``
* sets:    ``{"n": 8, "sets": [[4, 8], [3, 7], [5, 6]]}`` (1-based)
* curve:   ``{"field": {...}, "cubic": [c300, c210, ...], "line": [a0, a1, a2]}``
* outcome: ``{"status": "feasible", "generator": [[...]]}`` or
           ``{"status": "infeasible", "witness": [1, 2, 3], "dim": 2}``

Field elements are always integer codes.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .codes import LinearCode
from .families import PlaneCubic
from .field import field_from_json
from .linalg import GFMatrix
from .sets import SubsetSystem
from .solver import Feasible, Infeasible, SolveOutcome


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True) + "\n"


def read_json(path: str | Path) -> Any:
    with open(path) as fh:
        return json.load(fh)


def write_json(path: str | Path, obj: Any) -> None:
    Path(path).write_text(dumps(obj))


def load_code(path: str | Path) -> LinearCode:
    return LinearCode.from_json(read_json(path))


def load_sets(path: str | Path) -> SubsetSystem:
    return SubsetSystem.from_json(read_json(path))


def load_curve(path: str | Path, spec=None) -> PlaneCubic:
    return PlaneCubic.from_json(read_json(path), spec)


def outcome_from_json(obj: dict, code: LinearCode) -> SolveOutcome:
    if obj["status"] == "feasible":
        G = GFMatrix.from_rows(code.spec, obj["generator"], code.n)
        return Feasible(G, ())
    if obj["status"] == "infeasible":
        return Infeasible(tuple(obj["witness"]), int(obj["dim"]))
    raise ValueError(f"unknown outcome status {obj['status']!r}")


__all__ = [
    "dumps",
    "field_from_json",
    "load_code",
    "load_curve",
    "load_sets",
    "outcome_from_json",
    "read_json",
    "write_json",
]
