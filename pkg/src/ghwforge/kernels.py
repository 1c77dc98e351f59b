"""Kernel dispatch: compiled Cython core when importable, pure Python otherwise.

Set ``GHWFORGE_PURE=1`` to force the Python kernels.  Both back ends return
identical results; the compiled one only applies to fields small enough for
``q*q`` lookup tables and to supports that fit a 64-bit mask.
"""

from __future__ import annotations

import os

import numpy as np

from . import _pykernels
from .field import FieldSpec

try:
    from . import _ckernels
except ImportError:  # pragma: no cover - depends on the build
    _ckernels = None

HAVE_COMPILED = _ckernels is not None


def backend() -> str:
    if _ckernels is None or os.environ.get("GHWFORGE_PURE") == "1":
        return "python"
    return "cython"


def _tables(spec: FieldSpec):
    if backend() != "cython":
        return None
    return spec.tables()


def rref(spec: FieldSpec, rows) -> tuple[list[list[int]], list[int]]:
    rows = [list(map(int, r)) for r in rows]
    t = _tables(spec)
    if t is None or not rows or not rows[0]:
        return _pykernels.rref(spec, rows)
    R, piv = _ckernels.rref(spec.q, *t, rows)
    return R.tolist(), piv


def codeword_min_weight(spec: FieldSpec, G, collect: bool = False):
    t = _tables(spec)
    if t is None:
        return _pykernels.codeword_min_weight(spec, [list(r) for r in G], collect)
    return _ckernels.codeword_min_weight(spec.q, t[0], t[1], G, collect)


def max_zero_sets(spec: FieldSpec, G, limit: int = -1) -> list[int] | None:
    t = _tables(spec)
    if t is None:
        return _pykernels.max_zero_sets(spec, [list(r) for r in G], limit)
    return _ckernels.max_zero_sets(spec.q, *t, G, limit)


def combo_support_masks(spec: FieldSpec, G, base: int, free: list[int]) -> list[int]:
    t = _tables(spec)
    if t is None or len(G[0]) > 62:
        return _pykernels.combo_support_masks(spec, [list(r) for r in G], base, free)
    return _ckernels.combo_support_masks(spec.q, t[0], t[1], G, base, free)


def min_union_support(choices: list[list[int]], n: int) -> int:
    if backend() != "cython" or n > 62:
        return _pykernels.min_union_support(choices)
    return _ckernels.min_union_support(choices)


def independent_transversal(spec: FieldSpec, candidates, dim: int) -> list[int] | None:
    t = _tables(spec)
    if t is None:
        return _pykernels.independent_transversal(
            spec, [[list(v) for v in c] for c in candidates]
        )
    cands = [np.asarray(c, dtype=np.int32).reshape(-1, dim) for c in candidates]
    return _ckernels.independent_transversal(spec.q, *t, dim, cands)
