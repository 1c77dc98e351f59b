"""Support-constrained generator matrices.

Row ``i`` of the wanted generator matrix must be a codeword vanishing on
``S_i``, i.e. ``c_i G`` with ``c_i`` in ``V_i = vanishing_subcode(C, S_i)``.
Such a matrix exists iff the ``V_i`` admit linearly independent
representatives, which by Rado's theorem happens iff

    dim(sum_{i in I} V_i) >= |I|   for every nonempty I.

The decision uses that condition; :func:`exhaustive_oracle` checks it by brute
force over projective representatives and never consults it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence, Union

from . import kernels
from .budget import get_budget, require
from .codes import LinearCode, row_zero_sets, vanishing_subcode
from .errors import AmbientMismatch, InternalError, ShapeMismatch, TooLarge
from .linalg import GFMatrix, Subspace, rank
from .sets import MAX_SCAN_K, SubsetSystem

ORACLE_MAX = 10**6


@dataclass(frozen=True)
class Feasible:
    generator: GFMatrix
    coefficients: tuple[tuple[int, ...], ...]

    status = "feasible"

    def to_json(self) -> dict:
        return {"status": "feasible", "generator": self.generator.tolist()}

    def __bool__(self) -> bool:
        return True


@dataclass(frozen=True)
class Infeasible:
    """``witness`` is a 1-based index set ``I`` with
    ``dim(sum_{i in I} V_i) = deficient_dim < |I|``."""

    witness: tuple[int, ...]
    deficient_dim: int

    status = "infeasible"

    def to_json(self) -> dict:
        return {"status": "infeasible", "witness": list(self.witness), "dim": self.deficient_dim}

    def __bool__(self) -> bool:
        return False


SolveOutcome = Union[Feasible, Infeasible]


def _check_spaces(spaces: Sequence[Subspace]) -> None:
    if not spaces:
        raise ShapeMismatch("need at least one subspace")
    spec, n = spaces[0].spec, spaces[0].n
    for V in spaces:
        if V.spec != spec or V.n != n:
            raise AmbientMismatch("subspaces live in different ambient spaces")
    if len(spaces) > MAX_SCAN_K:
        raise TooLarge(f"Hall scan over 2^{len(spaces)} index sets exceeds k <= {MAX_SCAN_K}")


def _rref_rows(spec, rows: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    if not rows:
        return []
    R, piv = kernels.rref(spec, rows)
    return [tuple(r) for r in R[: len(piv)]]


def hall_feasibility(spaces: Sequence[Subspace]) -> tuple[tuple[int, ...], int] | None:
    """``None`` when every nonempty ``I`` has ``dim(sum V_i) >= |I|``; otherwise
    ``(I, dim)`` for the first violating ``I`` in size-then-lex order, which is
    inclusion-minimal because all smaller sets were already checked."""
    _check_spaces(spaces)
    spec = spaces[0].spec
    k = len(spaces)
    prev: dict[tuple[int, ...], list[tuple[int, ...]]] = {(): []}
    for size in range(1, k + 1):
        cur = {}
        for I in itertools.combinations(range(k), size):
            basis = _rref_rows(spec, prev[I[:-1]] + list(spaces[I[-1]].basis))
            if len(basis) < size:
                return tuple(i + 1 for i in I), len(basis)
            cur[I] = basis
        prev = cur
    return None


def _residual_ok(spec, chosen: list[tuple[int, ...]], rest: Sequence[Subspace]) -> bool:
    """Hall condition for ``rest`` modulo ``span(chosen)``."""
    base = _rref_rows(spec, list(chosen))
    w = len(base)
    prev = {(): base}
    for size in range(1, len(rest) + 1):
        cur = {}
        for J in itertools.combinations(range(len(rest)), size):
            b = _rref_rows(spec, prev[J[:-1]] + list(rest[J[-1]].basis))
            if len(b) - w < size:
                return False
            cur[J] = b
        prev = cur
    return True


def extract_basis(spaces: Sequence[Subspace]) -> list[tuple[int, ...]]:
    """Linearly independent ``c_i`` in ``V_i``, chosen greedily in canonical
    order: for each ``i`` the first projective point of ``V_i`` after which the
    remaining spaces still satisfy the Hall condition modulo the chosen span.
    Backtracks if a prefix dead-ends, which cannot happen when the Hall
    condition holds."""
    _check_spaces(spaces)
    spec = spaces[0].spec
    k = len(spaces)
    budget = get_budget()
    visited = 0
    chosen: list[tuple[int, ...]] = []

    def search(i: int) -> bool:
        nonlocal visited
        if i == k:
            return True
        for c in spaces[i].projective_points():
            visited += 1
            if visited > budget:
                raise TooLarge(f"basis extraction exceeded budget {budget}")
            if len(_rref_rows(spec, chosen + [c])) != i + 1:
                continue
            if not _residual_ok(spec, chosen + [c], spaces[i + 1:]):
                continue
            chosen.append(c)
            if search(i + 1):
                return True
            chosen.pop()
        return False

    if not search(0):
        raise InternalError("no independent representatives although the Hall condition holds")
    return list(chosen)


def _check_shapes(C: LinearCode, S: SubsetSystem) -> None:
    if S.k != C.k:
        raise ShapeMismatch(f"{S.k} subsets for a code of dimension {C.k}")
    if S.n != C.n:
        raise ShapeMismatch(f"subsets of [{S.n}] for a code of length {C.n}")


def vanishing_spaces(C: LinearCode, S: SubsetSystem) -> list[Subspace]:
    return [vanishing_subcode(C, s) for s in S]


def solve_support_constrained(C: LinearCode, S: SubsetSystem) -> SolveOutcome:
    """Generator matrix of ``C`` whose row ``i`` vanishes on ``S_i``, or a
    certified reason none exists."""
    _check_shapes(C, S)
    spaces = vanishing_spaces(C, S)
    bad = hall_feasibility(spaces)
    if bad is not None:
        return Infeasible(*bad)
    coefs = extract_basis(spaces)
    G = GFMatrix.from_rows(C.spec, [C.encode(c) for c in coefs], C.n)
    out = Feasible(G, tuple(coefs))
    if not verify_solution(C, S, G):
        raise InternalError("solver produced a matrix that fails verification")
    return out


def verify_solution(C: LinearCode, S: SubsetSystem, G: GFMatrix) -> bool:
    """``G`` is a generator matrix of ``C`` with ``S_i`` inside the zero set of row ``i``."""
    if G.spec != C.spec or G.rows != C.k or G.cols != C.n or S.k != C.k:
        return False
    if rank(G) != C.k:
        return False
    if not all(C.contains(row) for row in G):
        return False
    zeros = row_zero_sets(G)
    return all(s <= z for s, z in zip(S, zeros))


def exhaustive_oracle(C: LinearCode, S: SubsetSystem, limit: int = ORACLE_MAX) -> SolveOutcome:
    """Brute force over tuples of projective representatives.

    Feasible results carry the lexicographically first independent tuple.  For
    infeasible instances the witness is the first index set (size, then lex)
    whose sub-family has no independent tuple, found by the same brute force.
    """
    _check_shapes(C, S)
    spaces = vanishing_spaces(C, S)
    k = C.k
    counts = [V.count_projective_points() for V in spaces]
    total = 1
    for c in counts:
        total *= max(c, 1)
    if total > limit:
        raise TooLarge(f"oracle would visit {total} tuples (limit {limit})")
    require(total, "exhaustive oracle")
    points = [V.projective_points() for V in spaces]
    pick = kernels.independent_transversal(C.spec, points, k)
    if pick is not None:
        coefs = [points[i][j] for i, j in enumerate(pick)]
        G = GFMatrix.from_rows(C.spec, [C.encode(c) for c in coefs], C.n)
        return Feasible(G, tuple(coefs))
    for size in range(1, k + 1):
        for I in itertools.combinations(range(k), size):
            if kernels.independent_transversal(C.spec, [points[i] for i in I], k) is None:
                rows = [v for i in I for v in spaces[i].basis]
                return Infeasible(tuple(i + 1 for i in I), len(_rref_rows(C.spec, rows)))
    raise InternalError("oracle found no tuple for the full family but one for every subfamily")
