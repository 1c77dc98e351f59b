"""Code families: Reed-Solomon, first-order Reed-Muller, plane-cubic line codes.

Also the hardcoded ``[8,3,5]_4`` elliptic-curve code with its bundled subset
system, and the search for systems whose vanishing subcodes all share an
extra common zero (which forces infeasibility).
"""

from __future__ import annotations

import itertools
from math import comb
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .budget import get_budget, require
from .codes import LinearCode, min_distance, vanishing_subcode, weight_hierarchy
from .errors import (
    AssumptionViolated,
    BadDims,
    ConditionViolated,
    DegenerateFunctional,
    DuplicatePoints,
    InternalError,
    PointOffCurve,
    PointOnLine,
    TooLarge,
)
from .field import FieldSpec, field_new, field_of_order
from .sets import SubsetSystem, check_ghw_constraints, check_mds_condition
from .solver import Feasible, Infeasible, SolveOutcome, solve_support_constrained

Point = tuple[int, ...]


# -- Reed-Solomon -------------------------------------------------------------

def reed_solomon(spec: FieldSpec, points: Sequence[int], k: int) -> LinearCode:
    """Evaluations of ``1, x, ..., x^(k-1)`` at distinct field elements."""
    points = [spec.check(int(x)) for x in points]
    n = len(points)
    if len(set(points)) != n:
        raise DuplicatePoints("evaluation points must be distinct")
    if not 1 <= k <= n <= spec.q:
        raise BadDims(f"need 1 <= k <= n <= q, got k={k}, n={n}, q={spec.q}")
    rows = [[spec.pow(x, i) for x in points] for i in range(k)]
    return LinearCode.from_rows(spec, rows, name=f"RS({n},{k})")


def rs_code(q: int, n: int, k: int) -> LinearCode:
    """RS code on the first ``n`` element codes of the canonical ``GF(q)``."""
    spec = field_of_order(q)
    return reed_solomon(spec, range(n), k)


def rs_support_constrained(
    spec: FieldSpec, points: Sequence[int], k: int, S: SubsetSystem
) -> SolveOutcome:
    """Solve over the RS code on ``points``; systems must satisfy the MDS condition.

    A fixed point set can be infeasible even for large ``q`` (three disjoint
    pairs over GF(8) with points 0..5 already are); :func:`gm_mds_solve`
    searches the evaluation points as well.
    """
    report = check_mds_condition(S, k)
    if not report.passed:
        raise ConditionViolated(f"MDS condition fails at {report.violations}")
    return solve_support_constrained(reed_solomon(spec, points, k), S)


def gm_mds_solve(
    spec: FieldSpec, n: int, k: int, S: SubsetSystem, points: Sequence[int] | None = None
) -> tuple[LinearCode, SolveOutcome]:
    """RS code and outcome for the first feasible evaluation-point set.

    Tries ``points`` (default ``0..n-1``) and then every ``n``-subset of the
    field in lexicographic order.  When ``q >= n + k - 1`` some point set is
    guaranteed to work, so running out raises :class:`InternalError`; below
    that threshold the last infeasible outcome is returned.
    """
    report = check_mds_condition(S, k)
    if not report.passed:
        raise ConditionViolated(f"MDS condition fails at {report.violations}")
    first = tuple(range(n)) if points is None else tuple(points)
    require(comb(spec.q, n), "evaluation point sets")
    last = None
    for pts in itertools.chain([first], itertools.combinations(range(spec.q), n)):
        C = reed_solomon(spec, pts, k)
        outcome = solve_support_constrained(C, S)
        if isinstance(outcome, Feasible):
            return C, outcome
        last = (C, outcome)
    if spec.q >= n + k - 1:
        raise InternalError(f"no evaluation points make {S} feasible over {spec}")
    return last


# -- first-order Reed-Muller ------------------------------------------------------

def rm_points(spec: FieldSpec, m: int) -> list[Point]:
    """All of GF(q)^m, lexicographic in element codes."""
    require(spec.q**m, f"RM evaluation points q^m={spec.q}^{m}")
    return list(itertools.product(range(spec.q), repeat=m))


def reed_muller_1(spec: FieldSpec, m: int) -> LinearCode:
    """``RM(1, m)``: evaluations of ``1, x_1, ..., x_m`` on GF(q)^m."""
    if m < 1:
        raise BadDims("m must be >= 1")
    pts = rm_points(spec, m)
    rows = [[1] * len(pts)] + [[p[i] for p in pts] for i in range(m)]
    return LinearCode.from_rows(spec, rows, name=f"RM(1,{m})")


def rm1_hierarchy(q: int, m: int) -> tuple[int, ...]:
    """Closed form ``d_r = q^m - q^(m-r)`` for ``r <= m`` and ``d_{m+1} = q^m``."""
    return tuple(q**m - q ** (m - r) for r in range(1, m + 1)) + (q**m,)


def affine_zero_set(spec: FieldSpec, m: int, coeffs: Sequence[int]) -> frozenset[int]:
    """1-based positions (RM point order) where ``a_0 + a_1 x_1 + ... + a_m x_m`` vanishes."""
    if len(coeffs) != m + 1:
        raise BadDims(f"expected {m + 1} coefficients, got {len(coeffs)}")
    a0, lin = coeffs[0], coeffs[1:]
    if not any(lin):
        raise DegenerateFunctional("a_1..a_m are all zero")
    add, mul = spec.add, spec.mul
    out = set()
    for idx, p in enumerate(rm_points(spec, m), 1):
        v = a0
        for a, x in zip(lin, p):
            v = add(v, mul(a, x))
        if v == 0:
            out.add(idx)
    return frozenset(out)


def affine_functionals(spec: FieldSpec, m: int) -> list[tuple[int, ...]]:
    """Nondegenerate affine functionals up to scaling (first nonzero linear coefficient 1)."""
    out = []
    for coeffs in itertools.product(range(spec.q), repeat=m + 1):
        lin = coeffs[1:]
        lead = next((a for a in lin if a), 0)
        if lead == 1:
            out.append(coeffs)
    return out


# -- plane cubics ---------------------------------------------------------------

# Monomial order of the ten cubic coefficients: exponent triples (e0, e1, e2)
# of x0^e0 x1^e1 x2^e2, lexicographically descending (c300, c210, c201, ...).
CUBIC_MONOMIALS: tuple[tuple[int, int, int], ...] = tuple(
    sorted(((a, b, 3 - a - b) for a in range(4) for b in range(4 - a)), reverse=True)
)


def projective_plane(spec: FieldSpec) -> list[Point]:
    """Points of P^2(GF(q)) with first nonzero coordinate 1, lexicographic."""
    q = spec.q
    return [p for p in itertools.product(range(q), repeat=3) if next(x for x in p + (1,) if x) == 1
            and any(p)]


def _dot(spec: FieldSpec, a: Sequence[int], b: Sequence[int]) -> int:
    acc = 0
    for x, y in zip(a, b):
        if x and y:
            acc = spec.add(acc, spec.mul(x, y))
    return acc


@dataclass(frozen=True)
class PlaneCubic:
    """A cubic form (coefficients in :data:`CUBIC_MONOMIALS` order) and a divisor line."""

    spec: FieldSpec
    coeffs: tuple[int, ...]
    line: tuple[int, int, int]

    def __post_init__(self) -> None:
        if len(self.coeffs) != 10:
            raise BadDims("a plane cubic has ten coefficients")
        if not any(self.coeffs):
            raise ValueError("cubic form is identically zero")
        if len(self.line) != 3 or not any(self.line):
            raise ValueError("divisor line must be a nonzero triple")

    def __call__(self, P: Sequence[int]) -> int:
        spec = self.spec
        acc = 0
        for c, (e0, e1, e2) in zip(self.coeffs, CUBIC_MONOMIALS):
            if c:
                term = spec.mul(c, spec.mul(spec.pow(P[0], e0), spec.mul(spec.pow(P[1], e1), spec.pow(P[2], e2))))
                acc = spec.add(acc, term)
        return acc

    def on_line(self, P: Sequence[int]) -> bool:
        return _dot(self.spec, self.line, P) == 0

    def to_json(self) -> dict:
        return {"field": self.spec.to_json(), "cubic": list(self.coeffs), "line": list(self.line)}

    @classmethod
    def from_json(cls, obj: dict, spec: FieldSpec | None = None) -> PlaneCubic:
        if spec is None:
            from .field import field_from_json

            spec = field_from_json(obj["field"])
        return cls(spec, tuple(int(c) for c in obj["cubic"]), tuple(int(a) for a in obj["line"]))

    @classmethod
    def from_terms(cls, spec: FieldSpec, terms: dict[tuple[int, int, int], int], line) -> PlaneCubic:
        coeffs = tuple(terms.get(mono, 0) for mono in CUBIC_MONOMIALS)
        return cls(spec, coeffs, tuple(line))


def plane_cubic_points(spec: FieldSpec, cubic: PlaneCubic) -> list[Point]:
    """All rational points of the cubic, normalized and in lexicographic order."""
    if spec.q > 2**10:
        raise TooLarge(f"point enumeration over GF({spec.q}) exceeds q <= 1024")
    return [P for P in projective_plane(spec) if cubic(P) == 0]


def code_points(spec: FieldSpec, cubic: PlaneCubic) -> list[Point]:
    """Rational points off the divisor line, in enumeration order."""
    return [P for P in plane_cubic_points(spec, cubic) if not cubic.on_line(P)]


def cubic_line_code(spec: FieldSpec, cubic: PlaneCubic, points: Sequence[Point] | None = None) -> LinearCode:
    """Evaluate ``x_0/l, x_1/l, x_2/l`` (``l`` the divisor line form) at the points."""
    pts = code_points(spec, cubic) if points is None else [tuple(P) for P in points]
    if len(pts) < 4:
        raise BadDims(f"need at least 4 points, got {len(pts)}")
    if len(set(pts)) != len(pts):
        raise DuplicatePoints("evaluation points must be distinct")
    for P in pts:
        if cubic(P) != 0:
            raise PointOffCurve(f"{P} is not on the cubic")
        if cubic.on_line(P):
            raise PointOnLine(f"{P} lies on the divisor line")
    rows = [[0] * len(pts) for _ in range(3)]
    for j, P in enumerate(pts):
        s = spec.inv(_dot(spec, cubic.line, P))
        for i in range(3):
            rows[i][j] = spec.mul(P[i], s)
    return LinearCode.from_rows(spec, rows, name="cubic-line")


def lines_through(spec: FieldSpec, points: Sequence[Point]) -> dict[Point, frozenset[int]]:
    """Every line of P^2 (normalized coefficients) meeting ``points`` in at
    least one point, mapped to the 1-based indices it contains."""
    out = {}
    for L in projective_plane(spec):
        hit = frozenset(j for j, P in enumerate(points, 1) if _dot(spec, L, P) == 0)
        if hit:
            out[L] = hit
    return out


def concurrent(spec: FieldSpec, lines: Sequence[Point]) -> bool:
    """Three lines of P^2 share a point iff their coefficient vectors are dependent."""
    from .linalg import GFMatrix, rank

    return rank(GFMatrix.from_rows(spec, lines)) < 3


# -- the hardcoded [8,3,5]_4 code -------------------------------------------------

# GF(4) codes: 0, 1, w = 2, w^2 = 3 (w^2 + w + 1 = 0)
ELLIPTIC_F4_GENERATOR = (
    (1, 1, 1, 1, 1, 1, 1, 1),
    (0, 1, 2, 2, 2, 3, 3, 3),
    (0, 0, 1, 2, 3, 1, 2, 3),
)
ELLIPTIC_F4_POINTS = ((0, 0), (1, 0), (2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (3, 3))
ELLIPTIC_F4_SETS = ((4, 8), (3, 7), (5, 6))


def elliptic_example_f4() -> tuple[LinearCode, SubsetSystem]:
    """The ``[8,3,5]_4`` code on the affine points of ``y^3 = x^2 + x`` and the
    subset system that defeats the GHW constraints."""
    spec = field_new(2, 2)
    C = LinearCode.from_rows(spec, ELLIPTIC_F4_GENERATOR, name="elliptic-F4")
    return C, SubsetSystem.of(8, ELLIPTIC_F4_SETS)


def elliptic_f4_cubic() -> PlaneCubic:
    """``x2^3 + x0 x1^2 + x0^2 x1`` with divisor line ``x0 = 0``; its affine
    chart ``x0 = 1`` is ``y^3 = x^2 + x`` in characteristic 2."""
    spec = field_new(2, 2)
    return PlaneCubic.from_terms(spec, {(0, 0, 3): 1, (1, 2, 0): 1, (2, 1, 0): 1}, (1, 0, 0))


# -- systems with a forced common zero ----------------------------------------------

@dataclass(frozen=True)
class CommonZeroWitness:
    """Extra point ``Q`` (1-based) on which every ``V_i`` vanishes."""

    Q: int
    system: SubsetSystem


def common_zero_witnesses(
    C: LinearCode, max_results: int = 100, require_ghw: bool = True
) -> list[CommonZeroWitness]:
    """Find ``Q`` and ``k`` distinct ``(k-1)``-subsets avoiding ``Q`` whose
    (nonzero) vanishing subcodes all vanish at ``Q`` as well.

    All such ``V_i`` sit inside the ``(k-1)``-dimensional subcode vanishing at
    ``Q``, so the system is infeasible; every result is run through the solver
    to confirm.  Requires ``d_1 = n - k``.  With ``require_ghw`` only systems
    passing the GHW constraints are returned.
    """
    n, k = C.n, C.k
    d1 = min_distance(C)
    if d1 != n - k:
        raise AssumptionViolated(f"need d_1 = n - k = {n - k}, code has d_1 = {d1}")
    from math import comb

    require(n * comb(n - 1, k - 1), "common-zero candidate scan")
    d = weight_hierarchy(C) if require_ghw else None
    budget = get_budget()
    visited = 0
    out: list[CommonZeroWitness] = []
    for Q in range(1, n + 1):
        cands = []
        for S in itertools.combinations([j for j in range(1, n + 1) if j != Q], k - 1):
            V = vanishing_subcode(C, S)
            if V.dim and vanishing_subcode(C, S + (Q,)).dim == V.dim:
                cands.append(S)
        for combo in itertools.combinations(cands, k):
            visited += 1
            if visited > budget:
                raise TooLarge(f"common-zero search exceeded budget {budget}")
            system = SubsetSystem.of(n, combo)
            if require_ghw and not check_ghw_constraints(system, d, n).passed:
                continue
            outcome = solve_support_constrained(C, system)
            if not isinstance(outcome, Infeasible):
                raise InternalError(f"common-zero system {system} reported feasible")
            out.append(CommonZeroWitness(Q, system))
            if len(out) >= max_results:
                return out
    return out
