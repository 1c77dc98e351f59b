"""Seeded instance generators, the counterexample search, and the reproduction suite."""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from typing import Any, Callable, Iterator

from .codes import (
    LinearCode,
    check_row_zero_sets,
    ghw,
    is_r_mds,
    min_distance,
    min_weight_span,
    weight_hierarchy,
)
from .errors import TooLarge
from .families import (
    PlaneCubic,
    affine_functionals,
    affine_zero_set,
    code_points,
    common_zero_witnesses,
    concurrent,
    cubic_line_code,
    elliptic_example_f4,
    gm_mds_solve,
    lines_through,
    reed_muller_1,
    rm1_hierarchy,
    rs_code,
)
from .field import FieldSpec, field_of_order
from .linalg import GFMatrix, rank
from .rng import XorShift64Star
from .sets import (
    SubsetSystem,
    check_cardinality,
    check_ghw_constraints,
    check_mds_condition,
    check_mode,
)
from .solver import (
    Feasible,
    Infeasible,
    SolveOutcome,
    exhaustive_oracle,
    solve_support_constrained,
    verify_solution,
)

MODES = ("ghw", "mds", "cardinality+ghw")


# -- random instances ---------------------------------------------------------------

def random_subset_system(rng: XorShift64Star, n: int, k: int, max_size: int) -> SubsetSystem:
    """Each subset: size uniform in ``[0, max_size]``, then a uniform subset of that size."""
    max_size = max(0, min(max_size, n))
    sets = []
    for _ in range(k):
        size = rng.below(max_size + 1)
        sets.append(rng.sample(range(1, n + 1), size))
    return SubsetSystem.of(n, sets)


def random_full_rank_code(rng: XorShift64Star, spec: FieldSpec, n: int, k: int) -> LinearCode:
    while True:
        rows = [[rng.below(spec.q) for _ in range(n)] for _ in range(k)]
        M = GFMatrix.from_rows(spec, rows)
        if rank(M) == k:
            return LinearCode(M, name="random")


def gm_mds_instances(seed: int, count: int) -> Iterator[tuple[FieldSpec, int, int, SubsetSystem]]:
    """``(field, n, k, S)`` with ``n <= 7``, ``k <= 3``, ``q >= n + k - 1`` and
    ``S`` passing the MDS condition."""
    rng = XorShift64Star(seed)
    made = 0
    while made < count:
        k = 1 + rng.below(3)
        n = k + rng.below(7 - k + 1)
        qs = [q for q in (8, 9, 11, 13) if q >= n + k - 1]
        q = rng.choice(qs)
        S = random_subset_system(rng, n, k, k - 1)
        if not check_mds_condition(S).passed:
            continue
        made += 1
        yield field_of_order(q), n, k, S


def affine_systems_exhaustive(spec: FieldSpec, m: int) -> Iterator[tuple[tuple, SubsetSystem]]:
    """Every ordered choice of ``m + 1`` affine functionals (up to scaling),
    paired with the system of their zero sets."""
    n = spec.q**m
    funcs = affine_functionals(spec, m)
    zsets = {f: affine_zero_set(spec, m, f) for f in funcs}
    for combo in itertools.product(funcs, repeat=m + 1):
        yield combo, SubsetSystem(n, tuple(zsets[f] for f in combo))


def affine_systems_random(spec: FieldSpec, m: int, seed: int, count: int, d) -> Iterator[tuple[tuple, SubsetSystem]]:
    """``count`` random choices of ``m + 1`` functionals whose zero sets pass the GHW constraints."""
    rng = XorShift64Star(seed)
    n = spec.q**m
    funcs = affine_functionals(spec, m)
    made = 0
    while made < count:
        combo = tuple(rng.choice(funcs) for _ in range(m + 1))
        S = SubsetSystem(n, tuple(affine_zero_set(spec, m, f) for f in combo))
        if check_ghw_constraints(S, d, n).passed:
            made += 1
            yield combo, S


def functionals_independent(spec: FieldSpec, funcs) -> bool:
    """The affine functionals are linearly independent as functions on GF(q)^m."""
    return rank(GFMatrix.from_rows(spec, [list(f) for f in funcs])) == len(funcs)


def oracle_instances(seed: int, count: int) -> Iterator[tuple[LinearCode, SubsetSystem]]:
    """Random full-rank codes over GF(2)/GF(3), ``n <= 6``, ``k <= 3``, with
    unconstrained random subset systems."""
    rng = XorShift64Star(seed)
    for _ in range(count):
        spec = field_of_order(rng.choice((2, 3)))
        k = 1 + rng.below(3)
        n = max(k, 2) + rng.below(6 - max(k, 2) + 1)
        C = random_full_rank_code(rng, spec, n, k)
        yield C, random_subset_system(rng, n, k, n)


def cubic_gf7() -> PlaneCubic:
    """``x0 x2^2 = x1^3 + x0^3`` over GF(7) (``y^2 = x^3 + 1``), divisor line ``x0 = 0``."""
    spec = field_of_order(7)
    return PlaneCubic.from_terms(spec, {(1, 0, 2): 1, (0, 3, 0): 6, (3, 0, 0): 6}, (1, 0, 0))


@dataclass(frozen=True)
class CubicDichotomy:
    code: LinearCode
    independent: SubsetSystem
    independent_lines: tuple
    concurrent: SubsetSystem
    concurrent_lines: tuple


def cubic_dichotomy_instance(cubic: PlaneCubic | None = None) -> CubicDichotomy:
    """First (lexicographic) non-concurrent and first concurrent triple of
    3-point lines whose point triples pass the GHW constraints."""
    cubic = cubic_gf7() if cubic is None else cubic
    spec = cubic.spec
    pts = code_points(spec, cubic)
    C = cubic_line_code(spec, cubic, pts)
    d = weight_hierarchy(C)
    lines = lines_through(spec, pts)
    triples = [L for L, hit in lines.items() if len(hit) == 3]
    found: dict[bool, tuple] = {}
    for combo in itertools.combinations(triples, 3):
        S = SubsetSystem(len(pts), tuple(lines[L] for L in combo))
        if not check_ghw_constraints(S, d).passed:
            continue
        found.setdefault(concurrent(spec, combo), (S, combo))
        if len(found) == 2:
            break
    if len(found) < 2:
        raise ValueError("cubic lacks both kinds of line triples")
    return CubicDichotomy(C, found[False][0], found[False][1], found[True][0], found[True][1])


# -- counterexample search --------------------------------------------------------------

@dataclass(frozen=True)
class FalsifyConfig:
    code: LinearCode
    trials: int = 10_000
    seed: int = 0
    mode: str = "ghw"

    def __post_init__(self) -> None:
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if self.mode not in MODES + ("card+ghw",):
            raise ValueError(f"mode must be one of {MODES}")


@dataclass(frozen=True)
class Counterexample:
    trial: int
    system: SubsetSystem
    outcome: Infeasible
    oracle: str

    def to_json(self, config: FalsifyConfig) -> dict:
        return {
            "code": config.code.to_json(),
            "mode": config.mode,
            "seed": config.seed,
            "trials": config.trials,
            "trial": self.trial,
            "sets": self.system.to_json(),
            "witness": list(self.outcome.witness),
            "dim": self.outcome.deficient_dim,
            "oracle": self.oracle,
        }


def _size_cap(C: LinearCode, mode: str, d) -> int:
    if mode == "ghw":
        return C.n - d[1]
    return C.k - 1


def falsify(config: FalsifyConfig) -> Counterexample | None:
    """Rejection-sample subset systems passing the configured gate and return
    the first (lowest trial index) one the solver refutes.

    Proposal: each subset gets a size uniform in ``[0, cap]`` and then a
    uniform subset of that size, so the accepted systems are not uniform over
    the gated set (small subsets are over-represented).
    """
    C = config.code
    d = weight_hierarchy(C)
    cap = _size_cap(C, config.mode, d)
    rng = XorShift64Star(config.seed)
    for trial in range(config.trials):
        S = random_subset_system(rng, C.n, C.k, cap)
        if not check_mode(S, config.mode, d).passed:
            continue
        outcome = solve_support_constrained(C, S)
        if isinstance(outcome, Infeasible):
            return Counterexample(trial, S, outcome, _oracle_verdict(C, S, outcome))
    return None


def _oracle_verdict(C: LinearCode, S: SubsetSystem, outcome: SolveOutcome) -> str:
    try:
        ref = exhaustive_oracle(C, S)
    except TooLarge:
        return "skipped"
    return "agree" if type(ref) is type(outcome) else "disagree"


def reverify(C: LinearCode, cex: Counterexample, mode: str) -> bool:
    """Gate passes, solver refutes with a genuine deficiency, oracle does not disagree."""
    d = weight_hierarchy(C)
    if not check_mode(cex.system, mode, d).passed:
        return False
    outcome = solve_support_constrained(C, cex.system)
    if not isinstance(outcome, Infeasible):
        return False
    from .solver import vanishing_spaces
    from .linalg import sum_dim

    spaces = vanishing_spaces(C, cex.system)
    dim = sum_dim([spaces[i - 1] for i in outcome.witness])
    if dim != outcome.deficient_dim or dim >= len(outcome.witness):
        return False
    return _oracle_verdict(C, cex.system, outcome) != "disagree"


# -- reproduction suite --------------------------------------------------------------------

@dataclass
class Check:
    name: str
    claim: str
    expected: Any
    computed: Any
    passed: bool
    seconds: float = 0.0

    def line(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        return f"[{tag}] {self.name} ({self.seconds:.2f}s): {self.claim}; expected {self.expected}, got {self.computed}"

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "claim": self.claim,
            "expected": _jsonable(self.expected),
            "computed": _jsonable(self.computed),
            "pass": self.passed,
            "seconds": round(self.seconds, 3),
        }


def _jsonable(x):
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (int, float, str, bool)) or x is None:
        return x
    return str(x)


@dataclass
class ReproductionReport:
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def first_failure(self) -> Check | None:
        return next((c for c in self.checks if not c.passed), None)

    def to_json(self) -> dict:
        return {"pass": self.passed, "checks": [c.to_json() for c in self.checks]}


class Reproduction:
    """Runs every check in order, collecting built codes and feasible matrices
    so the later consistency checks can sweep over them."""

    def __init__(self, elliptic: tuple[LinearCode, SubsetSystem] | None = None, seed: int = 2024) -> None:
        self.elliptic = elliptic or elliptic_example_f4()
        self.seed = seed
        self.codes: list[LinearCode] = []
        self.feasible: list[tuple[LinearCode, GFMatrix]] = []
        self.cubic_codes: list[LinearCode] = []

    def _keep(self, C: LinearCode) -> LinearCode:
        self.codes.append(C)
        return C

    # each check returns (claim, expected, computed, passed)

    def elliptic_hierarchy(self):
        C, _ = self.elliptic
        self._keep(C)
        got = {m: weight_hierarchy(C, m).d for m in ("subcode", "zeroset")}
        ok = got["subcode"] == got["zeroset"] == (5, 7, 8)
        return "elliptic [8,3]_4 code weight hierarchy, both methods", (5, 7, 8), got, ok

    def elliptic_counterexample(self):
        C, S = self.elliptic
        d = weight_hierarchy(C)
        ghw_ok = check_ghw_constraints(S, d).passed
        card_ok = check_cardinality(S).passed
        out = solve_support_constrained(C, S)
        ref = exhaustive_oracle(C, S)
        got = {"ghw": ghw_ok, "card": card_ok, "solve": out.to_json(), "oracle": ref.status}
        ok = (
            ghw_ok and card_ok and isinstance(out, Infeasible) and out.witness == (1, 2, 3)
            and out.deficient_dim == 2 and isinstance(ref, Infeasible)
        )
        return "bundled system passes GHW and cardinality yet admits no generator matrix", \
            {"witness": [1, 2, 3], "dim": 2}, got, ok

    def elliptic_two_mds(self):
        C, _ = self.elliptic
        got = (is_r_mds(C, 1), is_r_mds(C, 2))
        return "elliptic code is 2-MDS but not MDS", (False, True), got, got == (False, True)

    def elliptic_common_zero(self):
        C, S = self.elliptic
        found = common_zero_witnesses(C, max_results=1000)
        target = (1, frozenset(S.subsets))
        hits = [(w.Q, frozenset(w.system.subsets)) for w in found]
        return "vanishing subcodes of the bundled sets share the extra zero P_1", \
            "Q=1 with the bundled sets", f"{len(found)} witnesses", target in hits

    def rs_hierarchies(self):
        bad = []
        count = 0
        for q in (8, 9, 11):
            for n in range(3, 9):
                for k in range(2, 5):
                    if k > n:
                        continue
                    C = self._keep(rs_code(q, n, k))
                    count += 1
                    if weight_hierarchy(C).d != tuple(range(n - k + 1, n + 1)):
                        bad.append((q, n, k))
        return "RS weight hierarchies are n-k+1..n", "0 mismatches", f"{len(bad)} mismatches of {count}", not bad

    def gm_mds_positive(self):
        ok = moved = total = 0
        for spec, n, k, S in gm_mds_instances(self.seed, 100):
            total += 1
            C, out = gm_mds_solve(spec, n, k, S)
            if isinstance(out, Feasible) and verify_solution(C, S, out.generator):
                ok += 1
                self.feasible.append((C, out.generator))
                moved += C.G != rs_code(spec.q, n, k).G
        got = {"feasible": f"{ok}/{total}", "needed other points": moved}
        return "MDS-condition systems have an RS code solving them when q >= n+k-1", \
            {"feasible": "100/100"}, got, ok == total == 100

    def rm1_hierarchy(self):
        got = {}
        for q, m in ((2, 2), (2, 3), (3, 2), (4, 2)):
            C = self._keep(reed_muller_1(field_of_order(q), m))
            got[(q, m)] = weight_hierarchy(C).d
        exp = {(q, m): rm1_hierarchy(q, m) for (q, m) in got}
        return "RM(1,m) hierarchy q^m - q^(m-r), then q^m", exp, got, got == exp

    def _affine_sweep(self, C, systems):
        """Counts (tried, solved, mismatches) where a mismatch is a system whose
        feasibility differs from independence of its functionals."""
        tried = solved = mismatch = 0
        refuted = []
        for funcs, S in systems:
            tried += 1
            out = solve_support_constrained(C, S)
            if isinstance(out, Feasible):
                solved += 1
                self.feasible.append((C, out.generator))
            else:
                refuted.append(S.to_json()["sets"])
            if bool(out) != functionals_independent(C.spec, funcs):
                mismatch += 1
        return tried, solved, mismatch, refuted

    def rm1_affine_positive(self):
        spec2 = field_of_order(2)
        C2 = self._keep(reed_muller_1(spec2, 2))
        d2 = weight_hierarchy(C2)
        gated = (fs for fs in affine_systems_exhaustive(spec2, 2) if check_ghw_constraints(fs[1], d2).passed)
        t2, s2, _, _ = self._affine_sweep(C2, gated)
        spec3 = field_of_order(3)
        C3 = self._keep(reed_muller_1(spec3, 2))
        d3 = weight_hierarchy(C3)
        t3, s3, _, _ = self._affine_sweep(C3, affine_systems_random(spec3, 2, self.seed, 200, d3))
        got = {"(2,2) exhaustive": f"{s2}/{t2}", "(3,2) random": f"{s3}/{t3}"}
        return "affine zero-set systems passing GHW are solvable on RM(1,m)", \
            {"(2,2) exhaustive": "all", "(3,2) random": "200/200"}, got, t2 > 0 and s2 == t2 and s3 == t3 == 200

    def rm1_affine_parallel(self):
        spec3 = field_of_order(3)
        C3 = reed_muller_1(spec3, 2)
        d3 = weight_hierarchy(C3)
        gated = (fs for fs in affine_systems_exhaustive(spec3, 2) if check_ghw_constraints(fs[1], d3).passed)
        tried, solved, mismatch, refuted = self._affine_sweep(C3, gated)
        got = {"gated": tried, "infeasible": tried - solved, "mismatches": mismatch,
               "example": refuted[0] if refuted else None}
        return "on RM(1,2)/GF(3) a GHW-passing affine system is solvable iff its functionals are " \
            "independent; three parallel lines pass GHW but are not", \
            {"infeasible": 24, "mismatches": 0}, got, mismatch == 0 and tried - solved == 24

    def rm1_falsify(self):
        got = {}
        ok = True
        for q, m in ((2, 3), (3, 2)):
            C = reed_muller_1(field_of_order(q), m)
            cfg = FalsifyConfig(C, trials=10_000, seed=self.seed, mode="cardinality+ghw")
            cex = falsify(cfg)
            good = cex is not None and reverify(C, cex, cfg.mode)
            got[(q, m)] = None if cex is None else {"trial": cex.trial, "sets": cex.system.to_json()["sets"]}
            ok = ok and good
        return "cardinality and GHW gating is not sufficient on RM(1,m)", "counterexample found", got, ok

    def oracle_equivalence(self):
        agree = total = 0
        for C, S in oracle_instances(self.seed, 200):
            total += 1
            a = solve_support_constrained(C, S)
            b = exhaustive_oracle(C, S)
            if type(a) is type(b):
                agree += 1
        return "Hall-condition solver agrees with brute force", "200/200", f"{agree}/{total}", agree == total == 200

    def cubic_dichotomy(self):
        inst = cubic_dichotomy_instance()
        C = inst.code
        self._keep(C)
        self.cubic_codes.append(C)
        a = solve_support_constrained(C, inst.independent)
        b = solve_support_constrained(C, inst.concurrent)
        if isinstance(a, Feasible):
            self.feasible.append((C, a.generator))
        got = {"non-concurrent": a.status, "concurrent": b.status}
        return "three collinear triples on a GF(7) cubic: independent lines solvable, concurrent not", \
            {"non-concurrent": "feasible", "concurrent": "infeasible"}, got, \
            isinstance(a, Feasible) and isinstance(b, Infeasible)

    def rs_min_weight_span(self):
        C = rs_code(7, 6, 3)
        got = min_weight_span(C)
        return "RS(6,3) over GF(7) is spanned by minimum-weight codewords", True, got, got is True

    def row_zero_bound(self):
        bad = []
        for C in self.codes:
            if not check_row_zero_sets(C).passed:
                bad.append(str(C))
        for C, G in self.feasible:
            if not check_row_zero_sets(C, G).passed:
                bad.append(f"{C} solved matrix")
        n = len(self.codes) + len(self.feasible)
        return "row zero sets of every generator matrix obey |cap S_i| <= n - d_|I|", \
            "0 violations", f"{len(bad)} violations over {n} matrices", not bad

    def hierarchy_properties(self):
        bad = []
        for C in self.codes:
            d = weight_hierarchy(C)
            if any(a >= b for a, b in zip(d.d, d.d[1:])) or d.singleton_violations(C.n):
                bad.append(str(C))
            if d[1] != min_distance(C):
                bad.append(f"{C} d1")
        for C in self.cubic_codes:
            d = weight_hierarchy(C)
            if not (is_r_mds(C, 2) and (d[1] != C.n - 3 or d[2] == C.n - 1)):
                bad.append(f"{C} 2-MDS")
        return "hierarchies strictly increase, obey the Singleton bound; cubic codes are 2-MDS", \
            "0 violations", f"{len(bad)} violations over {len(self.codes)} codes", not bad

    ORDER = (
        "elliptic_hierarchy",
        "elliptic_counterexample",
        "elliptic_two_mds",
        "elliptic_common_zero",
        "rs_hierarchies",
        "rs_min_weight_span",
        "gm_mds_positive",
        "rm1_hierarchy",
        "rm1_affine_positive",
        "rm1_affine_parallel",
        "rm1_falsify",
        "oracle_equivalence",
        "cubic_dichotomy",
        "row_zero_bound",
        "hierarchy_properties",
    )

    def run_one(self, name: str) -> Check:
        t0 = time.perf_counter()
        try:
            claim, expected, computed, ok = getattr(self, name)()
        except Exception as exc:  # a crashing check is a failing check
            claim, expected, computed, ok = name, "no error", f"{type(exc).__name__}: {exc}", False
        return Check(name.replace("_", "-"), claim, expected, computed, bool(ok), time.perf_counter() - t0)

    def run(self, progress: Callable[[Check], None] | None = None) -> ReproductionReport:
        report = ReproductionReport()
        for name in self.ORDER:
            check = self.run_one(name)
            report.checks.append(check)
            if progress:
                progress(check)
        return report
