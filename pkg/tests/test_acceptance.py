"""Acceptance criteria 1-11, each at its stated runtime limit.

Every test records one PASS/FAIL line, printed in the terminal summary.
"""

import time
from functools import lru_cache

import pytest

from conftest import ACCEPTANCE_LINES
from ghwforge.codes import (
    check_row_zero_sets,
    is_r_mds,
    min_distance,
    weight_hierarchy,
)
from ghwforge.families import (
    elliptic_example_f4,
    gm_mds_solve,
    reed_muller_1,
    rm1_hierarchy,
    rs_code,
)
from ghwforge.field import field_of_order
from ghwforge.harness import (
    FalsifyConfig,
    affine_systems_exhaustive,
    affine_systems_random,
    cubic_dichotomy_instance,
    falsify,
    gm_mds_instances,
    oracle_instances,
    reverify,
)
from ghwforge.sets import check_cardinality, check_ghw_constraints
from ghwforge.solver import Feasible, Infeasible, exhaustive_oracle, solve_support_constrained, verify_solution

SEED = 2024


def record(n, ok, detail, seconds):
    ACCEPTANCE_LINES.append(f"criterion {n:>2}: {'PASS' if ok else 'FAIL'} ({seconds:.2f}s) {detail}")


class timer:
    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.seconds = time.perf_counter() - self.t0


# -- shared runs (cached so criteria 9 and 10 can sweep their outputs) ------------

@lru_cache(maxsize=None)
def rs_codes():
    return tuple(
        rs_code(q, n, k)
        for q in (8, 9, 11)
        for n in range(3, 9)
        for k in range(2, 5)
        if k <= n
    )


@lru_cache(maxsize=None)
def rm_codes():
    return {(q, m): reed_muller_1(field_of_order(q), m) for q, m in ((2, 2), (2, 3), (3, 2), (4, 2))}


@lru_cache(maxsize=None)
def gm_mds_run():
    """[(code, system, outcome)] for the 100 seeded MDS-condition systems."""
    out = []
    for spec, n, k, S in gm_mds_instances(SEED, 100):
        C, res = gm_mds_solve(spec, n, k, S)
        out.append((C, S, res))
    return tuple(out)


@lru_cache(maxsize=None)
def affine_run():
    """Outcomes for every GHW-passing affine system on RM(1,2)/GF(2) and 200
    random ones on RM(1,2)/GF(3)."""
    res = {}
    C2 = rm_codes()[(2, 2)]
    d2 = weight_hierarchy(C2)
    res[(2, 2)] = tuple(
        (C2, S, solve_support_constrained(C2, S))
        for _, S in affine_systems_exhaustive(C2.spec, 2)
        if check_ghw_constraints(S, d2).passed
    )
    C3 = rm_codes()[(3, 2)]
    d3 = weight_hierarchy(C3)
    res[(3, 2)] = tuple(
        (C3, S, solve_support_constrained(C3, S)) for _, S in affine_systems_random(C3.spec, 2, SEED, 200, d3)
    )
    return res


@lru_cache(maxsize=None)
def oracle_run():
    return tuple(
        (C, S, solve_support_constrained(C, S), exhaustive_oracle(C, S)) for C, S in oracle_instances(SEED, 200)
    )


# -- criteria ----------------------------------------------------------------------

def test_criterion_01_elliptic_hierarchy():
    with timer() as t:
        C, _ = elliptic_example_f4()
        a = weight_hierarchy(C, "subcode").d
        b = weight_hierarchy(C, "zeroset").d
    ok = a == b == (5, 7, 8) and t.seconds < 1
    record(1, ok, f"subcode={a} zeroset={b}", t.seconds)
    assert ok


def test_criterion_02_elliptic_counterexample():
    with timer() as t:
        C, S = elliptic_example_f4()
        d = weight_hierarchy(C)
        gates = check_ghw_constraints(S, d).passed and check_cardinality(S).passed
        out = solve_support_constrained(C, S)
        ref = exhaustive_oracle(C, S)
    ok = gates and out == Infeasible((1, 2, 3), 2) and ref == out and t.seconds < 1
    record(2, ok, f"gates={gates} solve={out.to_json()} oracle={ref.status}", t.seconds)
    assert ok


def test_criterion_03_rs_hierarchies():
    with timer() as t:
        bad = [C for C in rs_codes() if weight_hierarchy(C).d != tuple(range(C.n - C.k + 1, C.n + 1))]
    ok = not bad and t.seconds < 30
    record(3, ok, f"{len(rs_codes())} codes, {len(bad)} mismatches", t.seconds)
    assert ok


def test_criterion_04_gm_mds_positive():
    with timer() as t:
        run = gm_mds_run()
        good = sum(isinstance(r, Feasible) and verify_solution(C, S, r.generator) for C, S, r in run)
    ok = good == len(run) == 100 and t.seconds < 60
    record(4, ok, f"{good}/{len(run)} feasible and verified", t.seconds)
    assert ok


def test_criterion_05_rm1_hierarchy():
    with timer() as t:
        got = {qm: weight_hierarchy(C).d for qm, C in rm_codes().items()}
    want = {qm: rm1_hierarchy(*qm) for qm in got}
    ok = got == want and t.seconds < 60
    record(5, ok, f"{got}", t.seconds)
    assert ok


def test_criterion_06_rm1_affine_positive():
    with timer() as t:
        run = affine_run()
    counts = {qm: (sum(isinstance(r, Feasible) for _, _, r in rows), len(rows)) for qm, rows in run.items()}
    exhaustive_ok = counts[(2, 2)][0] == counts[(2, 2)][1] > 0
    random_ok = counts[(3, 2)] == (200, 200)
    ok = exhaustive_ok and random_ok and t.seconds < 60
    detail = f"(2,2) exhaustive {counts[(2, 2)][0]}/{counts[(2, 2)][1]}, (3,2) random {counts[(3, 2)][0]}/200"
    if not random_ok:
        bad = next(S for _, S, r in run[(3, 2)] if not isinstance(r, Feasible))
        detail += f"; refuted by parallel lines {bad.to_json()['sets']}"
    record(6, ok, detail, t.seconds)
    assert exhaustive_ok and t.seconds < 60
    if not random_ok:
        # Three parallel lines over GF(3) pass every GHW constraint (all
        # intersections are empty) but their functionals x, x-1, x-2 span only
        # two dimensions.  The brute-force oracle confirms each refutation.
        for C, S, r in run[(3, 2)]:
            if not isinstance(r, Feasible):
                assert isinstance(exhaustive_oracle(C, S), Infeasible)
        pytest.xfail("claim does not hold over GF(3): parallel-line systems are infeasible")


def test_criterion_07_rm1_falsify():
    with timer() as t:
        found = {}
        for qm in ((2, 3), (3, 2)):
            C = reed_muller_1(field_of_order(qm[0]), qm[1])
            cfg = FalsifyConfig(C, trials=10_000, seed=SEED, mode="cardinality+ghw")
            cex = falsify(cfg)
            found[qm] = cex is not None and reverify(C, cex, cfg.mode)
    ok = all(found.values()) and t.seconds < 60
    record(7, ok, f"counterexample re-verified: {found}", t.seconds)
    assert ok


def test_criterion_08_oracle_equivalence():
    with timer() as t:
        run = oracle_run()
        agree = sum(type(a) is type(b) for _, _, a, b in run)
    ok = agree == len(run) == 200 and t.seconds < 120
    record(8, ok, f"{agree}/{len(run)} verdicts identical", t.seconds)
    assert ok


def test_criterion_09_row_zero_set_bound():
    with timer() as t:
        C, _ = elliptic_example_f4()
        codes = [C, *rs_codes(), *rm_codes().values(), cubic_dichotomy_instance().code]
        matrices = [(C, C.G) for C in codes]
        matrices += [(C, r.generator) for C, _, r in gm_mds_run() if isinstance(r, Feasible)]
        for rows in affine_run().values():
            matrices += [(C, r.generator) for C, _, r in rows if isinstance(r, Feasible)]
        bad = [C for C, G in matrices if not check_row_zero_sets(C, G).passed]
    ok = not bad
    record(9, ok, f"{len(matrices)} matrices, {len(bad)} violations", t.seconds)
    assert ok


def test_criterion_10_hierarchy_properties():
    with timer() as t:
        C, _ = elliptic_example_f4()
        codes = [C, *rs_codes(), *rm_codes().values()]
        codes += [C for C, _, _ in gm_mds_run()]
        codes += [C for C, _, _, _ in oracle_run()]
        bad = []
        for C in codes:
            d = weight_hierarchy(C)
            if any(a >= b for a, b in zip(d.d, d.d[1:])) or d.singleton_violations(C.n) or d[1] != min_distance(C):
                bad.append(C)
        cubic_codes = [elliptic_example_f4()[0], cubic_dichotomy_instance().code]
        for C in cubic_codes:
            d = weight_hierarchy(C)
            if d[1] == C.n - 3 and (d[2] != C.n - 1 or not is_r_mds(C, 2)):
                bad.append(C)
    ok = not bad
    record(10, ok, f"{len(codes)} codes + {len(cubic_codes)} cubic codes, {len(bad)} violations", t.seconds)
    assert ok


def test_criterion_11_cubic_dichotomy():
    with timer() as t:
        inst = cubic_dichotomy_instance()
        a = solve_support_constrained(inst.code, inst.independent)
        b = solve_support_constrained(inst.code, inst.concurrent)
    ok = isinstance(a, Feasible) and isinstance(b, Infeasible) and t.seconds < 10
    record(
        11, ok,
        f"GF(7) n={inst.code.n}: lines {inst.independent_lines} -> {a.status}, "
        f"concurrent {inst.concurrent_lines} -> {b.status}",
        t.seconds,
    )
    assert ok
