import pytest
from hypothesis import given, settings, strategies as st

from ghwforge.codes import LinearCode
from ghwforge.errors import AmbientMismatch, ShapeMismatch, TooLarge
from ghwforge.families import elliptic_example_f4, rs_code
from ghwforge.field import field_of_order
from ghwforge.harness import oracle_instances, random_full_rank_code, random_subset_system
from ghwforge.linalg import Subspace, sum_dim
from ghwforge.rng import XorShift64Star
from ghwforge.sets import SubsetSystem
from ghwforge.solver import (
    Feasible,
    Infeasible,
    exhaustive_oracle,
    extract_basis,
    hall_feasibility,
    solve_support_constrained,
    vanishing_spaces,
    verify_solution,
)


def assert_valid(C, S, out):
    if isinstance(out, Feasible):
        assert verify_solution(C, S, out.generator)
    else:
        spaces = vanishing_spaces(C, S)
        dim = sum_dim([spaces[i - 1] for i in out.witness])
        assert dim == out.deficient_dim < len(out.witness)
        # inclusion-minimal: dropping any index restores the Hall inequality
        for drop in out.witness:
            rest = [i for i in out.witness if i != drop]
            if rest:
                assert sum_dim([spaces[i - 1] for i in rest]) >= len(rest)


def test_elliptic_counterexample():
    C, S = elliptic_example_f4()
    out = solve_support_constrained(C, S)
    assert out == Infeasible((1, 2, 3), 2)
    assert out.to_json() == {"status": "infeasible", "witness": [1, 2, 3], "dim": 2}
    assert not out
    ref = exhaustive_oracle(C, S)
    assert ref == Infeasible((1, 2, 3), 2)


def test_empty_sets_feasible():
    C = rs_code(7, 6, 3)
    out = solve_support_constrained(C, SubsetSystem.of(6, [[], [], []]))
    assert out and verify_solution(C, SubsetSystem.of(6, [[], [], []]), out.generator)


def test_rs_instance_feasible_and_oracle_agrees():
    C = rs_code(8, 6, 3)
    S = SubsetSystem.of(6, [[1, 2], [2, 3], [3, 4]])
    out = solve_support_constrained(C, S)
    assert isinstance(out, Feasible)
    assert isinstance(exhaustive_oracle(C, S), Feasible)


def test_oracle_equivalence_200(each_backend):
    for C, S in oracle_instances(99, 200):
        a = solve_support_constrained(C, S)
        b = exhaustive_oracle(C, S)
        assert type(a) is type(b)
        assert_valid(C, S, a)
        if isinstance(a, Infeasible):
            assert a.witness == b.witness and a.deficient_dim == b.deficient_dim


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 2**32), st.data())
def test_enlarging_a_set_never_helps(seed, data):
    rng = XorShift64Star(seed)
    spec = field_of_order(data.draw(st.sampled_from([2, 3, 4])))
    k = data.draw(st.integers(1, 3))
    n = data.draw(st.integers(k, 6))
    C = random_full_rank_code(rng, spec, n, k)
    S = random_subset_system(rng, n, k, n)
    i = data.draw(st.integers(0, k - 1))
    x = data.draw(st.integers(1, n))
    bigger = SubsetSystem(n, S.subsets[:i] + (S.subsets[i] | {x},) + S.subsets[i + 1:])
    if not solve_support_constrained(C, S):
        assert not solve_support_constrained(C, bigger)


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 2**32), st.data())
def test_permuting_subsets_permutes_rows(seed, data):
    rng = XorShift64Star(seed)
    spec = field_of_order(data.draw(st.sampled_from([2, 3, 5])))
    k = data.draw(st.integers(1, 3))
    n = data.draw(st.integers(k, 6))
    C = random_full_rank_code(rng, spec, n, k)
    S = random_subset_system(rng, n, k, n)
    order = data.draw(st.permutations(range(1, k + 1)))
    a = solve_support_constrained(C, S)
    b = solve_support_constrained(C, S.permuted(order))
    assert bool(a) == bool(b)
    if a:
        # the rows of the first solution, permuted, also solve the permuted system
        from ghwforge.linalg import GFMatrix

        G = GFMatrix.from_rows(spec, [a.generator[i - 1] for i in order])
        assert verify_solution(C, S.permuted(order), G)
    assert_valid(C, S, a)


def test_hall_and_extraction_on_raw_subspaces():
    spec = field_of_order(3)
    line = Subspace.span(spec, 3, [[1, 0, 0], [0, 1, 0]])
    point = Subspace.span(spec, 3, [[1, 1, 0]])
    assert hall_feasibility([point, point]) == ((1, 2), 1)
    assert hall_feasibility([line, line, point]) == ((1, 2, 3), 2)
    reps = extract_basis([line, point, Subspace.full(spec, 3)])
    assert reps[1] == (1, 1, 0)
    with pytest.raises(AmbientMismatch):
        hall_feasibility([line, Subspace.full(spec, 4)])


def test_shape_errors_and_oracle_limit():
    C = rs_code(5, 4, 2)
    with pytest.raises(ShapeMismatch):
        solve_support_constrained(C, SubsetSystem.of(4, [[1]]))
    with pytest.raises(ShapeMismatch):
        solve_support_constrained(C, SubsetSystem.of(5, [[1], [2]]))
    with pytest.raises(TooLarge):
        exhaustive_oracle(rs_code(13, 8, 4), SubsetSystem.of(8, [[]] * 4))


def test_verify_solution_rejects_bad_matrices():
    C, S = elliptic_example_f4()
    T = SubsetSystem.of(8, [[], [], []])
    assert verify_solution(C, T, C.G)
    assert not verify_solution(C, S, C.G)
    other = rs_code(4, 4, 3)
    assert not verify_solution(C, T, other.G)
