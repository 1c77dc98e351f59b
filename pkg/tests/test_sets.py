import itertools

import pytest
from hypothesis import given, settings, strategies as st

from ghwforge.codes import WeightHierarchy
from ghwforge.errors import BadIndex, EmptyIndexSet, ShapeMismatch, TooLarge
from ghwforge.families import elliptic_example_f4
from ghwforge.harness import random_subset_system
from ghwforge.rng import XorShift64Star
from ghwforge.sets import (
    SubsetSystem,
    check_cardinality,
    check_ghw_constraints,
    check_mds_condition,
    check_mode,
    index_sets,
    intersection_over,
)


def brute_violations(S, bound):
    out = []
    for size in range(1, S.k + 1):
        for I in itertools.combinations(range(1, S.k + 1), size):
            if len(intersection_over(S, I)) > bound(size):
                out.append(I)
    return out


@st.composite
def systems(draw, max_n=10, max_k=5):
    n = draw(st.integers(1, max_n))
    k = draw(st.integers(1, max_k))
    sets = draw(st.lists(st.sets(st.integers(1, n), max_size=n), min_size=k, max_size=k))
    return SubsetSystem.of(n, sets)


def test_bundled_system_passes_ghw_and_cardinality():
    C, S = elliptic_example_f4()
    d = WeightHierarchy((5, 7, 8))
    assert check_ghw_constraints(S, d).passed
    assert check_cardinality(S).passed
    assert check_mode(S, "cardinality+ghw", d).passed
    # disjoint pairs also meet the MDS condition; the code is what fails
    assert check_mds_condition(S).passed


def test_reports_list_all_violations_in_order():
    S = SubsetSystem.of(4, [[1, 2, 3], [1, 2], [1, 2, 4]])
    r = check_mds_condition(S)
    assert r.violations == brute_violations(S, lambda s: 3 - s)
    assert r.violations == sorted(r.violations, key=lambda I: (len(I), I))
    assert r.to_json()["pass"] is False


def test_mds_condition_matches_mds_hierarchy_on_500_samples():
    rng = XorShift64Star(11)
    for _ in range(500):
        n = 1 + rng.below(10)
        k = 1 + rng.below(min(n, 5))
        S = random_subset_system(rng, n, k, n)
        d = WeightHierarchy.mds(n, k)
        assert check_ghw_constraints(S, d).violations == check_mds_condition(S).violations


@settings(max_examples=200, deadline=None)
@given(systems(), st.data())
def test_two_mds_cardinality_implies_singleton_ghw(S, data):
    k, n = S.k, max(S.n, S.k + 2)
    S = SubsetSystem(n, S.subsets)
    if k < 2:
        return
    d = WeightHierarchy((n - k,) + tuple(n - k + r for r in range(2, k + 1)))
    ghw = check_ghw_constraints(S, d)
    mds = check_mds_condition(S)
    assert [I for I in ghw.violations if len(I) >= 2] == [I for I in mds.violations if len(I) >= 2]
    if check_cardinality(S).passed:
        assert not [I for I in ghw.violations if len(I) == 1]


@settings(max_examples=200, deadline=None)
@given(systems(), st.data())
def test_removing_an_element_never_breaks_a_pass(S, data):
    d = WeightHierarchy.mds(max(S.n, S.k), S.k)
    S = SubsetSystem(max(S.n, S.k), S.subsets)
    nonempty = [i for i, s in enumerate(S.subsets) if s]
    if not nonempty:
        return
    i = data.draw(st.sampled_from(nonempty))
    x = data.draw(st.sampled_from(sorted(S.subsets[i])))
    smaller = SubsetSystem(S.n, S.subsets[:i] + (S.subsets[i] - {x},) + S.subsets[i + 1:])
    for check in (lambda T: check_mds_condition(T), lambda T: check_ghw_constraints(T, d), check_cardinality):
        if check(S).passed:
            assert check(smaller).passed


@settings(max_examples=100, deadline=None)
@given(systems())
def test_scan_matches_brute_force(S):
    assert check_mds_condition(S).violations == brute_violations(S, lambda s: S.k - s)


def test_index_sets_and_errors():
    assert list(index_sets(3)) == [(1,), (2,), (3,), (1, 2), (1, 3), (2, 3), (1, 2, 3)]
    S = SubsetSystem.of(3, [[1], [2]])
    with pytest.raises(EmptyIndexSet):
        intersection_over(S, [])
    with pytest.raises(BadIndex):
        SubsetSystem.of(3, [[4]])
    with pytest.raises(ShapeMismatch):
        check_ghw_constraints(S, (1, 2, 3))
    with pytest.raises(TooLarge):
        check_mds_condition(SubsetSystem.of(2, [[]] * 21))
    with pytest.raises(ValueError):
        check_mode(S, "ghw")
    with pytest.raises(ValueError):
        check_mode(S, "nonsense", (1, 2))


def test_json_and_permutation():
    S = SubsetSystem.of(8, [[4, 8], [3, 7], [5, 6]])
    assert SubsetSystem.from_json(S.to_json()) == S
    assert S.to_json() == {"n": 8, "sets": [[4, 8], [3, 7], [5, 6]]}
    assert S.permuted([3, 1, 2])[1] == frozenset({5, 6})
    assert S[1] == frozenset({4, 8})
