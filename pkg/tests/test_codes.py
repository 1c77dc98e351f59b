import itertools

import pytest
from hypothesis import given, settings, strategies as st

from ghwforge.codes import (
    LinearCode,
    WeightHierarchy,
    check_row_zero_sets,
    gaussian_binomial,
    ghw,
    is_r_mds,
    min_distance,
    min_weight_span,
    vanishing_subcode,
    weight_hierarchy,
)
from ghwforge.errors import BadIndex, BadRank, TooLarge
from ghwforge.families import elliptic_example_f4, reed_muller_1, rs_code
from ghwforge.field import field_of_order
from ghwforge.linalg import GFMatrix, Subspace, rank


def brute_hierarchy(C):
    """d_r as the minimum support over all r-dimensional subcodes, found by
    trying every r-set of projective message points."""
    spec, k = C.spec, C.k
    pts = Subspace.full(spec, k).projective_points()
    words = {p: C.encode(p) for p in pts}
    d = []
    for r in range(1, k + 1):
        best = C.n
        for combo in itertools.combinations(pts, r):
            if rank(GFMatrix.from_rows(spec, combo)) < r:
                continue
            supp = {j for p in combo for j, x in enumerate(words[p]) if x}
            best = min(best, len(supp))
        d.append(best)
    return tuple(d)


@st.composite
def small_codes(draw):
    q = draw(st.sampled_from([2, 3, 4]))
    spec = field_of_order(q)
    k = draw(st.integers(1, 3))
    n = draw(st.integers(k, 7))
    rows = draw(st.lists(st.lists(st.integers(0, q - 1), min_size=n, max_size=n), min_size=k, max_size=k))
    M = GFMatrix.from_rows(spec, rows)
    if rank(M) < k:
        # force full rank by overwriting an identity block
        rows = [r[:] for r in rows]
        for i in range(k):
            for j in range(k):
                rows[i][j] = int(i == j)
    return LinearCode.from_rows(spec, rows)


def test_gaussian_binomial():
    assert gaussian_binomial(3, 1, 2) == 7
    assert gaussian_binomial(4, 2, 2) == 35
    assert gaussian_binomial(3, 0, 5) == 1
    assert gaussian_binomial(2, 3, 5) == 0


def test_elliptic_hierarchy_both_methods():
    C, _ = elliptic_example_f4()
    assert weight_hierarchy(C, "subcode").d == (5, 7, 8)
    assert weight_hierarchy(C, "zeroset").d == (5, 7, 8)
    assert min_distance(C) == 5
    assert min_weight_span(C)
    assert not is_r_mds(C, 1) and is_r_mds(C, 2) and is_r_mds(C, 3)


def test_rs_is_mds():
    C = rs_code(7, 6, 3)
    assert weight_hierarchy(C).d == (4, 5, 6)
    assert all(is_r_mds(C, r) for r in (1, 2, 3))


def test_identity_code():
    spec = field_of_order(3)
    C = LinearCode(GFMatrix.identity(spec, 4))
    assert weight_hierarchy(C).d == (1, 2, 3, 4)


@settings(max_examples=60, deadline=None)
@given(small_codes())
def test_both_methods_match_brute_force(C):
    want = brute_hierarchy(C)
    assert tuple(ghw(C, r, "subcode") for r in range(1, C.k + 1)) == want
    fresh = LinearCode(C.G)
    assert tuple(ghw(fresh, r, "zeroset") for r in range(1, C.k + 1)) == want


@settings(max_examples=40, deadline=None)
@given(small_codes(), st.data())
def test_hierarchy_invariant_under_row_ops_and_column_permutation(C, data):
    spec, k, n = C.spec, C.k, C.n
    d = weight_hierarchy(C).d
    # add a multiple of one row to another
    if k >= 2:
        c = data.draw(st.integers(1, spec.q - 1))
        rows = [list(r) for r in C.G]
        rows[0] = [spec.add(a, spec.mul(c, b)) for a, b in zip(rows[0], rows[1])]
        assert weight_hierarchy(LinearCode.from_rows(spec, rows)).d == d
    perm = data.draw(st.permutations(range(n)))
    assert weight_hierarchy(LinearCode(C.G.columns(perm))).d == d


@settings(max_examples=40, deadline=None)
@given(small_codes())
def test_hierarchy_structural_properties(C):
    d = weight_hierarchy(C)
    assert all(a < b for a, b in zip(d.d, d.d[1:]))
    assert not d.singleton_violations(C.n)
    assert d[1] == min_distance(C)
    assert check_row_zero_sets(C).passed


@settings(max_examples=40, deadline=None)
@given(small_codes(), st.data())
def test_vanishing_subcode_dimension(C, data):
    Z = data.draw(st.sets(st.integers(1, C.n), max_size=C.n))
    V = vanishing_subcode(C, Z)
    cols = C.G.columns([z - 1 for z in sorted(Z)]) if Z else None
    assert V.dim == C.k - (rank(cols) if Z else 0)
    for v in V.basis:
        w = C.encode(v)
        assert all(w[z - 1] == 0 for z in Z)


def test_rm_hierarchy():
    C = reed_muller_1(field_of_order(2), 3)
    assert weight_hierarchy(C).d == (4, 6, 7, 8)


def test_errors_and_validation():
    spec = field_of_order(2)
    with pytest.raises(ValueError):
        LinearCode.from_rows(spec, [[1, 1], [1, 1]])
    C = rs_code(5, 4, 2)
    with pytest.raises(BadRank):
        ghw(C, 3)
    with pytest.raises(ValueError):
        ghw(C, 1, "magic")
    with pytest.raises(BadIndex):
        vanishing_subcode(C, [5])
    with pytest.raises(ValueError):
        WeightHierarchy((3, 3))


def test_budget_env_override(monkeypatch):
    C = rs_code(13, 12, 4)
    monkeypatch.setenv("GHWFORGE_BUDGET", "10")
    with pytest.raises(TooLarge):
        ghw(LinearCode(C.G), 2, "subcode")
    with pytest.raises(TooLarge):
        ghw(LinearCode(C.G), 2, "zeroset")


def test_json_round_trip():
    C, _ = elliptic_example_f4()
    D = LinearCode.from_json(C.to_json())
    assert D.G == C.G and D.spec is C.spec
