import itertools

import pytest
from hypothesis import given, settings, strategies as st

from ghwforge.errors import DivisionByZero, FieldMismatch, NotPrime, TooLarge
from ghwforge.field import (
    field_from_json,
    field_new,
    field_of_order,
    is_irreducible,
    smallest_irreducible,
)

SMALL = [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (2, 4), (13, 1), (5, 2), (2, 5), (2, 6)]


def test_canonical_moduli():
    assert field_new(2, 2).modulus == (1, 1, 1)
    assert field_new(3, 2).modulus == (1, 0, 1)
    # smallest constant-term-first: x^3 + x^2 + 1 beats x^3 + x + 1
    assert field_new(2, 3).modulus == (1, 0, 1, 1)
    assert field_new(2, 4).modulus == (1, 0, 0, 1, 1)


def test_smallest_irreducible_is_smallest():
    for p, m in [(2, 3), (2, 4), (3, 2), (3, 3), (5, 2)]:
        best = smallest_irreducible(p, m)
        for tail in itertools.product(range(p), repeat=m):
            cand = tail + (1,)
            if cand == best:
                break
            assert not is_irreducible(cand, p)


@pytest.mark.parametrize("p,m", SMALL)
def test_field_axioms_exhaustive(p, m):
    F = field_new(p, m)
    q = F.q
    els = range(q)
    for a in els:
        assert F.add(a, 0) == a and F.mul(a, 1) == a
        assert F.add(a, F.neg(a)) == 0
        if a:
            assert F.mul(a, F.inv(a)) == 1
        for b in els:
            assert F.add(a, b) == F.add(b, a)
            assert F.mul(a, b) == F.mul(b, a)
    if q <= 16:
        for a, b, c in itertools.product(els, repeat=3):
            assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
            assert F.add(a, F.add(b, c)) == F.add(F.add(a, b), c)
            assert F.mul(a, F.mul(b, c)) == F.mul(F.mul(a, b), c)


@pytest.mark.parametrize("p,m", SMALL)
def test_multiplicative_group_cyclic(p, m):
    F = field_new(p, m)
    g = F.generator
    seen = {F.pow(g, e) for e in range(F.q - 1)}
    assert seen == set(range(1, F.q))


def test_frobenius_additive_in_char_p():
    F = field_new(3, 2)
    for a in range(9):
        for b in range(9):
            assert F.pow(F.add(a, b), 3) == F.add(F.pow(a, 3), F.pow(b, 3))


def test_errors():
    with pytest.raises(NotPrime):
        field_new(4, 1)
    with pytest.raises(TooLarge):
        field_new(2, 21)
    F = field_of_order(7)
    with pytest.raises(DivisionByZero):
        F.inv(0)
    with pytest.raises(ZeroDivisionError):
        F(3) / F(0)
    with pytest.raises(FieldMismatch):
        F(1) + field_of_order(5)(1)
    with pytest.raises(ValueError):
        field_of_order(6)


def test_element_operators():
    F = field_of_order(4)
    w = F(2)
    assert w * w == F(3)
    assert w * w * w == F(1)
    assert w + w == F(0)
    assert (w ** -1) * w == F(1)
    assert str(F) == "GF(2^2)"
    assert str(field_of_order(7)) == "GF(7)"


def test_json_round_trip_and_rejects_noncanonical():
    F = field_new(2, 3)
    assert field_from_json(F.to_json()) is F
    with pytest.raises(ValueError):
        field_from_json({"p": 2, "m": 3, "modulus": [1, 1, 0, 1]})


def test_large_field_builds():
    F = field_new(2, 16)
    a, b = 12345, 54321
    assert F.mul(F.div(a, b), b) == a


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(SMALL), st.data())
def test_pow_matches_repeated_multiplication(pm, data):
    F = field_new(*pm)
    a = data.draw(st.integers(0, F.q - 1))
    e = data.draw(st.integers(0, 40))
    acc = 1
    for _ in range(e):
        acc = F.mul(acc, a)
    assert F.pow(a, e) == acc


@pytest.mark.parametrize("p,m", SMALL)
def test_inverse_involution_and_determinism(p, m):
    F = field_new(p, m)
    for a in range(1, F.q):
        assert F.inv(F.inv(a)) == a
    field_new.cache_clear()
    assert field_new(p, m).modulus == F.modulus
