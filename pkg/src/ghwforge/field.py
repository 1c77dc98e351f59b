"""Exact arithmetic in GF(p^m).

Elements are integer codes: the polynomial ``sum c_i * alpha**i`` (``alpha`` a
root of the modulus) is stored as ``sum c_i * p**i``.  Code 0 is the additive
identity and code 1 the multiplicative identity.

The modulus of ``GF(p^m)`` is the lexicographically smallest monic irreducible
polynomial of degree ``m``, comparing coefficient vectors constant term first.
For ``GF(4)`` this is ``x^2 + x + 1``, so the element with code 2 satisfies
``w^2 + w + 1 = 0``.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterator, Sequence

import numpy as np

from .errors import DivisionByZero, FieldMismatch, NotPrime, TooLarge

MAX_ORDER = 2**20
LOG_TABLE_MAX = 2**16
ADD_TABLE_MAX = 2**11
# q*q lookup tables handed to the compiled kernels
KERNEL_TABLE_MAX = 2**10


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def _prime_factors(n: int) -> list[int]:
    out, f = [], 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


# -- polynomials over GF(p), coefficient lists constant term first ----------

def _poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    """Remainder of ``a`` modulo monic ``b`` over GF(p)."""
    r = _poly_trim(list(a))
    db = len(b) - 1
    while len(r) - 1 >= db:
        c = r[-1]
        shift = len(r) - 1 - db
        for i, bi in enumerate(b):
            r[shift + i] = (r[shift + i] - c * bi) % p
        _poly_trim(r)
    return r


def _monic_polys(p: int, deg: int) -> Iterator[tuple[int, ...]]:
    """Monic polynomials of exact degree ``deg`` in lexicographic order."""
    for low in itertools.product(range(p), repeat=deg):
        yield low + (1,)


def is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    deg = len(poly) - 1
    if deg < 1 or poly[-1] % p == 0:
        return False
    if deg == 1:
        return True
    if poly[0] % p == 0:
        return False
    for d in range(1, deg // 2 + 1):
        for f in _monic_polys(p, d):
            if not _poly_mod(poly, f, p):
                return False
    return True


def smallest_irreducible(p: int, m: int) -> tuple[int, ...]:
    for poly in _monic_polys(p, m):
        if is_irreducible(poly, p):
            return poly
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


# -- the field ---------------------------------------------------------------

@dataclass(frozen=True)
class FieldSpec:
    """A finite field GF(p^m) with a fixed modulus.

    Scalar operations act on integer codes; see :class:`FieldElement` for the
    operator-overloaded wrapper.
    """

    p: int
    m: int
    modulus: tuple[int, ...]
    q: int = field(init=False)

    add: Callable[[int, int], int] = field(init=False, repr=False, compare=False)
    sub: Callable[[int, int], int] = field(init=False, repr=False, compare=False)
    mul: Callable[[int, int], int] = field(init=False, repr=False, compare=False)
    neg_table: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        p, m = self.p, self.m
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        if len(self.modulus) != m + 1 or self.modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree m")
        if not is_irreducible(self.modulus, p):
            raise ValueError(f"modulus {self.modulus} is reducible over GF({p})")
        q = p**m
        set_ = functools.partial(object.__setattr__, self)
        set_("q", q)

        powers = [p**i for i in range(m)]
        set_("_powers", powers)
        set_("_modbits", sum(c << i for i, c in enumerate(self.modulus)))
        if p == 2:
            neg = tuple(range(q))
        elif m == 1:
            neg = tuple((-a) % p for a in range(q))
        else:
            neg = tuple(self._from_digits([(-d) % p for d in self._digits(a)]) for a in range(q))
        set_("neg_table", neg)

        if m == 1:
            set_("add", lambda a, b: (a + b) % p)
            set_("sub", lambda a, b: (a - b) % p)
        elif p == 2:
            set_("add", int.__xor__)
            set_("sub", int.__xor__)
        else:
            add_digits = lambda a, b: self._from_digits(  # noqa: E731
                [(x + y) % p for x, y in zip(self._digits(a), self._digits(b))]
            )
            if q <= ADD_TABLE_MAX:
                table = [[add_digits(a, b) for b in range(q)] for a in range(q)]
                set_("add", lambda a, b: table[a][b])
                set_("sub", lambda a, b: table[a][neg[b]])
            else:
                set_("add", add_digits)
                set_("sub", lambda a, b: add_digits(a, neg[b]))

        if m == 1:
            set_("mul", lambda a, b: (a * b) % p)
            inv = [0] + [pow(a, p - 2, p) for a in range(1, q)]
            set_("_inv", inv)
            set_("_exp", None)
            set_("_log", None)
            set_("generator", self._find_generator_direct())
        elif q <= LOG_TABLE_MAX:
            g = self._find_generator_direct()
            exp = [0] * (2 * (q - 1))
            log = [0] * q
            x = 1
            for i in range(q - 1):
                exp[i] = x
                exp[i + q - 1] = x
                log[x] = i
                x = self._mul_poly(x, g)
            qm1 = q - 1

            def mul(a: int, b: int) -> int:
                if a == 0 or b == 0:
                    return 0
                return exp[log[a] + log[b]]

            inv = [0] + [exp[(qm1 - log[a]) % qm1] for a in range(1, q)]
            set_("mul", mul)
            set_("_inv", inv)
            set_("_exp", exp)
            set_("_log", log)
            set_("generator", g)
        else:
            set_("mul", self._mul_poly)
            set_("_inv", None)
            set_("_exp", None)
            set_("_log", None)
            set_("generator", None)
        set_("_tables", None)

    # -- representation helpers --

    def _digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.m):
            a, r = divmod(a, self.p)
            out.append(r)
        return out

    def _from_digits(self, digits: Sequence[int]) -> int:
        return sum(d * w for d, w in zip(digits, self._powers))

    def _mul_poly(self, a: int, b: int) -> int:
        p, m = self.p, self.m
        if p == 2:
            # carry-less multiply, then reduce by the modulus bit pattern
            mod = self._modbits
            r = 0
            while b:
                if b & 1:
                    r ^= a
                a <<= 1
                if a >> m:
                    a ^= mod
                b >>= 1
            return r
        da, db = self._digits(a), self._digits(b)
        prod = [0] * (2 * m - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        return self._from_digits(_poly_mod(prod, self.modulus, p) + [0] * m)

    def _pow_poly(self, a: int, e: int) -> int:
        result = 1
        while e:
            if e & 1:
                result = self._mul_poly(result, a)
            a = self._mul_poly(a, a)
            e >>= 1
        return result

    def _find_generator_direct(self) -> int:
        n = self.q - 1
        factors = _prime_factors(n)
        for g in range(1, self.q):
            if all(self._pow_poly(g, n // f) != 1 for f in factors):
                return g
        raise AssertionError("multiplicative group is not cyclic")  # pragma: no cover

    # -- scalar operations on codes --

    def neg(self, a: int) -> int:
        return self.neg_table[a]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        if self._inv is not None:
            return self._inv[a]
        return self.pow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        if a == 0:
            return 1 if e == 0 else 0
        if self._log is not None:
            return self._exp[(self._log[a] * e) % (self.q - 1)]
        result = 1
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    def check(self, a: int) -> int:
        if not 0 <= a < self.q:
            raise ValueError(f"{a} is not an element code of GF({self.q})")
        return a

    # -- element views --

    def __call__(self, code: int) -> FieldElement:
        return FieldElement(self, self.check(int(code)))

    def elements(self) -> list[FieldElement]:
        return enumerate_elements(self)

    @property
    def alpha(self) -> FieldElement:
        """Class of ``x`` modulo the modulus (code ``p``; ``1`` when ``m == 1``)."""
        return self(self.p % self.q if self.m > 1 else 1)

    def tables(self) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray] | None:
        """Flattened ``(add, mul, neg, inv)`` int32 lookup tables for small fields."""
        if self.q > KERNEL_TABLE_MAX:
            return None
        if self._tables is None:
            q = self.q
            add = np.array([[self.add(a, b) for b in range(q)] for a in range(q)], dtype=np.int32)
            mul = np.array([[self.mul(a, b) for b in range(q)] for a in range(q)], dtype=np.int32)
            neg = np.array(self.neg_table, dtype=np.int32)
            inv = np.array([0] + [self.inv(a) for a in range(1, q)], dtype=np.int32)
            object.__setattr__(self, "_tables", (add.ravel(), mul.ravel(), neg, inv))
        return self._tables

    def to_json(self) -> dict:
        return {"p": self.p, "m": self.m, "modulus": list(self.modulus)}

    def __str__(self) -> str:
        return f"GF({self.q})" if self.m == 1 else f"GF({self.p}^{self.m})"


@functools.lru_cache(maxsize=None)
def field_new(p: int, m: int = 1) -> FieldSpec:
    """Return the canonical ``GF(p^m)``.  Repeated calls return the same object."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if m < 1:
        raise ValueError("extension degree must be >= 1")
    if p**m > MAX_ORDER:
        raise TooLarge(f"GF({p}^{m}) exceeds the order cap {MAX_ORDER}")
    return FieldSpec(p, m, smallest_irreducible(p, m))


def field_of_order(q: int) -> FieldSpec:
    """Canonical field with ``q`` elements."""
    for p in range(2, q + 1):
        if q % p == 0:
            m, r = 0, q
            while r % p == 0:
                r //= p
                m += 1
            if r != 1 or not is_prime(p):
                break
            return field_new(p, m)
    raise ValueError(f"{q} is not a prime power")


def field_from_json(obj: dict) -> FieldSpec:
    spec = field_new(int(obj["p"]), int(obj["m"]))
    if "modulus" in obj and tuple(obj["modulus"]) != spec.modulus:
        raise ValueError(
            f"non-canonical modulus {obj['modulus']} for {spec}; expected {list(spec.modulus)}"
        )
    return spec


@dataclass(frozen=True)
class FieldElement:
    spec: FieldSpec
    code: int

    def _coerce(self, other: FieldElement | int) -> int:
        if isinstance(other, FieldElement):
            if other.spec != self.spec:
                raise FieldMismatch(f"{self.spec} vs {other.spec}")
            return other.code
        if isinstance(other, int) and other in (0, 1):
            return other
        return NotImplemented

    def __add__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.spec, self.spec.add(self.code, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.spec, self.spec.sub(self.code, b))

    def __mul__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.spec, self.spec.mul(self.code, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.spec, self.spec.div(self.code, b))

    def __neg__(self) -> FieldElement:
        return FieldElement(self.spec, self.spec.neg(self.code))

    def __pow__(self, e: int) -> FieldElement:
        return FieldElement(self.spec, self.spec.pow(self.code, e))

    def inverse(self) -> FieldElement:
        return FieldElement(self.spec, self.spec.inv(self.code))

    def __bool__(self) -> bool:
        return self.code != 0

    def __int__(self) -> int:
        return self.code

    def __repr__(self) -> str:
        return f"{self.spec}({self.code})"


def _same(a: FieldElement, b: FieldElement) -> FieldSpec:
    if a.spec != b.spec:
        raise FieldMismatch(f"{a.spec} vs {b.spec}")
    return a.spec


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    return FieldElement(_same(a, b), a.spec.add(a.code, b.code))


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return FieldElement(_same(a, b), a.spec.mul(a.code, b.code))


def neg(a: FieldElement) -> FieldElement:
    return -a


def inv(a: FieldElement) -> FieldElement:
    return a.inverse()


def power(a: FieldElement, e: int) -> FieldElement:
    return a**e


def enumerate_elements(spec: FieldSpec) -> list[FieldElement]:
    return [FieldElement(spec, c) for c in range(spec.q)]
