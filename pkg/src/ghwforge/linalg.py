"""Dense matrices and subspaces over a finite field.

Subspaces are stored by their reduced row echelon basis, which makes equality
of subspaces plain equality of entries.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from . import kernels
from .errors import AmbientMismatch, FieldMismatch, ShapeMismatch
from .field import FieldSpec, field_from_json


@dataclass(frozen=True)
class GFMatrix:
    spec: FieldSpec
    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ShapeMismatch(f"entries do not form a {self.rows}x{self.cols} grid")
        q = self.spec.q
        for r in self.entries:
            for x in r:
                if not 0 <= x < q:
                    raise ValueError(f"entry {x} is not an element of {self.spec}")

    @classmethod
    def from_rows(cls, spec: FieldSpec, rows: Iterable[Sequence[int]], cols: int | None = None) -> GFMatrix:
        entries = tuple(tuple(int(x) for x in r) for r in rows)
        if cols is None:
            if not entries:
                raise ShapeMismatch("cannot infer column count of an empty matrix")
            cols = len(entries[0])
        return cls(spec, len(entries), cols, entries)

    @classmethod
    def zeros(cls, spec: FieldSpec, rows: int, cols: int) -> GFMatrix:
        return cls(spec, rows, cols, tuple((0,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, spec: FieldSpec, n: int) -> GFMatrix:
        return cls(spec, n, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    def __getitem__(self, idx):
        if isinstance(idx, tuple):
            i, j = idx
            return self.entries[i][j]
        return self.entries[idx]

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        return iter(self.entries)

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def transpose(self) -> GFMatrix:
        if self.rows == 0:
            return GFMatrix(self.spec, self.cols, 0, tuple(() for _ in range(self.cols)))
        return GFMatrix(self.spec, self.cols, self.rows, tuple(zip(*self.entries)))

    def columns(self, idx: Sequence[int]) -> GFMatrix:
        """Submatrix on the given 0-based column indices."""
        return GFMatrix(self.spec, self.rows, len(idx), tuple(tuple(r[j] for j in idx) for r in self.entries))

    def select_rows(self, idx: Sequence[int]) -> GFMatrix:
        return GFMatrix(self.spec, len(idx), self.cols, tuple(self.entries[i] for i in idx))

    def stack(self, other: GFMatrix) -> GFMatrix:
        _check_field(self.spec, other.spec)
        if self.cols != other.cols:
            raise ShapeMismatch("column counts differ")
        return GFMatrix(self.spec, self.rows + other.rows, self.cols, self.entries + other.entries)

    def vecmul(self, v: Sequence[int]) -> tuple[int, ...]:
        """Row vector times matrix: ``v @ self``."""
        if len(v) != self.rows:
            raise ShapeMismatch("vector length does not match row count")
        return combine(self.spec, v, self.entries, self.cols)

    def matvec(self, v: Sequence[int]) -> tuple[int, ...]:
        """``self @ v`` for a column vector ``v``."""
        if len(v) != self.cols:
            raise ShapeMismatch("vector length does not match column count")
        add, mul = self.spec.add, self.spec.mul
        out = []
        for r in self.entries:
            acc = 0
            for a, b in zip(r, v):
                if a and b:
                    acc = add(acc, mul(a, b))
            out.append(acc)
        return tuple(out)

    def __matmul__(self, other: GFMatrix) -> GFMatrix:
        _check_field(self.spec, other.spec)
        if self.cols != other.rows:
            raise ShapeMismatch(f"{self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        return GFMatrix(self.spec, self.rows, other.cols, tuple(other.vecmul(r) for r in self.entries))

    def rank(self) -> int:
        return rref(self)[1]

    def to_json(self) -> dict:
        return {"rows": self.rows, "cols": self.cols, "entries": self.tolist()}

    @classmethod
    def from_json(cls, spec: FieldSpec, obj: dict) -> GFMatrix:
        m = cls.from_rows(spec, obj["entries"], cols=obj.get("cols"))
        if "rows" in obj and obj["rows"] != m.rows:
            raise ShapeMismatch("declared row count does not match entries")
        return m

    def __str__(self) -> str:
        width = len(str(self.spec.q - 1))
        return "\n".join(" ".join(str(x).rjust(width) for x in r) for r in self.entries)


def _check_field(a: FieldSpec, b: FieldSpec) -> None:
    if a != b:
        raise FieldMismatch(f"{a} vs {b}")


def combine(spec: FieldSpec, coefs: Sequence[int], rows: Sequence[Sequence[int]], n: int) -> tuple[int, ...]:
    """``sum coefs[i] * rows[i]``."""
    add, mul = spec.add, spec.mul
    acc = [0] * n
    for c, r in zip(coefs, rows):
        if c:
            for j, x in enumerate(r):
                if x:
                    acc[j] = add(acc[j], mul(c, x))
    return tuple(acc)


def rref(M: GFMatrix) -> tuple[GFMatrix, int, list[int]]:
    """Reduced row echelon form, rank, and 1-based pivot columns."""
    if M.rows == 0 or M.cols == 0:
        return M, 0, []
    R, piv = kernels.rref(M.spec, M.entries)
    return GFMatrix.from_rows(M.spec, R, M.cols), len(piv), [c + 1 for c in piv]


def rank(M: GFMatrix) -> int:
    return rref(M)[1]


def _rank_rows(spec: FieldSpec, rows: Sequence[Sequence[int]]) -> int:
    if not rows or not rows[0]:
        return 0
    return len(kernels.rref(spec, rows)[1])


@dataclass(frozen=True)
class Subspace:
    """A subspace of GF(q)^n held by its RREF basis (rows)."""

    spec: FieldSpec
    n: int
    basis: tuple[tuple[int, ...], ...]

    @classmethod
    def span(cls, spec: FieldSpec, n: int, vectors: Iterable[Sequence[int]]) -> Subspace:
        vecs = [tuple(v) for v in vectors]
        if any(len(v) != n for v in vecs):
            raise AmbientMismatch(f"vectors are not in GF(q)^{n}")
        if not vecs or n == 0:
            return cls(spec, n, ())
        R, piv = kernels.rref(spec, vecs)
        return cls(spec, n, tuple(tuple(r) for r in R[: len(piv)]))

    @classmethod
    def full(cls, spec: FieldSpec, n: int) -> Subspace:
        return cls(spec, n, GFMatrix.identity(spec, n).entries)

    @classmethod
    def zero(cls, spec: FieldSpec, n: int) -> Subspace:
        return cls(spec, n, ())

    @property
    def dim(self) -> int:
        return len(self.basis)

    def basis_matrix(self) -> GFMatrix:
        return GFMatrix(self.spec, self.dim, self.n, self.basis)

    def pivots(self) -> list[int]:
        return [next(j for j, x in enumerate(r) if x) for r in self.basis]

    def __contains__(self, v: Sequence[int]) -> bool:
        return subspace_member(self, v)

    def __add__(self, other: Subspace) -> Subspace:
        return subspace_sum(self, other)

    def __and__(self, other: Subspace) -> Subspace:
        return subspace_intersection(self, other)

    def vector(self, coefs: Sequence[int]) -> tuple[int, ...]:
        return combine(self.spec, coefs, self.basis, self.n)

    def count_projective_points(self) -> int:
        q = self.spec.q
        return (q**self.dim - 1) // (q - 1)

    def projective_points(self) -> list[tuple[int, ...]]:
        """One representative per 1-dimensional subspace, each with first nonzero
        entry 1, in lexicographic order of their code sequences."""
        q, d = self.spec.q, self.dim
        out = []
        for lead in range(d):
            for tail in itertools.product(range(q), repeat=d - lead - 1):
                coefs = (0,) * lead + (1,) + tail
                out.append(self.vector(coefs))
        out.sort()
        return out


def _check_ambient(A: Subspace, B: Subspace) -> None:
    if A.spec != B.spec:
        raise AmbientMismatch(f"fields differ: {A.spec} vs {B.spec}")
    if A.n != B.n:
        raise AmbientMismatch(f"ambient dimensions differ: {A.n} vs {B.n}")


def subspace_dim(A: Subspace) -> int:
    return A.dim


def subspace_sum(A: Subspace, B: Subspace) -> Subspace:
    _check_ambient(A, B)
    return Subspace.span(A.spec, A.n, A.basis + B.basis)


def subspace_member(A: Subspace, v: Sequence[int]) -> bool:
    if len(v) != A.n:
        raise AmbientMismatch(f"vector of length {len(v)} is not in GF(q)^{A.n}")
    if not any(v):
        return True
    return _rank_rows(A.spec, list(A.basis) + [tuple(v)]) == A.dim


def kernel(M: GFMatrix) -> Subspace:
    """Right kernel ``{v : M v = 0}``."""
    spec, n = M.spec, M.cols
    R, r, piv = rref(M)
    piv0 = [c - 1 for c in piv]
    free = [j for j in range(n) if j not in set(piv0)]
    neg = spec.neg_table
    vecs = []
    for f in free:
        v = [0] * n
        v[f] = 1
        for i, pc in enumerate(piv0):
            v[pc] = neg[R[i][f]]
        vecs.append(v)
    return Subspace.span(spec, n, vecs)


def subspace_intersection(A: Subspace, B: Subspace) -> Subspace:
    """Via the left kernel of the stacked bases: ``a A = b B``."""
    _check_ambient(A, B)
    if A.dim == 0 or B.dim == 0:
        return Subspace.zero(A.spec, A.n)
    stacked = GFMatrix(A.spec, A.dim + B.dim, A.n, A.basis + B.basis)
    rel = kernel(stacked.transpose())
    vecs = [A.vector(c[: A.dim]) for c in rel.basis]
    return Subspace.span(A.spec, A.n, vecs)


def sum_dim(spaces: Sequence[Subspace]) -> int:
    """``dim(V_1 + ... + V_m)`` without building the canonical basis."""
    if not spaces:
        return 0
    rows = [v for V in spaces for v in V.basis]
    return _rank_rows(spaces[0].spec, rows)
