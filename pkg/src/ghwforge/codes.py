"""Linear codes: minimum distance, generalized Hamming weights, vanishing subcodes.

The r-th generalized Hamming weight is computed two ways that share no code:

* ``subcode``: walk every r-dimensional subspace of the message space, one RREF
  matrix per subspace grouped by pivot profile, and minimise the support size
  of the subcode it generates;
* ``zeroset``: find the largest coordinate set ``Z`` with
  ``k - rank(G_Z) >= r`` (the subcode vanishing on ``Z`` has that dimension),
  giving ``d_r = n - |Z|``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from . import kernels
from .budget import get_budget, require
from .errors import BadIndex, BadRank, ShapeMismatch, TooLarge
from .field import FieldSpec, field_from_json
from .linalg import GFMatrix, Subspace, kernel, rank
from .sets import MAX_SCAN_K, Report, SubsetSystem, check_ghw_constraints

METHODS = ("subcode", "zeroset", "auto")


def gaussian_binomial(k: int, r: int, q: int) -> int:
    """Number of r-dimensional subspaces of GF(q)^k."""
    if r < 0 or r > k:
        return 0
    num = den = 1
    for i in range(r):
        num *= q ** (k - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


@dataclass(frozen=True)
class WeightHierarchy:
    d: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.d or self.d[0] < 1:
            raise ValueError(f"weights must be positive: {self.d}")
        if any(a >= b for a, b in zip(self.d, self.d[1:])):
            raise ValueError(f"weight hierarchy must be strictly increasing: {self.d}")

    def __getitem__(self, r: int) -> int:
        """``d_r`` for 1-based ``r``."""
        if not 1 <= r <= len(self.d):
            raise BadRank(f"r={r} outside [1, {len(self.d)}]")
        return self.d[r - 1]

    def __len__(self) -> int:
        return len(self.d)

    def __iter__(self):
        return iter(self.d)

    def singleton_violations(self, n: int) -> list[int]:
        """Indices ``r`` with ``d_r > n - k + r``."""
        k = len(self.d)
        return [r for r, dr in enumerate(self.d, 1) if dr > n - k + r]

    @classmethod
    def mds(cls, n: int, k: int) -> WeightHierarchy:
        return cls(tuple(n - k + r for r in range(1, k + 1)))

    def __str__(self) -> str:
        return " ".join(map(str, self.d))


@dataclass(frozen=True)
class LinearCode:
    """An ``[n, k]_q`` code given by a full-rank ``k x n`` generator matrix."""

    G: GFMatrix
    name: str = field(default="", compare=False)
    _cache: dict = field(default_factory=dict, init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        k, n = self.G.rows, self.G.cols
        if k < 1:
            raise BadRank("a code needs dimension k >= 1")
        if k > n:
            raise BadRank(f"dimension {k} exceeds length {n}")
        r = rank(self.G)
        if r != k:
            raise BadRank(f"generator matrix has rank {r}, expected {k}")

    @classmethod
    def from_rows(cls, spec: FieldSpec, rows: Iterable[Sequence[int]], name: str = "") -> LinearCode:
        return cls(GFMatrix.from_rows(spec, rows), name)

    @property
    def spec(self) -> FieldSpec:
        return self.G.spec

    @property
    def n(self) -> int:
        return self.G.cols

    @property
    def k(self) -> int:
        return self.G.rows

    def encode(self, msg: Sequence[int]) -> tuple[int, ...]:
        return self.G.vecmul(msg)

    def contains(self, word: Sequence[int]) -> bool:
        if len(word) != self.n:
            return False
        return rank(self.G.stack(GFMatrix.from_rows(self.spec, [word]))) == self.k

    def to_json(self) -> dict:
        return {"field": self.spec.to_json(), "n": self.n, "k": self.k, "generator": self.G.tolist()}

    @classmethod
    def from_json(cls, obj: dict) -> LinearCode:
        spec = field_from_json(obj["field"])
        G = GFMatrix.from_rows(spec, obj["generator"])
        if ("n" in obj and obj["n"] != G.cols) or ("k" in obj and obj["k"] != G.rows):
            raise ShapeMismatch("declared n/k do not match the generator matrix")
        return cls(G, obj.get("name", ""))

    def __str__(self) -> str:
        label = f"{self.name} " if self.name else ""
        return f"{label}[{self.n},{self.k}]_{self.spec.q}"


def weight(v: Sequence[int]) -> int:
    return sum(1 for x in v if x)


def support(v: Sequence[int]) -> set[int]:
    """1-based support of a vector."""
    return {j + 1 for j, x in enumerate(v) if x}


# -- minimum distance ---------------------------------------------------------

def _projective_count(C: LinearCode) -> int:
    q = C.spec.q
    return (q**C.k - 1) // (q - 1)


def min_distance(C: LinearCode) -> int:
    """``d_1``: codeword enumeration when affordable, else the zero-set search."""
    if "d1" in C._cache:
        return C._cache["d1"]
    if _projective_count(C) <= get_budget():
        d1, _ = kernels.codeword_min_weight(C.spec, C.G.entries)
    else:
        d1 = ghw(C, 1, "zeroset")
    C._cache["d1"] = d1
    return d1


def min_weight_codewords(C: LinearCode) -> tuple[int, list[tuple[int, ...]]]:
    """Minimum weight and one representative per projective class of
    minimum-weight codewords."""
    require(_projective_count(C), "codeword enumeration")
    d1, words = kernels.codeword_min_weight(C.spec, C.G.entries, True)
    return d1, [tuple(w) for w in words]


def min_weight_span(C: LinearCode) -> bool:
    """True iff the minimum-weight codewords span the code."""
    _, words = min_weight_codewords(C)
    return rank(GFMatrix.from_rows(C.spec, words, C.n)) == C.k


# -- generalized Hamming weights ------------------------------------------------

def _ghw_subcode(C: LinearCode, r: int) -> int:
    q, k = C.spec.q, C.k
    require(gaussian_binomial(k, r, q), f"subcode enumeration (k={k}, r={r}, q={q})")
    G = C.G.entries
    best = C.n + 1
    for pivots in itertools.combinations(range(k), r):
        pset = set(pivots)
        choices = []
        for p in pivots:
            free = [j for j in range(p + 1, k) if j not in pset]
            choices.append(kernels.combo_support_masks(C.spec, G, p, free))
        best = min(best, kernels.min_union_support(choices, C.n))
    return best


def _zero_set_profile(C: LinearCode) -> list[int]:
    """``out[t]`` = max ``|Z|`` with ``rank(G_Z) <= t``, ``t = 0..k``."""
    if "zeroset" not in C._cache:
        exact = kernels.max_zero_sets(C.spec, C.G.entries, get_budget())
        if exact is None:
            raise TooLarge(f"zero-set search on n={C.n} exceeded budget {get_budget()}")
        out, run = [], -1
        for x in exact:
            run = max(run, x)
            out.append(run)
        C._cache["zeroset"] = out
    return C._cache["zeroset"]


def _ghw_zeroset(C: LinearCode, r: int) -> int:
    return C.n - _zero_set_profile(C)[C.k - r]


def choose_method(C: LinearCode, r: int) -> str:
    return "zeroset" if 2**C.n < gaussian_binomial(C.k, r, C.spec.q) else "subcode"


def ghw(C: LinearCode, r: int, method: str = "auto") -> int:
    """The r-th generalized Hamming weight ``d_r``."""
    if not 1 <= r <= C.k:
        raise BadRank(f"r={r} outside [1, {C.k}]")
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")
    if method == "auto":
        method = choose_method(C, r)
    if method == "subcode":
        return _ghw_subcode(C, r)
    return _ghw_zeroset(C, r)


def weight_hierarchy(C: LinearCode, method: str = "auto") -> WeightHierarchy:
    key = ("hierarchy", method)
    if key not in C._cache:
        d = WeightHierarchy(tuple(ghw(C, r, method) for r in range(1, C.k + 1)))
        bad = d.singleton_violations(C.n)
        if bad:
            raise AssertionError(f"generalized Singleton bound violated at r={bad}: {d}")
        C._cache[key] = d
    return C._cache[key]


def is_r_mds(C: LinearCode, r: int, d: WeightHierarchy | None = None) -> bool:
    d = weight_hierarchy(C) if d is None else d
    if not 1 <= r <= C.k:
        raise BadRank(f"r={r} outside [1, {C.k}]")
    flags = [d[s] == C.n - C.k + s for s in range(1, C.k + 1)]
    if flags[r - 1]:
        assert all(flags[r - 1:]), f"r-MDS not inherited upwards: {d}"
    return flags[r - 1]


# -- zero sets and vanishing subcodes ---------------------------------------------

def _check_coords(Z: Iterable[int], n: int) -> list[int]:
    Z = sorted(set(int(z) for z in Z))
    bad = [z for z in Z if not 1 <= z <= n]
    if bad:
        raise BadIndex(f"coordinates {bad} outside [1, {n}]")
    return Z


def vanishing_subcode(C: LinearCode, Z: Iterable[int]) -> Subspace:
    """Messages ``v`` whose codeword ``v G`` is zero on every coordinate of ``Z``.

    The result lives in GF(q)^k and has dimension ``k - rank(G_Z)``.
    """
    Z = _check_coords(Z, C.n)
    if not Z:
        return Subspace.full(C.spec, C.k)
    GZ = C.G.columns([z - 1 for z in Z])
    return kernel(GZ.transpose())


def subcode_words(C: LinearCode, V: Subspace) -> list[tuple[int, ...]]:
    """Codewords generated by the basis of a message-space subspace."""
    return [C.encode(v) for v in V.basis]


def row_zero_sets(G: GFMatrix) -> SubsetSystem:
    """``S_i`` = 1-based zero positions of row ``i``."""
    return SubsetSystem.of(G.cols, [[j + 1 for j, x in enumerate(row) if x == 0] for row in G])


def check_row_zero_sets(C: LinearCode, G: GFMatrix | None = None) -> Report:
    """Check ``|cap_{i in I} S_i| <= n - d_{|I|}`` for the row zero sets of a
    generator matrix of ``C`` (``C.G`` by default).  Any violation is a bug."""
    G = C.G if G is None else G
    if G.rows > MAX_SCAN_K:
        raise TooLarge(f"k={G.rows} exceeds the k <= {MAX_SCAN_K} cap")
    report = check_ghw_constraints(row_zero_sets(G), weight_hierarchy(C), C.n)
    report.check = "row-zero-sets"
    return report
