"""Subset systems ``S_1..S_k`` of ``[n]`` and the constraints checked on them.

Everything here is 1-based: coordinates run over ``1..n`` and index sets over
``1..k``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import BadIndex, EmptyIndexSet, ShapeMismatch, TooLarge

MAX_SCAN_K = 20


@dataclass(frozen=True)
class SubsetSystem:
    n: int
    subsets: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        if not self.subsets:
            raise ShapeMismatch("a subset system needs at least one subset")
        for i, s in enumerate(self.subsets, 1):
            bad = [x for x in s if not 1 <= x <= self.n]
            if bad:
                raise BadIndex(f"S_{i} contains {bad}, outside [1, {self.n}]")

    @classmethod
    def of(cls, n: int, sets: Iterable[Iterable[int]]) -> SubsetSystem:
        return cls(n, tuple(frozenset(int(x) for x in s) for s in sets))

    @property
    def k(self) -> int:
        return len(self.subsets)

    def __getitem__(self, i: int) -> frozenset[int]:
        """``S_i`` for 1-based ``i``."""
        if not 1 <= i <= self.k:
            raise BadIndex(f"subset index {i} outside [1, {self.k}]")
        return self.subsets[i - 1]

    def __iter__(self) -> Iterator[frozenset[int]]:
        return iter(self.subsets)

    def __len__(self) -> int:
        return len(self.subsets)

    def sizes(self) -> list[int]:
        return [len(s) for s in self.subsets]

    def permuted(self, order: Sequence[int]) -> SubsetSystem:
        """System whose ``i``-th subset is ``S_{order[i]}`` (1-based)."""
        return SubsetSystem(self.n, tuple(self[i] for i in order))

    def to_json(self) -> dict:
        return {"n": self.n, "sets": [sorted(s) for s in self.subsets]}

    @classmethod
    def from_json(cls, obj: dict) -> SubsetSystem:
        return cls.of(int(obj["n"]), obj["sets"])

    def __str__(self) -> str:
        body = ", ".join("{" + ",".join(map(str, sorted(s))) + "}" for s in self.subsets)
        return f"[{body}] in [{self.n}]"


@dataclass
class Report:
    """Outcome of a constraint scan.  ``violations`` lists every failing index
    set, ordered by size and then lexicographically."""

    check: str
    violations: list[tuple[int, ...]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.passed

    def to_json(self) -> dict:
        return {"check": self.check, "pass": self.passed, "violations": [list(v) for v in self.violations]}


def index_sets(k: int) -> Iterator[tuple[int, ...]]:
    """Nonempty subsets of ``[k]`` by size, then lexicographically."""
    for size in range(1, k + 1):
        yield from itertools.combinations(range(1, k + 1), size)


def intersection_over(S: SubsetSystem, I: Iterable[int]) -> frozenset[int]:
    I = list(I)
    if not I:
        raise EmptyIndexSet("index set must be nonempty")
    out = S[I[0]]
    for i in I[1:]:
        out = out & S[i]
    return out


def _scan(S: SubsetSystem, bound, check: str) -> Report:
    """Violations of ``|cap_{i in I} S_i| <= bound(|I|)`` over all nonempty I.

    Intersections of a set are reused from the set minus its last index.
    """
    k = S.k
    if k > MAX_SCAN_K:
        raise TooLarge(f"{check}: 2^{k} index sets exceeds the k <= {MAX_SCAN_K} cap")
    report = Report(check)
    prev: dict[tuple[int, ...], frozenset[int]] = {(): frozenset(range(1, S.n + 1))}
    for size in range(1, k + 1):
        cur: dict[tuple[int, ...], frozenset[int]] = {}
        limit = bound(size)
        for I in itertools.combinations(range(1, k + 1), size):
            inter = prev[I[:-1]] & S.subsets[I[-1] - 1]
            cur[I] = inter
            if len(inter) > limit:
                report.violations.append(I)
        prev = cur
    return report


def check_mds_condition(S: SubsetSystem, k: int | None = None) -> Report:
    """``|I| + |cap S_i| <= k`` for every nonempty ``I``."""
    k = S.k if k is None else k
    if k != S.k:
        raise ShapeMismatch(f"system has {S.k} subsets, expected k={k}")
    return _scan(S, lambda size: k - size, "mds")


def check_ghw_constraints(S: SubsetSystem, d, n: int | None = None) -> Report:
    """``|cap_{i in I} S_i| <= n - d_{|I|}`` for every nonempty ``I``.

    ``d`` is a :class:`~ghwforge.codes.WeightHierarchy` or a plain sequence
    ``d_1..d_k``.
    """
    d = tuple(getattr(d, "d", d))
    n = S.n if n is None else n
    if len(d) != S.k:
        raise ShapeMismatch(f"hierarchy has {len(d)} weights for {S.k} subsets")
    return _scan(S, lambda size: n - d[size - 1], "ghw")


def check_cardinality(S: SubsetSystem, k: int | None = None) -> Report:
    """``|S_i| <= k - 1`` for every ``i``."""
    k = S.k if k is None else k
    return Report("card", [(i,) for i, s in enumerate(S.subsets, 1) if len(s) > k - 1])


def check_mode(S: SubsetSystem, mode: str, d=None) -> Report:
    """Gate used by the CLI and the falsification search.

    ``mode`` is ``ghw``, ``mds``, ``card`` or ``cardinality+ghw`` (alias
    ``card+ghw``); the combined mode reports cardinality violations first.
    """
    if mode == "mds":
        return check_mds_condition(S)
    if mode in ("card", "cardinality"):
        return check_cardinality(S)
    if d is None:
        raise ValueError(f"mode {mode!r} needs a weight hierarchy")
    if mode == "ghw":
        return check_ghw_constraints(S, d)
    if mode in ("cardinality+ghw", "card+ghw"):
        card = check_cardinality(S)
        ghw = check_ghw_constraints(S, d)
        merged = sorted(set(card.violations) | set(ghw.violations), key=lambda I: (len(I), I))
        return Report("cardinality+ghw", merged)
    raise ValueError(f"unknown constraint mode {mode!r}")
