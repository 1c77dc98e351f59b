"""Pure-Python enumeration kernels.

These are the reference implementations; ``_ckernels`` mirrors every function
here with identical results.  Matrices are lists of rows of integer codes.
"""

from __future__ import annotations

from .field import FieldSpec


def rref(spec: FieldSpec, rows: list[list[int]]) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form and pivot columns (0-based).

    Pivot search is leftmost column, topmost available row; pivots are scaled
    to 1.  Zero rows end up at the bottom.
    """
    add, mul, inv, neg = spec.add, spec.mul, spec.inv, spec.neg_table
    R = [list(r) for r in rows]
    nrows = len(R)
    ncols = len(R[0]) if nrows else 0
    pivots: list[int] = []
    top = 0
    for c in range(ncols):
        if top == nrows:
            break
        piv = next((i for i in range(top, nrows) if R[i][c]), None)
        if piv is None:
            continue
        R[top], R[piv] = R[piv], R[top]
        prow = R[top]
        if prow[c] != 1:
            s = inv(prow[c])
            prow[:] = [mul(s, x) for x in prow]
        for i in range(nrows):
            if i != top and R[i][c]:
                f = neg[R[i][c]]
                row = R[i]
                for j in range(c, ncols):
                    if prow[j]:
                        row[j] = add(row[j], mul(f, prow[j]))
        pivots.append(c)
        top += 1
    return R, pivots


def _reduce(spec: FieldSpec, basis: list[tuple[int, list[int]]], v: list[int]) -> list[int]:
    """Reduce ``v`` against an echelon basis of (pivot, row) with unit pivots."""
    add, mul, neg = spec.add, spec.mul, spec.neg_table
    v = list(v)
    for p, b in basis:
        c = v[p]
        if c:
            f = neg[c]
            for j, x in enumerate(b):
                if x:
                    v[j] = add(v[j], mul(f, x))
    return v


def _normalized(spec: FieldSpec, v: list[int]) -> tuple[int, list[int]] | None:
    for p, x in enumerate(v):
        if x:
            s = spec.inv(x)
            return p, [spec.mul(s, y) for y in v]
    return None


def projective_messages(q: int, k: int):
    """All nonzero vectors of GF(q)^k whose first nonzero entry is 1, in lex order."""
    for lead in range(k):
        tail = k - lead - 1
        for idx in range(q**tail):
            v = [0] * k
            v[lead] = 1
            for j in range(k - 1, lead, -1):
                idx, v[j] = divmod(idx, q)
            yield v


def codeword_min_weight(
    spec: FieldSpec, G: list[list[int]], collect: bool = False
) -> tuple[int, list[list[int]]]:
    """Minimum nonzero codeword weight, optionally with one representative
    (leading coefficient 1) of every minimum-weight codeword."""
    add, mul = spec.add, spec.mul
    k, n = len(G), len(G[0])
    best = n + 1
    words: list[list[int]] = []
    for msg in projective_messages(spec.q, k):
        cw = [0] * n
        for coef, row in zip(msg, G):
            if coef:
                cw = [add(a, mul(coef, b)) for a, b in zip(cw, row)]
        w = n - cw.count(0)
        if w == 0:
            continue
        if w < best:
            best = w
            words = [cw] if collect else []
        elif w == best and collect:
            words.append(cw)
    return best, words


def max_zero_sets(spec: FieldSpec, G: list[list[int]], limit: int = -1) -> list[int] | None:
    """``out[t]`` = largest number of columns of ``G`` spanning rank exactly ``t``
    (``-1`` if none), for ``t = 0..k``.

    Depth-first over include/exclude decisions per column with an incremental
    echelon basis of the chosen columns; rank-``k`` branches are cut because
    only ranks below ``k`` matter for the weight hierarchy.  Returns ``None``
    once more than ``limit`` nodes have been visited (``limit < 0``: no cap).
    """
    k, n = len(G), len(G[0])
    cols = [[G[i][j] for i in range(k)] for j in range(n)]
    exact = [-1] * (k + 1)
    exact[k] = n
    visited = 0

    class _Abort(Exception):
        pass

    def dfs(j: int, size: int, basis: list[tuple[int, list[int]]]) -> None:
        nonlocal visited
        visited += 1
        if 0 <= limit < visited:
            raise _Abort
        r = len(basis)
        if size > exact[r]:
            exact[r] = size
        if j == n:
            return
        if size + (n - j) <= min(exact[r:k]):
            return
        v = _reduce(spec, basis, cols[j])
        nv = _normalized(spec, v)
        if nv is None:
            dfs(j + 1, size + 1, basis)
        elif r + 1 < k:
            dfs(j + 1, size + 1, basis + [nv])
        dfs(j + 1, size, basis)

    try:
        dfs(0, 0, [])
    except _Abort:
        return None
    return exact


def combo_support_masks(
    spec: FieldSpec, G: list[list[int]], base: int, free: list[int]
) -> list[int]:
    """Support bitmasks of ``G[base] + sum a_j G[free[j]]`` over all coefficient
    tuples ``a`` (last free index varying fastest)."""
    add, mul = spec.add, spec.mul
    q = spec.q
    n = len(G[0])
    out = []
    f = len(free)
    for idx in range(q**f):
        coefs = []
        for _ in range(f):
            idx, c = divmod(idx, q)
            coefs.append(c)
        coefs.reverse()
        cw = list(G[base])
        for c, j in zip(coefs, free):
            if c:
                cw = [add(a, mul(c, b)) for a, b in zip(cw, G[j])]
        m = 0
        for pos in range(n):
            if cw[pos]:
                m |= 1 << pos
        out.append(m)
    return out


def min_union_support(choices: list[list[int]]) -> int:
    """Minimum popcount of ``m_1 | ... | m_r`` with ``m_i`` drawn from ``choices[i]``."""
    best = None

    def dfs(i: int, acc: int) -> None:
        nonlocal best
        w = acc.bit_count() if hasattr(acc, "bit_count") else bin(acc).count("1")
        if best is not None and w >= best:
            return
        if i == len(choices):
            best = w
            return
        for m in choices[i]:
            dfs(i + 1, acc | m)

    dfs(0, 0)
    return best


def independent_transversal(
    spec: FieldSpec, candidates: list[list[list[int]]]
) -> list[int] | None:
    """First (lexicographic in candidate indices) choice of one vector per list
    with all chosen vectors linearly independent, or ``None``."""
    m = len(candidates)
    choice = [0] * m

    def dfs(i: int, basis: list[tuple[int, list[int]]]) -> bool:
        if i == m:
            return True
        for idx, v in enumerate(candidates[i]):
            nv = _normalized(spec, _reduce(spec, basis, v))
            if nv is None:
                continue
            choice[i] = idx
            if dfs(i + 1, basis + [nv]):
                return True
        return False

    return list(choice) if dfs(0, []) else None
