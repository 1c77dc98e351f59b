# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernels.

Same contracts as ``_pykernels``; field arithmetic goes through flattened
``q*q`` lookup tables (``add[a*q+b]``, ``mul[a*q+b]``).  Support bitmasks are
64-bit, so callers must route ``n > 62`` to the Python kernels.
"""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport int32_t, int64_t, uint64_t

cnp.import_array()


cdef inline int _popcount(uint64_t x) nogil:
    cdef int c = 0
    while x:
        x &= x - 1
        c += 1
    return c


def rref(int q, const int32_t[::1] add, const int32_t[::1] mul,
         const int32_t[::1] neg, const int32_t[::1] inv, M):
    cdef cnp.ndarray[int32_t, ndim=2] A = np.array(M, dtype=np.int32, ndmin=2, copy=True)
    cdef int nrows = A.shape[0]
    cdef int ncols = A.shape[1] if nrows else 0
    cdef int top = 0, c, i, j, piv, s, f, t
    pivots = []
    for c in range(ncols):
        if top == nrows:
            break
        piv = -1
        for i in range(top, nrows):
            if A[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != top:
            for j in range(ncols):
                t = A[top, j]
                A[top, j] = A[piv, j]
                A[piv, j] = t
        if A[top, c] != 1:
            s = inv[A[top, c]]
            for j in range(c, ncols):
                A[top, j] = mul[s * q + A[top, j]]
        for i in range(nrows):
            if i != top and A[i, c] != 0:
                f = neg[A[i, c]]
                for j in range(c, ncols):
                    if A[top, j] != 0:
                        A[i, j] = add[A[i, j] * q + mul[f * q + A[top, j]]]
        pivots.append(c)
        top += 1
    return A, pivots


cdef class _Echelon:
    """Insertion-ordered echelon basis with unit pivots in GF(q)^dim."""
    cdef int q, dim, rank
    cdef int32_t[:, ::1] rows
    cdef int32_t[::1] piv
    cdef const int32_t[::1] add, mul, neg, inv

    def __cinit__(self, int q, int dim, int cap, add, mul, neg, inv):
        self.q = q
        self.dim = dim
        self.rank = 0
        self.rows = np.zeros((max(cap, 1), max(dim, 1)), dtype=np.int32)
        self.piv = np.zeros(max(cap, 1), dtype=np.int32)
        self.add = add
        self.mul = mul
        self.neg = neg
        self.inv = inv

    cdef int push(self, int32_t* v) nogil:
        """Reduce ``v`` in place; append it when independent.  Returns 1 if appended."""
        cdef int b, j, c, f, p = -1, s
        cdef int q = self.q
        for b in range(self.rank):
            c = v[self.piv[b]]
            if c != 0:
                f = self.neg[c]
                for j in range(self.dim):
                    if self.rows[b, j] != 0:
                        v[j] = self.add[v[j] * q + self.mul[f * q + self.rows[b, j]]]
        for j in range(self.dim):
            if v[j] != 0:
                p = j
                break
        if p < 0:
            return 0
        s = self.inv[v[p]]
        for j in range(self.dim):
            self.rows[self.rank, j] = self.mul[s * q + v[j]]
        self.piv[self.rank] = p
        self.rank += 1
        return 1

    cdef inline void pop(self) nogil:
        self.rank -= 1


def codeword_min_weight(int q, const int32_t[::1] add, const int32_t[::1] mul,
                        G, bint collect=False):
    cdef cnp.ndarray[int32_t, ndim=2] Ga = np.ascontiguousarray(G, dtype=np.int32)
    cdef int k = Ga.shape[0], n = Ga.shape[1]
    cdef int32_t[:, ::1] g = Ga
    cdef cnp.ndarray[int32_t, ndim=1] msg = np.zeros(k, dtype=np.int32)
    cdef cnp.ndarray[int32_t, ndim=1] cw = np.zeros(n, dtype=np.int32)
    cdef int lead, i, j, w, best = n + 1, carry
    words = []
    for lead in range(k):
        msg[:] = 0
        msg[lead] = 1
        while True:
            for j in range(n):
                cw[j] = 0
            for i in range(lead, k):
                if msg[i] != 0:
                    for j in range(n):
                        cw[j] = add[cw[j] * q + mul[msg[i] * q + g[i, j]]]
            w = 0
            for j in range(n):
                if cw[j] != 0:
                    w += 1
            if w > 0:
                if w < best:
                    best = w
                    words = [cw.tolist()] if collect else []
                elif w == best and collect:
                    words.append(cw.tolist())
            # odometer over positions lead+1..k-1, last fastest
            i = k - 1
            carry = 1
            while i > lead and carry:
                msg[i] += 1
                if msg[i] == q:
                    msg[i] = 0
                    i -= 1
                else:
                    carry = 0
            if carry:
                break
    return best, words


cdef class _ZeroSetSearch:
    """DFS over coordinates; one shared echelon basis used as a stack (rows
    past ``rank`` are scratch), so no allocation happens per node."""
    cdef int q, k, n
    cdef int64_t visited, limit
    cdef bint aborted
    cdef int32_t[:, ::1] cols
    cdef int32_t[:, ::1] scratch
    cdef int64_t[::1] exact
    cdef _Echelon basis

    def __cinit__(self, int q, add, mul, neg, inv, G):
        Ga = np.ascontiguousarray(np.asarray(G, dtype=np.int32).T)
        self.q = q
        self.n = Ga.shape[0]
        self.k = Ga.shape[1]
        self.cols = Ga
        self.scratch = np.zeros((max(self.n, 1), max(self.k, 1)), dtype=np.int32)
        self.exact = np.full(self.k + 1, -1, dtype=np.int64)
        self.exact[self.k] = self.n
        self.basis = _Echelon(q, self.k, self.k, add, mul, neg, inv)

    cdef void dfs(self, int j, int size):
        cdef int r = self.basis.rank, t
        cdef int64_t lo
        if self.aborted:
            return
        self.visited += 1
        if self.limit >= 0 and self.visited > self.limit:
            self.aborted = True
            return
        if size > self.exact[r]:
            self.exact[r] = size
        if j == self.n:
            return
        lo = self.exact[r]
        for t in range(r + 1, self.k):
            if self.exact[t] < lo:
                lo = self.exact[t]
        if size + (self.n - j) <= lo:
            return
        for t in range(self.k):
            self.scratch[j, t] = self.cols[j, t]
        if not self.basis.push(&self.scratch[j, 0]):
            self.dfs(j + 1, size + 1)
        else:
            if r + 1 < self.k:
                self.dfs(j + 1, size + 1)
            self.basis.pop()
        self.dfs(j + 1, size)


def max_zero_sets(int q, add, mul, neg, inv, G, int64_t limit=-1):
    cdef _ZeroSetSearch s = _ZeroSetSearch(q, add, mul, neg, inv, G)
    s.limit = limit
    s.visited = 0
    s.aborted = False
    s.dfs(0, 0)
    if s.aborted:
        return None
    return [int(x) for x in s.exact]


def combo_support_masks(int q, const int32_t[::1] add, const int32_t[::1] mul,
                        G, int base, free):
    cdef cnp.ndarray[int32_t, ndim=2] Ga = np.ascontiguousarray(G, dtype=np.int32)
    cdef int32_t[:, ::1] g = Ga
    cdef int n = Ga.shape[1]
    cdef int f = len(free), i, j, carry, c
    cdef cnp.ndarray[int32_t, ndim=1] fr = np.array(free, dtype=np.int32).reshape(-1)
    cdef cnp.ndarray[int32_t, ndim=1] coefs = np.zeros(max(f, 1), dtype=np.int32)
    cdef int64_t total = 1
    for i in range(f):
        total *= q
    cdef cnp.ndarray[uint64_t, ndim=1] out = np.zeros(total, dtype=np.uint64)
    cdef uint64_t m
    cdef int64_t t
    cdef int val
    for t in range(total):
        m = 0
        for j in range(n):
            val = g[base, j]
            for i in range(f):
                c = coefs[i]
                if c != 0:
                    val = add[val * q + mul[c * q + g[fr[i], j]]]
            if val != 0:
                m |= (<uint64_t>1) << j
        out[t] = m
        i = f - 1
        carry = 1
        while i >= 0 and carry:
            coefs[i] += 1
            if coefs[i] == q:
                coefs[i] = 0
                i -= 1
            else:
                carry = 0
    return [int(x) for x in out]


cdef class _UnionSearch:
    cdef list choices
    cdef int best

    cdef void dfs(self, int i, uint64_t acc):
        cdef int w = _popcount(acc)
        cdef uint64_t[::1] opts
        cdef Py_ssize_t t
        if self.best >= 0 and w >= self.best:
            return
        if i == len(self.choices):
            self.best = w
            return
        opts = self.choices[i]
        for t in range(opts.shape[0]):
            self.dfs(i + 1, acc | opts[t])


def min_union_support(choices):
    cdef _UnionSearch s = _UnionSearch()
    s.choices = [np.array(c, dtype=np.uint64) for c in choices]
    s.best = -1
    s.dfs(0, 0)
    return s.best


cdef class _TransversalSearch:
    cdef int dim, m
    cdef list cands
    cdef list choice
    cdef int32_t[::1] scratch
    cdef _Echelon basis

    cdef bint dfs(self, int i):
        cdef int32_t[:, ::1] opts
        cdef Py_ssize_t idx
        cdef int t
        if i == self.m:
            return True
        opts = self.cands[i]
        for idx in range(opts.shape[0]):
            for t in range(self.dim):
                self.scratch[i * self.dim + t] = opts[idx, t]
            if not self.basis.push(&self.scratch[i * self.dim]):
                continue
            self.choice[i] = idx
            if self.dfs(i + 1):
                return True
            self.basis.pop()
        return False


def independent_transversal(int q, add, mul, neg, inv, int dim, candidates):
    cdef _TransversalSearch s = _TransversalSearch()
    s.dim, s.m = dim, len(candidates)
    s.cands = [np.ascontiguousarray(np.array(c, dtype=np.int32).reshape(-1, dim)) for c in candidates]
    s.choice = [0] * s.m
    s.scratch = np.zeros(max(s.m * dim, 1), dtype=np.int32)
    s.basis = _Echelon(q, dim, dim, add, mul, neg, inv)
    return list(s.choice) if s.dfs(0) else None
