# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of ``cslie._ikernels_py``.

Entries are Python ints (arbitrary precision is required: Bareiss pivots
and Berkowitz terms overflow any fixed width), so the win over the pure
version comes from compiled loop and indexing overhead, not machine
arithmetic.
"""


def imat_mul(list a, list b):
    cdef Py_ssize_t n = len(a)
    cdef Py_ssize_t k = len(b)
    cdef Py_ssize_t m = len(<list>b[0]) if k else 0
    cdef Py_ssize_t i, j, t
    cdef list out = [], ai, bt, row
    cdef object x
    for i in range(n):
        ai = <list>a[i]
        row = [0] * m
        for t in range(k):
            x = ai[t]
            if x:
                bt = <list>b[t]
                for j in range(m):
                    row[j] = row[j] + x * bt[j]
        out.append(row)
    return out


def imat_rank(list mat):
    cdef Py_ssize_t rows = len(mat)
    cdef Py_ssize_t cols = len(<list>mat[0]) if rows else 0
    cdef list m = [list(row) for row in mat]
    cdef Py_ssize_t rank = 0, c, r, c2, piv
    cdef object prev = 1, p, mrc
    cdef list mr, mp
    for c in range(cols):
        piv = -1
        for r in range(rank, rows):
            if (<list>m[r])[c]:
                piv = r
                break
        if piv < 0:
            continue
        if piv != rank:
            m[rank], m[piv] = m[piv], m[rank]
        p = (<list>m[rank])[c]
        mp = <list>m[rank]
        for r in range(rank + 1, rows):
            mr = <list>m[r]
            mrc = mr[c]
            for c2 in range(c + 1, cols):
                mr[c2] = (p * mr[c2] - mrc * mp[c2]) // prev
            mr[c] = 0
        prev = p
        rank += 1
        if rank == rows:
            break
    return rank


def imat_det(list mat):
    cdef Py_ssize_t n = len(mat)
    if n == 0:
        return 1
    cdef list m = [list(row) for row in mat]
    cdef Py_ssize_t c, r, c2, piv
    cdef int sign = 1
    cdef object prev = 1, p, mrc
    cdef list mr, mc
    for c in range(n):
        piv = -1
        for r in range(c, n):
            if (<list>m[r])[c]:
                piv = r
                break
        if piv < 0:
            return 0
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            sign = -sign
        p = (<list>m[c])[c]
        mc = <list>m[c]
        for r in range(c + 1, n):
            mr = <list>m[r]
            mrc = mr[c]
            for c2 in range(c + 1, n):
                mr[c2] = (p * mr[c2] - mrc * mc[c2]) // prev
            mr[c] = 0
        prev = p
    return sign * (<list>m[n - 1])[n - 1]


def imat_charpoly(list a):
    cdef Py_ssize_t n = len(a)
    cdef list c = [1], terms, v, out, r_
    cdef Py_ssize_t k, i, j, jlo, nc, nt
    cdef object s
    for k in range(n):
        terms = [1, -(<list>a[k])[k]]
        if k:
            v = [(<list>a[i])[k] for i in range(k)]
            r_ = <list>a[k]
            s = 0
            for i in range(k):
                s = s + r_[i] * v[i]
            terms.append(-s)
            for j in range(k - 1):
                v = [_dot_row(a, i, v, k) for i in range(k)]
                s = 0
                for i in range(k):
                    s = s + r_[i] * v[i]
                terms.append(-s)
        nc = len(c)
        nt = len(terms)
        out = [0] * (k + 2)
        for i in range(k + 2):
            s = 0
            jlo = 0 if i < nt else i - nt + 1
            for j in range(jlo, min(i, nc - 1) + 1):
                s = s + terms[i - j] * c[j]
            out[i] = s
        c = out
    return c


cdef object _dot_row(list a, Py_ssize_t i, list v, Py_ssize_t k):
    cdef list ai = <list>a[i]
    cdef object s = 0
    cdef Py_ssize_t j
    for j in range(k):
        s = s + ai[j] * v[j]
    return s
