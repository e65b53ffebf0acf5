"""Exact integer matrix kernels, pure-Python reference implementation.

All functions take matrices as lists of lists of Python ints (arbitrary
precision) and never touch floating point.  ``cslie._ikernels`` is the
compiled twin with the same signatures; ``cslie.kernels`` picks one at
import time.
"""


def imat_mul(a, b):
    """Matrix product of integer matrices."""
    n = len(a)
    k = len(b)
    m = len(b[0]) if k else 0
    out = []
    for i in range(n):
        ai = a[i]
        row = [0] * m
        for t in range(k):
            x = ai[t]
            if x:
                bt = b[t]
                for j in range(m):
                    row[j] += x * bt[j]
        out.append(row)
    return out


def imat_rank(mat):
    """Rank over Q via fraction-free (Bareiss) Gaussian elimination."""
    m = [row[:] for row in mat]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    rank = 0
    prev = 1
    for c in range(cols):
        piv = -1
        for r in range(rank, rows):
            if m[r][c]:
                piv = r
                break
        if piv < 0:
            continue
        if piv != rank:
            m[rank], m[piv] = m[piv], m[rank]
        p = m[rank][c]
        for r in range(rank + 1, rows):
            mrc = m[r][c]
            mr = m[r]
            mp = m[rank]
            for c2 in range(c + 1, cols):
                mr[c2] = (p * mr[c2] - mrc * mp[c2]) // prev
            mr[c] = 0
        prev = p
        rank += 1
        if rank == rows:
            break
    return rank


def imat_det(mat):
    """Determinant of a square integer matrix (Bareiss)."""
    n = len(mat)
    if n == 0:
        return 1
    m = [row[:] for row in mat]
    sign = 1
    prev = 1
    for c in range(n):
        piv = -1
        for r in range(c, n):
            if m[r][c]:
                piv = r
                break
        if piv < 0:
            return 0
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            sign = -sign
        p = m[c][c]
        for r in range(c + 1, n):
            mrc = m[r][c]
            mr = m[r]
            mc = m[c]
            for c2 in range(c + 1, n):
                mr[c2] = (p * mr[c2] - mrc * mc[c2]) // prev
            mr[c] = 0
        prev = p
    return sign * m[n - 1][n - 1]


def imat_charpoly(a):
    """Characteristic polynomial det(xI - A) via Samuelson-Berkowitz.

    Division-free; returns coefficients in descending order with leading 1.
    """
    n = len(a)
    c = [1]
    for k in range(n):
        # Principal k x k block M, row R = a[k][:k], column C = a[:k][k].
        terms = [1, -a[k][k]]
        if k:
            v = [a[i][k] for i in range(k)]
            r = a[k]
            terms.append(-sum(r[i] * v[i] for i in range(k)))
            for _ in range(k - 1):
                v = [sum(a[i][j] * v[j] for j in range(k)) for i in range(k)]
                terms.append(-sum(r[i] * v[i] for i in range(k)))
        nc = len(c)
        out = [0] * (k + 2)
        for i in range(k + 2):
            s = 0
            jlo = 0 if i < len(terms) else i - len(terms) + 1
            for j in range(jlo, min(i, nc - 1) + 1):
                s += terms[i - j] * c[j]
            out[i] = s
        c = out
    return c
