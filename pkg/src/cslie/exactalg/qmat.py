"""Exact rational matrices and subspaces.

QMat wraps a tuple-of-tuples of Fractions; rank, determinant and
characteristic polynomial clear denominators once and run on the integer
kernels.  Subspace keeps its basis in reduced column echelon form so that
subspace equality is plain matrix equality.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from cslie.kernels import imat_charpoly, imat_det, imat_mul, imat_rank

from .qpoly import QPoly


class QMat:
    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows_data):
        self.data = tuple(tuple(Fraction(c) for c in row) for row in rows_data)
        self.rows = len(self.data)
        self.cols = len(self.data[0]) if self.rows else 0
        if any(len(r) != self.cols for r in self.data):
            raise ValueError("ragged matrix")

    @staticmethod
    def zeros(rows, cols=None) -> "QMat":
        cols = rows if cols is None else cols
        return QMat([[0] * cols for _ in range(rows)])

    @staticmethod
    def identity(n) -> "QMat":
        return QMat([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @staticmethod
    def from_cols(cols, rows=None) -> "QMat":
        if not cols:
            return QMat.zeros(rows or 0, 0)
        return QMat([[col[i] for col in cols] for i in range(len(cols[0]))])

    def col(self, j):
        return tuple(self.data[i][j] for i in range(self.rows))

    def row(self, i):
        return self.data[i]

    def __getitem__(self, ij):
        return self.data[ij[0]][ij[1]]

    def __eq__(self, other):
        return isinstance(other, QMat) and self.data == other.data

    def __hash__(self):
        return hash(self.data)

    def __add__(self, other: "QMat") -> "QMat":
        return QMat(
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.data, other.data)
            ]
        )

    def __sub__(self, other: "QMat") -> "QMat":
        return QMat(
            [
                [a - b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.data, other.data)
            ]
        )

    def __neg__(self) -> "QMat":
        return QMat([[-a for a in row] for row in self.data])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return QMat([[a * other for a in row] for row in self.data])
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        ai, an = self._int_scaled()
        bi, bn = other._int_scaled()
        prod = imat_mul(ai, bi)
        s = Fraction(1, an * bn)
        return QMat([[c * s for c in row] for row in prod])

    __rmul__ = lambda self, other: self.__mul__(other)

    def apply(self, vec):
        """Matrix-vector product on a coordinate tuple."""
        return tuple(
            sum((r[j] * vec[j] for j in range(self.cols)), Fraction(0))
            for r in self.data
        )

    def transpose(self) -> "QMat":
        return QMat([[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)])

    def _int_scaled(self):
        den = 1
        for row in self.data:
            for c in row:
                den = lcm(den, c.denominator)
        return [[int(c * den) for c in row] for row in self.data], den

    def rank(self) -> int:
        if self.rows == 0 or self.cols == 0:
            return 0
        return imat_rank(self._int_scaled()[0])

    def det(self) -> Fraction:
        if self.rows != self.cols:
            raise ValueError("determinant of non-square matrix")
        ai, den = self._int_scaled()
        return Fraction(imat_det(ai), den**self.rows)

    def charpoly(self) -> QPoly:
        """Monic characteristic polynomial det(xI - M)."""
        if self.rows != self.cols:
            raise ValueError("charpoly of non-square matrix")
        ai, den = self._int_scaled()
        desc = imat_charpoly(ai)  # charpoly of den*M, descending
        n = self.rows
        # det(xI - M) = den^-n * det((den x)I - den M)
        asc = list(reversed(desc))
        return QPoly([Fraction(asc[k] * den**k, den**n) for k in range(n + 1)])

    def trace(self) -> Fraction:
        return sum((self.data[i][i] for i in range(self.rows)), Fraction(0))

    def is_zero(self) -> bool:
        return all(c == 0 for row in self.data for c in row)

    def rref(self):
        """Reduced row echelon form; returns (matrix rows, pivot columns)."""
        m = [list(row) for row in self.data]
        pivots = []
        r = 0
        for c in range(self.cols):
            piv = next((i for i in range(r, self.rows) if m[i][c] != 0), None)
            if piv is None:
                continue
            m[r], m[piv] = m[piv], m[r]
            pv = m[r][c]
            m[r] = [x / pv for x in m[r]]
            for i in range(self.rows):
                if i != r and m[i][c] != 0:
                    f = m[i][c]
                    m[i] = [a - f * b for a, b in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
            if r == self.rows:
                break
        return m, pivots

    def kernel_basis(self):
        """Basis of the right kernel, as a list of coordinate tuples."""
        m, pivots = self.rref()
        free = [c for c in range(self.cols) if c not in pivots]
        basis = []
        for fc in free:
            v = [Fraction(0)] * self.cols
            v[fc] = Fraction(1)
            for r, pc in enumerate(pivots):
                v[pc] = -m[r][fc]
            basis.append(tuple(v))
        return basis

    def column_space(self) -> "Subspace":
        return Subspace(self.rows, [self.col(j) for j in range(self.cols)])

    def inverse(self) -> "QMat":
        if self.rows != self.cols:
            raise ValueError("inverse of non-square matrix")
        n = self.rows
        aug = QMat([list(self.data[i]) + [1 if j == i else 0 for j in range(n)] for i in range(n)])
        m, pivots = aug.rref()
        if pivots != list(range(n)):
            raise ValueError("matrix is singular")
        return QMat([row[n:] for row in m])

    def solve(self, rhs):
        """One solution x of self @ x = rhs, or None if inconsistent."""
        n = self.cols
        aug = QMat([list(self.data[i]) + [rhs[i]] for i in range(self.rows)])
        m, pivots = aug.rref()
        if n in pivots:
            return None
        x = [Fraction(0)] * n
        for r, pc in enumerate(pivots):
            x[pc] = m[r][n]
        return tuple(x)

    def __repr__(self):
        return "QMat(" + ", ".join(str(list(r)) for r in self.data) + ")"


def vec_add(a, b):
    return tuple(x + y for x, y in zip(a, b))

def vec_sub(a, b):
    return tuple(x - y for x, y in zip(a, b))

def vec_scale(a, s):
    s = Fraction(s)
    return tuple(x * s for x in a)

def vec_zero(n):
    return tuple(Fraction(0) for _ in range(n))

def unit_vec(n, i):
    return tuple(Fraction(1 if j == i else 0) for j in range(n))

def vec_is_zero(a):
    return all(x == 0 for x in a)


class Subspace:
    """Subspace of Q^n with basis in reduced column echelon form."""

    __slots__ = ("ambient_dim", "basis")

    def __init__(self, ambient_dim, vectors=()):
        self.ambient_dim = ambient_dim
        vecs = [tuple(Fraction(c) for c in v) for v in vectors if not vec_is_zero(v)]
        if not vecs:
            self.basis = QMat.zeros(ambient_dim, 0)
            return
        m, pivots = QMat(vecs).rref()
        self.basis = QMat.from_cols([tuple(m[i]) for i in range(len(pivots))])

    @property
    def dim(self) -> int:
        return self.basis.cols

    def basis_vectors(self):
        return [self.basis.col(j) for j in range(self.dim)]

    def contains(self, vec) -> bool:
        if vec_is_zero(vec):
            return True
        if self.dim == 0:
            return False
        stacked = QMat.from_cols(self.basis_vectors() + [tuple(vec)])
        return stacked.rank() == self.dim

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(v) for v in other.basis_vectors())

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.ambient_dim == other.ambient_dim
            and self.basis == other.basis
        )

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def sum(self, other: "Subspace") -> "Subspace":
        return Subspace(self.ambient_dim, self.basis_vectors() + other.basis_vectors())

    def intersect(self, other: "Subspace") -> "Subspace":
        if self.dim == 0 or other.dim == 0:
            return Subspace(self.ambient_dim)
        stacked = QMat.from_cols(self.basis_vectors() + other.basis_vectors())
        out = []
        for k in stacked.kernel_basis():
            v = vec_zero(self.ambient_dim)
            for j, b in enumerate(self.basis_vectors()):
                v = vec_add(v, vec_scale(b, k[j]))
            out.append(v)
        return Subspace(self.ambient_dim, out)

    def image_under(self, m: QMat) -> "Subspace":
        return Subspace(m.rows, [m.apply(v) for v in self.basis_vectors()])

    def coordinates_of(self, vec):
        """Coefficients of vec in the echelon basis, or None."""
        if self.dim == 0:
            return () if vec_is_zero(vec) else None
        return self.basis.solve(vec)

    @staticmethod
    def full(n) -> "Subspace":
        return Subspace(n, [unit_vec(n, i) for i in range(n)])

    def complement_in(self, other: "Subspace") -> "Subspace":
        """A complement of self inside other (self must be a subspace of it).

        Deterministic: extends the echelon basis of self by the earliest
        basis vectors of other that grow the span.
        """
        cur = self.basis_vectors()
        out = []
        rank = self.dim
        for v in other.basis_vectors():
            test = QMat.from_cols(cur + [v])
            if test.rank() > rank:
                cur.append(v)
                out.append(v)
                rank += 1
        return Subspace(self.ambient_dim, out)

    def __repr__(self):
        return f"Subspace(dim={self.dim} of {self.ambient_dim})"
