"""Rational Jordan data without eigenvalue extraction.

A primary profile attaches to each monic irreducible factor p of the
characteristic polynomial the multiset of its block sizes: the number of
blocks of size k equals (r_{k-1} - 2 r_k + r_{k+1}) / deg p with
r_k = rank(p(M)^k).  Over C every root of p carries the same block-size
multiset, so this is the exact, field-of-definition-free encoding of the
real Jordan normal form.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .qmat import QMat
from .qpoly import QPoly, sturm_count
from .zassenhaus import factor_irreducible


@dataclass(frozen=True)
class PrimaryProfile:
    factor: QPoly
    block_sizes: tuple  # sorted descending, with repetition

    def size_counts(self) -> dict:
        out = {}
        for s in self.block_sizes:
            out[s] = out.get(s, 0) + 1
        return out

    @property
    def total(self) -> int:
        return sum(self.block_sizes)


@dataclass(frozen=True)
class RootClassification:
    n_real: int
    n_imag_pairs: int
    n_generic_pairs: int
    is_zero: bool


def poly_of_matrix(p: QPoly, m: QMat) -> QMat:
    """Evaluate p at a square matrix (Horner)."""
    n = m.rows
    out = QMat.zeros(n, n)
    for c in reversed(p.coeffs):
        out = out * m if not out.is_zero() else out
        if c:
            out = out + QMat.identity(n) * c
    return out


def primary_profiles(m: QMat, seed=0):
    """Primary (generalized Jordan) profiles of a square rational matrix."""
    if m.rows != m.cols:
        raise ValueError("primary_profiles of non-square matrix")
    chi = m.charpoly()
    _, factors = factor_irreducible(chi, seed=seed)
    out = []
    n = m.rows
    for p, mult in factors:
        d = p.degree
        pm = poly_of_matrix(p, m)
        ranks = [n]
        power = QMat.identity(n)
        while True:
            power = power * pm
            ranks.append(power.rank())
            if ranks[-1] == ranks[-2]:
                break
        sizes = []
        for k in range(1, len(ranks) - 1):
            r_prev, r_k = ranks[k - 1], ranks[k]
            r_next = ranks[k + 1] if k + 1 < len(ranks) else ranks[-1]
            count, rem = divmod(r_prev - 2 * r_k + r_next, d)
            if rem:
                raise ArithmeticError("rank profile not divisible by factor degree")
            sizes.extend([k] * count)
        total = sum(sizes)
        if total != mult:
            raise ArithmeticError("block sizes disagree with charpoly multiplicity")
        out.append(PrimaryProfile(p, tuple(sorted(sizes, reverse=True))))
    return out


def profiles_charpoly(profiles) -> QPoly:
    """Reconstruct the characteristic polynomial from primary profiles."""
    out = QPoly.one()
    for pr in profiles:
        out = out * pr.factor ** pr.total
    return out


def negation_partner(p: QPoly) -> QPoly:
    """The monic irreducible whose roots are the negatives of p's roots."""
    if not p.is_monic():
        raise ValueError("negation_partner expects a monic polynomial")
    d = p.degree
    return QPoly([c * (-1) ** (d - i) for i, c in enumerate(p.coeffs)])


def imaginary_part_split(p: QPoly):
    """Write p(iy) = A(y) + i B(y) with A, B rational polynomials."""
    a = [Fraction(0)] * (p.degree + 1)
    b = [Fraction(0)] * (p.degree + 1)
    for k, c in enumerate(p.coeffs):
        r = k % 4
        if r == 0:
            a[k] = c
        elif r == 1:
            b[k] = c
        elif r == 2:
            a[k] = -c
        else:
            b[k] = -c
    return QPoly(a), QPoly(b)


def root_classes(p: QPoly) -> RootClassification:
    """Counts of real roots, purely imaginary pairs and generic pairs.

    Exact: real roots by Sturm, imaginary pairs by Sturm on
    gcd(A, B) with p(iy) = A(y) + i B(y), generic pairs by the degree
    identity.  Requires p monic irreducible.
    """
    if p.degree < 1:
        raise ValueError("root_classes of a constant")
    n_real = sturm_count(p)
    a, b = imaginary_part_split(p)
    if a.is_zero():
        g = b
    elif b.is_zero():
        g = a
    else:
        g = a.gcd(b)
    n_imag = sturm_count(g, Fraction(0), None) if g.degree > 0 else 0
    rest = p.degree - n_real - 2 * n_imag
    if rest < 0 or rest % 2:
        raise ArithmeticError("root class counts violate the degree identity")
    return RootClassification(n_real, n_imag, rest // 2, p == QPoly.x())
