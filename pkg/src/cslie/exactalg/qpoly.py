"""Univariate polynomials over Q with exact arithmetic.

Coefficients are ``fractions.Fraction``, stored lowest degree first.  The
zero polynomial has an empty coefficient tuple and degree -1.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm


class QPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @staticmethod
    def zero() -> "QPoly":
        return QPoly()

    @staticmethod
    def one() -> "QPoly":
        return QPoly([1])

    @staticmethod
    def x() -> "QPoly":
        return QPoly([0, 1])

    @staticmethod
    def constant(c) -> "QPoly":
        return QPoly([c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __eq__(self, other):
        return isinstance(other, QPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: "QPoly") -> "QPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPoly(out)

    def __neg__(self) -> "QPoly":
        return QPoly([-c for c in self.coeffs])

    def __sub__(self, other: "QPoly") -> "QPoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return QPoly([c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return QPoly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "QPoly":
        out = QPoly.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def divmod(self, other: "QPoly"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        q = [Fraction(0)] * max(0, self.degree - other.degree + 1)
        r = list(self.coeffs)
        d = other.degree
        lc = other.coeffs[-1]
        while len(r) - 1 >= d and any(r):
            while r and r[-1] == 0:
                r.pop()
            if len(r) - 1 < d:
                break
            k = len(r) - 1 - d
            f = r[-1] / lc
            q[k] = f
            for i, c in enumerate(other.coeffs):
                r[k + i] -= f * c
            r.pop()
        return QPoly(q), QPoly(r)

    def __floordiv__(self, other: "QPoly") -> "QPoly":
        return self.divmod(other)[0]

    def __mod__(self, other: "QPoly") -> "QPoly":
        return self.divmod(other)[1]

    def monic(self) -> "QPoly":
        if self.is_zero() or self.is_monic():
            return self
        lc = self.coeffs[-1]
        return QPoly([c / lc for c in self.coeffs])

    def derivative(self) -> "QPoly":
        return QPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, x):
        v = Fraction(0)
        for c in reversed(self.coeffs):
            v = v * x + c
        return v

    def gcd(self, other: "QPoly") -> "QPoly":
        """Monic gcd over Q."""
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic() if not a.is_zero() else a

    def squarefree_part(self) -> "QPoly":
        if self.degree <= 0:
            return self.monic()
        return (self // self.gcd(self.derivative())).monic()

    def scale_roots(self, lam) -> "QPoly":
        """Monic polynomial whose roots are lam times the roots of self.

        Only defined for monic input; equals lam^deg * p(x/lam).
        """
        lam = Fraction(lam)
        d = self.degree
        return QPoly([c * lam ** (d - i) for i, c in enumerate(self.coeffs)])

    def primitive_int(self):
        """Return (content, coeffs) with coeffs a primitive int list.

        content is a Fraction with self = content * QPoly(coeffs); the int
        list has positive leading coefficient.
        """
        if self.is_zero():
            return Fraction(0), []
        den = lcm(*[c.denominator for c in self.coeffs])
        ints = [int(c * den) for c in self.coeffs]
        from math import gcd as _gcd

        g = 0
        for c in ints:
            g = _gcd(g, abs(c))
        sign = 1 if ints[-1] > 0 else -1
        ints = [c // (g * sign) for c in ints]
        return Fraction(g * sign, den), ints

    def __repr__(self):
        if self.is_zero():
            return "QPoly(0)"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                parts.append(f"{c}")
            elif i == 1:
                parts.append("x" if c == 1 else ("-x" if c == -1 else f"{c}*x"))
            else:
                parts.append(
                    f"x^{i}" if c == 1 else (f"-x^{i}" if c == -1 else f"{c}*x^{i}")
                )
        return "QPoly(" + " + ".join(parts).replace("+ -", "- ") + ")"


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def sturm_chain(p: QPoly):
    chain = [p, p.derivative()]
    while chain[-1].degree > 0:
        chain.append(-(chain[-2] % chain[-1]))
    if chain[-1].is_zero():
        chain.pop()
    return chain


def _variations(chain, x) -> int:
    # x is a Fraction, or "+inf"/"-inf"
    signs = []
    for q in chain:
        if x == "+inf":
            s = _sign(q.lc)
        elif x == "-inf":
            s = _sign(q.lc) * (-1) ** (q.degree if q.degree > 0 else 0)
        else:
            s = _sign(q(x))
        if s:
            signs.append(s)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_count(p: QPoly, lo=None, hi=None) -> int:
    """Number of distinct real roots of p in (lo, hi].

    ``None`` endpoints mean -infinity / +infinity.  The polynomial is
    replaced by its squarefree part internally, so multiplicities never
    affect the count.
    """
    if p.is_zero():
        raise ValueError("sturm_count of the zero polynomial")
    if lo is not None and hi is not None and Fraction(lo) >= Fraction(hi):
        raise ValueError("degenerate interval: lo >= hi")
    q = p.squarefree_part()
    if q.degree <= 0:
        return 0
    chain = sturm_chain(q)
    va = _variations(chain, "-inf" if lo is None else Fraction(lo))
    vb = _variations(chain, "+inf" if hi is None else Fraction(hi))
    return va - vb
