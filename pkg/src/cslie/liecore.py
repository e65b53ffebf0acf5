"""Lie algebras over R with rational structure constants.

Structure constants are stored sparsely for i < j only, so antisymmetry is
built into the representation.  All operations are pure; algebras are
immutable after construction.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from cslie.exactalg import (
    QMat,
    Subspace,
    primary_profiles,
    root_classes,
    unit_vec,
    vec_add,
    vec_is_zero,
    vec_scale,
    vec_zero,
)


class JacobiViolation(Exception):
    def __init__(self, i, j, k, residual):
        self.triple = (i, j, k)
        self.residual = residual
        super().__init__(
            f"Jacobi identity fails on (e{i+1}, e{j+1}, e{k+1}): residual {residual}"
        )


class LieAlgebra:
    """Finite-dimensional Lie algebra with rational structure constants.

    c[(i, j)] (i < j, 0-based) is the coordinate tuple of [e_i, e_j].
    """

    __slots__ = ("dim", "c")

    def __init__(self, dim, brackets=None, check_jacobi=True):
        self.dim = dim
        c = {}
        for (i, j), vec in (brackets or {}).items():
            if not (0 <= i < dim and 0 <= j < dim):
                raise ValueError(f"basis index out of range: ({i}, {j})")
            if i == j:
                raise ValueError("bracket [e_i, e_i] must vanish")
            v = tuple(Fraction(x) for x in vec)
            if len(v) != dim:
                raise ValueError("bracket vector has wrong length")
            if i > j:
                i, j, v = j, i, tuple(-x for x in v)
            if vec_is_zero(v):
                continue
            if (i, j) in c:
                raise ValueError(f"duplicate bracket for ({i}, {j})")
            c[(i, j)] = v
        self.c = c
        if check_jacobi:
            bad = self.jacobi_witness()
            if bad is not None:
                raise JacobiViolation(*bad)

    def bracket_basis(self, i, j):
        if i == j:
            return vec_zero(self.dim)
        if i < j:
            return self.c.get((i, j), vec_zero(self.dim))
        v = self.c.get((j, i))
        return vec_zero(self.dim) if v is None else tuple(-x for x in v)

    def bracket(self, x, y):
        out = vec_zero(self.dim)
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if not yj or i == j:
                    continue
                v = self.bracket_basis(i, j)
                if not vec_is_zero(v):
                    out = vec_add(out, vec_scale(v, xi * yj))
        return out

    def jacobi_witness(self):
        """The first violating (i, j, k, residual), or None."""
        n = self.dim
        for i in range(n):
            for j in range(i + 1, n):
                vij = self.bracket_basis(i, j)
                for k in range(j + 1, n):
                    r = self.bracket(vij, unit_vec(n, k))
                    r = vec_add(r, self.bracket(self.bracket_basis(j, k), unit_vec(n, i)))
                    r = vec_add(r, self.bracket(self.bracket_basis(k, i), unit_vec(n, j)))
                    if not vec_is_zero(r):
                        return (i, j, k, r)
        return None

    def ad(self, x) -> QMat:
        """Matrix of ad_x acting on coordinate columns."""
        cols = [self.bracket(x, unit_vec(self.dim, j)) for j in range(self.dim)]
        return QMat.from_cols(cols) if self.dim else QMat.zeros(0, 0)

    def is_abelian(self) -> bool:
        return not self.c

    def change_basis(self, p: QMat) -> "LieAlgebra":
        """Structure constants in the basis f_j = sum_i p[i][j] e_i."""
        pinv = p.inverse()
        n = self.dim
        brackets = {}
        for i in range(n):
            for j in range(i + 1, n):
                v = self.bracket(p.col(i), p.col(j))
                w = pinv.apply(v)
                if not vec_is_zero(w):
                    brackets[(i, j)] = w
        return LieAlgebra(n, brackets, check_jacobi=False)

    def direct_sum(self, other: "LieAlgebra") -> "LieAlgebra":
        n, m = self.dim, other.dim
        brackets = {}
        for (i, j), v in self.c.items():
            brackets[(i, j)] = tuple(v) + vec_zero(m)
        for (i, j), v in other.c.items():
            brackets[(i + n, j + n)] = vec_zero(n) + tuple(v)
        return LieAlgebra(n + m, brackets, check_jacobi=False)

    def __repr__(self):
        return f"LieAlgebra(dim={self.dim}, nbrackets={len(self.c)})"


def make_lie_algebra(dim, bracket_list, check_jacobi=True) -> LieAlgebra:
    """Build from [(i, j, vector)] or [(i, j, k, coeff)] entries, 1-based."""
    brackets = {}
    for entry in bracket_list:
        if len(entry) == 3:
            i, j, vec = entry
            cur = brackets.setdefault((i - 1, j - 1), list(vec_zero(dim)))
            for k, x in enumerate(vec):
                cur[k] += Fraction(x)
        else:
            i, j, k, coeff = entry
            cur = brackets.setdefault((i - 1, j - 1), list(vec_zero(dim)))
            cur[k - 1] += Fraction(coeff)
    return LieAlgebra(dim, {ij: tuple(v) for ij, v in brackets.items()}, check_jacobi)


# --- subspace machinery -------------------------------------------------


def bracket_subspaces(L: LieAlgebra, s: Subspace, t: Subspace) -> Subspace:
    vecs = []
    for a in s.basis_vectors():
        for b in t.basis_vectors():
            v = L.bracket(a, b)
            if not vec_is_zero(v):
                vecs.append(v)
    return Subspace(L.dim, vecs)


def commutator_ideal(L: LieAlgebra) -> Subspace:
    return Subspace(L.dim, list(L.c.values()))


def center(L: LieAlgebra) -> Subspace:
    return centralizer(L, Subspace.full(L.dim))


def centralizer(L: LieAlgebra, s: Subspace) -> Subspace:
    """{x : [x, s] = 0 for all s in S} as an exact kernel."""
    rows = []
    for b in s.basis_vectors():
        # x -> [x, b]: columns are [e_i, b]
        cols = [L.bracket(unit_vec(L.dim, i), b) for i in range(L.dim)]
        for k in range(L.dim):
            rows.append([cols[i][k] for i in range(L.dim)])
    if not rows:
        return Subspace.full(L.dim)
    return Subspace(L.dim, QMat(rows).kernel_basis())


@dataclass
class SeriesReport:
    kind: str  # "lower_central" | "derived"
    terms: list  # strictly decreasing proper terms, starting at [g, g]
    step: int | None  # nilpotency step / derived length, None if not reached

    @property
    def dims(self):
        return tuple(t.dim for t in self.terms)


def lower_central_series(L: LieAlgebra) -> SeriesReport:
    """Terms C^1 = [g, g], C^{r+1} = [g, C^r] until stable.

    step m means C^{m-1} != 0 and C^m = 0 counting C^0 = g, so the abelian
    algebra has step 1 and the Heisenberg algebra step 2; None if the
    series stabilizes above zero (not nilpotent).
    """
    full = Subspace.full(L.dim)
    terms = []
    cur = commutator_ideal(L)
    while True:
        terms.append(cur)
        nxt = bracket_subspaces(L, full, cur)
        if nxt.dim == cur.dim:
            break
        cur = nxt
    if terms[-1].dim == 0:
        step = next(i for i, t in enumerate(terms) if t.dim == 0) + 1
    else:
        step = None
    return SeriesReport("lower_central", terms, step)


def derived_series(L: LieAlgebra) -> SeriesReport:
    terms = []
    cur = commutator_ideal(L)
    while True:
        terms.append(cur)
        nxt = bracket_subspaces(L, cur, cur)
        if nxt.dim == cur.dim:
            break
        cur = nxt
    if terms[-1].dim == 0:
        step = next(i for i, t in enumerate(terms) if t.dim == 0) + 1
    else:
        step = None
    return SeriesReport("derived", terms, step)


def nilpotency_step(L: LieAlgebra) -> int | None:
    return lower_central_series(L).step


def is_nilpotent(L: LieAlgebra) -> bool:
    return lower_central_series(L).step is not None


def is_solvable(L: LieAlgebra) -> bool:
    return derived_series(L).step is not None


def upper_central_series(L: LieAlgebra):
    """Ascending chain Z_1 = z(g) <= Z_2 <= ... until stable."""
    terms = []
    cur = center(L)
    while True:
        terms.append(cur)
        if cur.dim == L.dim:
            break
        # Z_next = {x : [x, g] subset cur}
        basis = cur.basis_vectors()
        proj_rows = _quotient_projection_rows(L.dim, cur)
        rows = []
        for j in range(L.dim):
            cols = [L.bracket(unit_vec(L.dim, i), unit_vec(L.dim, j)) for i in range(L.dim)]
            for prow in proj_rows:
                rows.append(
                    [sum(prow[k] * cols[i][k] for k in range(L.dim)) for i in range(L.dim)]
                )
        nxt = Subspace(L.dim, QMat(rows).kernel_basis()) if rows else Subspace.full(L.dim)
        if nxt.dim == cur.dim:
            break
        cur = nxt
    return terms


def _quotient_projection_rows(n, sub: Subspace):
    """Rows of a map whose kernel is exactly sub."""
    if sub.dim == 0:
        return [list(unit_vec(n, k)) for k in range(n)]
    if sub.dim == n:
        return []
    m = QMat([list(v) for v in sub.basis_vectors()])
    return [list(v) for v in m.kernel_basis()]


def is_unimodular(L: LieAlgebra) -> bool:
    return all(L.ad(unit_vec(L.dim, i)).trace() == 0 for i in range(L.dim))


# --- codimension-one abelian ideals -------------------------------------


@dataclass
class CodimOneAbelianIdeals:
    kind: str  # "none" | "unique" | "multiple" | "undetermined"
    witnesses: list  # list of Subspace (one for unique, >= 2 for multiple)


def _hyperplanes_from_kernel_span(L, g1, quotient_basis, b_comps):
    # span of kernels of all component combinations of the induced 2-form
    w = len(quotient_basis)
    span = Subspace(w)
    import itertools

    combos = [tuple(1 if t == s else 0 for t in range(len(b_comps))) for s in range(len(b_comps))]
    combos += [tuple(1 for _ in b_comps)]
    combos += [tuple((s + 1) ** t % 7 for t in range(len(b_comps))) for s in range(5)]
    for lam in combos:
        rows = []
        for r in range(w):
            rows.append(
                [
                    sum(lam[s] * b_comps[s][r][c2] for s in range(len(b_comps)))
                    for c2 in range(w)
                ]
            )
        m = QMat(rows)
        if m.is_zero():
            continue
        span = span.sum(Subspace(w, m.kernel_basis()))
    return span


def codim1_abelian_ideals(L: LieAlgebra) -> CodimOneAbelianIdeals:
    """Classify the codimension-one abelian ideals of L.

    Every such ideal is a hyperplane u with [g, g] <= u <= centralizer of
    [g, g]; if two distinct ones exist the algebra is Heisenberg plus
    an abelian factor, which pins down the whole answer.
    """
    n = L.dim
    g1 = commutator_ideal(L)
    if g1.dim == 0:
        if n < 2:
            return CodimOneAbelianIdeals("multiple" if n == 1 else "none", [])
        w1 = Subspace(n, [unit_vec(n, i) for i in range(n - 1)])
        w2 = Subspace(n, [unit_vec(n, i) for i in range(1, n)])
        return CodimOneAbelianIdeals("multiple", [w1, w2])
    cent = centralizer(L, g1)
    if cent.dim < n - 1:
        return CodimOneAbelianIdeals("none", [])
    if cent.dim == n - 1:
        ok = (
            g1.contains_subspace(g1)
            and cent.contains_subspace(g1)
            and bracket_subspaces(L, cent, cent).dim == 0
        )
        return (
            CodimOneAbelianIdeals("unique", [cent])
            if ok
            else CodimOneAbelianIdeals("none", [])
        )
    # centralizer is everything: g1 is central
    quotient_basis = _quotient_basis(n, g1)
    w = len(quotient_basis)
    comps = _induced_form_components(L, g1, quotient_basis)
    if g1.dim == 1:
        b = QMat(comps[0])
        rk = b.rank()
        if rk > 2:
            return CodimOneAbelianIdeals("none", [])
        # rank is exactly 2 (g1 = [g,g] is 1-dim so the form is nonzero)
        ker = b.kernel_basis()
        sup = [v for v in QMat(comps[0]).transpose().kernel_basis()]
        # two distinct hyperplanes: kernel + one support direction each
        others = [
            u
            for u in (unit_vec(w, i) for i in range(w))
            if not Subspace(w, ker).contains(u)
        ]
        h1 = _lift_hyperplane(n, g1, quotient_basis, ker + [others[0]])
        h2 = _lift_hyperplane(n, g1, quotient_basis, ker + [others[1]])
        return CodimOneAbelianIdeals("multiple", [h1, h2])
    # dim g1 >= 2 central: at most one abelian hyperplane can exist
    span = _hyperplanes_from_kernel_span(L, g1, quotient_basis, comps)
    if span.dim == w:
        return CodimOneAbelianIdeals("none", [])
    if span.dim == w - 1:
        h = _lift_hyperplane(n, g1, quotient_basis, span.basis_vectors())
        if bracket_subspaces(L, h, h).dim == 0:
            return CodimOneAbelianIdeals("unique", [h])
        return CodimOneAbelianIdeals("none", [])
    # candidate hyperplanes form a family; try coordinate completions
    found = []
    for i in range(w):
        cand_vecs = list(span.basis_vectors()) + [
            unit_vec(w, j) for j in range(w) if j != i
        ]
        cand = Subspace(w, cand_vecs)
        if cand.dim != w - 1:
            continue
        h = _lift_hyperplane(n, g1, quotient_basis, cand.basis_vectors())
        if bracket_subspaces(L, h, h).dim == 0 and h not in found:
            found.append(h)
        if len(found) >= 2:
            return CodimOneAbelianIdeals("multiple", found)
    if len(found) == 1:
        return CodimOneAbelianIdeals("unique", found)
    return CodimOneAbelianIdeals("undetermined", [])


def _quotient_basis(n, sub: Subspace):
    """Coordinate vectors completing sub to Q^n (representatives mod sub)."""
    out = []
    cur = Subspace(n, sub.basis_vectors())
    for i in range(n):
        e = unit_vec(n, i)
        if not cur.contains(e):
            out.append(e)
            cur = cur.sum(Subspace(n, [e]))
    return out


def _induced_form_components(L, g1, quotient_basis):
    """The bracket g/g1 x g/g1 -> g1 as one matrix per g1 coordinate."""
    w = len(quotient_basis)
    comps = [[[Fraction(0)] * w for _ in range(w)] for _ in range(g1.dim)]
    for r in range(w):
        for s in range(w):
            v = L.bracket(quotient_basis[r], quotient_basis[s])
            coords = g1.coordinates_of(v)
            if coords is None:
                raise ArithmeticError("bracket does not descend; g1 not central")
            for t, x in enumerate(coords):
                comps[t][r][s] = x
    return comps


def _lift_hyperplane(n, g1, quotient_basis, quotient_vecs):
    vecs = list(g1.basis_vectors())
    for qv in quotient_vecs:
        lift = vec_zero(n)
        for j, b in enumerate(quotient_basis):
            lift = vec_add(lift, vec_scale(b, qv[j]))
        vecs.append(lift)
    return Subspace(n, vecs)


# --- Salamon notation ----------------------------------------------------


_TERM_RE = re.compile(
    r"^(?:(?P<coeff>-?\d+(?:/\d+)?)\*)?(?P<pair>\d\d|\d+\.\d+)$"
)


def parse_salamon(text: str) -> LieAlgebra:
    """Parse Salamon notation, e.g. "(0,0,12)" or "(0^3,12,15,-16)".

    A term "+ij" in slot k encodes de^k = ... + e^i wedge e^j, which with
    (d a)(X, Y) = -a([X, Y]) means c^k_{ij} = -1.
    """
    s = text.strip()
    if not (s.startswith("(") and s.endswith(")")):
        raise ValueError("Salamon string must be parenthesized")
    slots = []
    for raw in s[1:-1].split(","):
        tok = raw.strip()
        if not tok:
            raise ValueError(f"empty slot near {raw!r}")
        m = re.fullmatch(r"0\^(\d+)", tok)
        if m:
            slots.extend(["0"] * int(m.group(1)))
        else:
            slots.append(tok)
    dim = len(slots)
    brackets = {}
    for k, slot in enumerate(slots):
        if slot == "0":
            continue
        for sign, term in _split_terms(slot):
            m = _TERM_RE.match(term)
            if not m:
                raise ValueError(f"bad term {term!r} in slot {k + 1}")
            coeff = Fraction(m.group("coeff") or 1) * sign
            pair = m.group("pair")
            if "." in pair:
                i_s, j_s = pair.split(".")
            else:
                i_s, j_s = pair[0], pair[1]
            i, j = int(i_s), int(j_s)
            if i == j:
                raise ValueError(f"repeated index in term {term!r}")
            if not (1 <= i <= dim and 1 <= j <= dim):
                raise ValueError(f"index out of range in term {term!r}")
            if i > j:
                i, j, coeff = j, i, -coeff
            key = (i - 1, j - 1)
            cur = brackets.setdefault(key, list(vec_zero(dim)))
            # de^k has coefficient `coeff` on e^i ^ e^j  =>  c^k_{ij} = -coeff
            cur[k] += -coeff
    return LieAlgebra(dim, {k: tuple(v) for k, v in brackets.items()})


def _split_terms(slot: str):
    out = []
    cur = ""
    sign = 1
    first = True
    for ch in slot.replace(" ", ""):
        if ch in "+-" and cur:
            out.append((sign, cur))
            sign = 1 if ch == "+" else -1
            cur = ""
        elif ch in "+-" and first:
            sign = 1 if ch == "+" else -1
        else:
            cur += ch
        first = False
    if cur:
        out.append((sign, cur))
    return out


def print_salamon(L: LieAlgebra) -> str:
    """Canonical Salamon string (expanded zeros, ordered terms)."""
    dotted = L.dim >= 10
    slots = []
    for k in range(L.dim):
        terms = []
        for (i, j) in sorted(L.c):
            coeff = -L.c[(i, j)][k]
            if coeff == 0:
                continue
            pair = f"{i + 1}.{j + 1}" if dotted else f"{i + 1}{j + 1}"
            if coeff == 1:
                txt = pair
            elif coeff == -1:
                txt = f"-{pair}"
            else:
                txt = f"{coeff}*{pair}"
            terms.append(txt)
        if not terms:
            slots.append("0")
        else:
            joined = terms[0]
            for t in terms[1:]:
                joined += t if t.startswith("-") else "+" + t
            slots.append(joined)
    return "(" + ",".join(slots) + ")"


# --- fingerprints ---------------------------------------------------------


@dataclass(frozen=True)
class Fingerprint:
    dim: int
    lcs_dims: tuple
    derived_dims: tuple
    center_dim: int
    unimodular: bool
    ad_profile: tuple  # scale-invariant summary of a generic ad_X

    def as_dict(self):
        return {
            "dim": self.dim,
            "lower_central_dims": list(self.lcs_dims),
            "derived_dims": list(self.derived_dims),
            "center_dim": self.center_dim,
            "unimodular": self.unimodular,
            "ad_profile": [list(t) for t in self.ad_profile],
        }


def _ad_profile_summary(L, x):
    m = L.ad(x)
    out = []
    for pr in primary_profiles(m):
        rc = root_classes(pr.factor)
        out.append(
            (
                pr.factor.degree,
                int(rc.is_zero),
                rc.n_real,
                rc.n_imag_pairs,
                rc.n_generic_pairs,
                pr.block_sizes,
            )
        )
    return tuple(sorted(out))


def invariant_fingerprint(L: LieAlgebra, samples=24, seed=0) -> Fingerprint:
    """Basis-independent surrogate for the isomorphism class.

    The ad-profile entry records, for a generic element X, the factor
    degrees, root classes and block sizes of ad_X; eigenvalue values are
    dropped, making the summary invariant under rescaling of X.  Genericity
    is sampled: the summary maximizing the rank sequence of ad_X powers is
    kept, which hits the generic stratum with overwhelming probability for
    rational sampling.
    """
    import random

    rng = random.Random(seed)
    n = L.dim
    if n == 0:
        return Fingerprint(0, (), (), 0, True, ())
    cands = [unit_vec(n, i) for i in range(n)]
    cands.append(tuple(Fraction(1) for _ in range(n)))
    for _ in range(samples):
        cands.append(tuple(Fraction(rng.randint(-9, 9)) for _ in range(n)))
    best_key = None
    best = None
    for x in cands:
        m = L.ad(x)
        ranks = []
        p = m
        for _ in range(n):
            ranks.append(p.rank())
            if ranks[-1] == 0:
                break
            p = p * m
        summ = _ad_profile_summary(L, x)
        key = (tuple(ranks), summ)
        if best_key is None or key > best_key:
            best_key = key
            best = summ
    lcs = lower_central_series(L)
    der = derived_series(L)
    return Fingerprint(
        n, lcs.dims, der.dims, center(L).dim, is_unimodular(L), best
    )
