"""Almost Abelian algebras R^{4n-1} x_f R and their classification.

The canonical pair (J0, omega0) lives on R^{4n}; a structure theorem pins
f, up to the equivalence moves of apply_equivalence, to a block form with
an sp(2n-2, C) corner, and existence of a complex symplectic structure is
decided purely from the primary profiles of f.  Two independent decision
paths are provided: classify_existence evaluates the parity/pairing
conditions directly, classify_existence_oracle matches the profile against
the five canonical families.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from cslie.csgeom import CSStructure
from cslie.exactalg import (
    QMat,
    QPoly,
    Subspace,
    negation_partner,
    primary_profiles,
    root_classes,
    unit_vec,
    vec_add,
    vec_is_zero,
    vec_scale,
    vec_zero,
)
from cslie.exactalg.profiles import PrimaryProfile
from cslie.liecore import LieAlgebra, codim1_abelian_ideals


class NotAlmostAbelian(Exception):
    pass


class Degenerate(Exception):
    pass


# --- canonical structures -------------------------------------------------


def standard_J(m: int) -> QMat:
    """J on R^{2m} sending e_{2k-1} -> -e_{2k}, e_{2k} -> e_{2k-1}."""
    j = [[Fraction(0)] * (2 * m) for _ in range(2 * m)]
    for t in range(m):
        j[2 * t + 1][2 * t] = Fraction(-1)
        j[2 * t][2 * t + 1] = Fraction(1)
    return QMat(j)


def standard_omega_blocks(m4: int) -> QMat:
    """4-periodic form e^{4l-3}^e^{4l} + e^{4l-2}^e^{4l-1} on R^{m4}."""
    om = [[Fraction(0)] * m4 for _ in range(m4)]
    for t in range(m4 // 4):
        om[4 * t][4 * t + 3] = Fraction(1)
        om[4 * t + 3][4 * t] = Fraction(-1)
        om[4 * t + 1][4 * t + 2] = Fraction(1)
        om[4 * t + 2][4 * t + 1] = Fraction(-1)
    return QMat(om)


def canonical_J0(n: int) -> QMat:
    d = 4 * n
    j = [[Fraction(0)] * d for _ in range(d)]
    for t in range(2 * (n - 1)):
        j[2 * t + 1][2 * t] = Fraction(-1)
        j[2 * t][2 * t + 1] = Fraction(1)
    j[d - 3][d - 4] = Fraction(1)
    j[d - 4][d - 3] = Fraction(-1)
    j[d - 1][d - 2] = Fraction(-1)
    j[d - 2][d - 1] = Fraction(1)
    return QMat(j)


def canonical_omega0(n: int) -> QMat:
    d = 4 * n
    om = [[Fraction(0)] * d for _ in range(d)]
    for t in range(n - 1):
        om[4 * t][4 * t + 3] = Fraction(1)
        om[4 * t + 3][4 * t] = Fraction(-1)
        om[4 * t + 1][4 * t + 2] = Fraction(1)
        om[4 * t + 2][4 * t + 1] = Fraction(-1)
    om[d - 4][d - 1] = Fraction(-1)
    om[d - 1][d - 4] = Fraction(1)
    om[d - 3][d - 2] = Fraction(1)
    om[d - 2][d - 3] = Fraction(-1)
    return QMat(om)


def canonical_J0_omega0(n: int) -> CSStructure:
    return CSStructure(canonical_J0(n), canonical_omega0(n))


# --- semidirect products --------------------------------------------------


@dataclass(frozen=True)
class AlmostAbelianAlg:
    f: QMat

    @property
    def inner_dim(self):
        return self.f.rows

    def algebra(self) -> LieAlgebra:
        return build_semidirect(self.f)


def build_semidirect(f: QMat) -> LieAlgebra:
    """R^k x_f R with [e_{k+1}, e_i] = f(e_i); Jacobi is automatic."""
    if f.rows != f.cols:
        raise ValueError("f must be square")
    k = f.rows
    brackets = {}
    for i in range(k):
        col = f.col(i)
        if not vec_is_zero(col):
            brackets[(i, k)] = tuple(-x for x in col) + (Fraction(0),)
    return LieAlgebra(k + 1, brackets, check_jacobi=False)


# --- sp(2m, C) as real matrices --------------------------------------------


def sp_complex_membership(a: QMat) -> bool:
    """A commutes with the standard J and annihilates the standard form.

    The block size must be divisible by 4; the form is the 4-periodic
    standard_omega_blocks one (real part of the complex symplectic form),
    and annihilating it together with J-commutation forces annihilation of
    the imaginary part as well.
    """
    m4 = a.rows
    if a.cols != m4 or m4 % 4:
        raise ValueError("sp membership needs a square matrix of size 4m")
    if m4 == 0:
        return True
    j = standard_J(m4 // 2)
    om = standard_omega_blocks(m4)
    if a * j != j * a:
        return False
    return (a.transpose() * om + om * a).is_zero()


@lru_cache(maxsize=None)
def sp_complex_basis(m4: int):
    """Rational basis of {A : [A, J] = 0, A.omega = 0} on R^{m4}."""
    if m4 == 0:
        return ()
    j = standard_J(m4 // 2)
    om = standard_omega_blocks(m4)
    rows = []
    n2 = m4 * m4
    for r in range(m4):
        for c in range(m4):
            # (AJ - JA)[r][c] = 0
            row = [Fraction(0)] * n2
            for k in range(m4):
                row[r * m4 + k] += j[k, c]
                row[k * m4 + c] -= j[r, k]
            rows.append(row)
            # (A^T om + om A)[r][c] = sum_k A[k][r] om[k][c] + om[r][k] A[k][c] = 0
            row = [Fraction(0)] * n2
            for k in range(m4):
                row[k * m4 + r] += om[k, c]
                row[k * m4 + c] += om[r, k]
            rows.append(row)
    kern = QMat(rows).kernel_basis()
    out = []
    for v in kern:
        out.append(QMat([[v[r * m4 + c] for c in range(m4)] for r in range(m4)]))
    return tuple(out)


def random_sp_matrix(m4: int, rng: random.Random, span=3) -> QMat:
    basis = sp_complex_basis(m4)
    if not basis:
        return QMat.zeros(0, 0)
    a = QMat.zeros(m4, m4)
    for b in basis:
        c = Fraction(rng.randint(-span, span))
        if c:
            a = a + b * c
    return a


def random_symplectic_complex(m4: int, rng: random.Random) -> QMat:
    """Random rational element of Sp commuting with J (Cayley transform)."""
    if m4 == 0:
        return QMat.zeros(0, 0)
    ident = QMat.identity(m4)
    while True:
        s = random_sp_matrix(m4, rng, span=2) * Fraction(1, 2)
        try:
            return (ident - s).inverse() * (ident + s)
        except ValueError:
            continue


# --- the structure-theorem block form ---------------------------------------


@dataclass(frozen=True)
class ThmCSParams:
    fJ: QMat  # element of sp(u'_J) as a real (4n-4) matrix
    a: Fraction
    b: Fraction
    c: Fraction
    u: tuple  # vector in u'_J (length 4n-4)


def build_f_from_thm_cs(n: int, p: ThmCSParams) -> AlmostAbelianAlg:
    """Assemble f on u = u'_J + <Y> + <JY> + <JX> from theorem data."""
    m4 = 4 * n - 4
    if p.fJ.rows != m4:
        raise ValueError("fJ has the wrong size")
    if not sp_complex_membership(p.fJ):
        raise ValueError("fJ is not in sp(2n-2, C)")
    u = tuple(Fraction(x) for x in p.u)
    if len(u) != m4:
        raise ValueError("u has the wrong length")
    jr = standard_J(m4 // 2) if m4 else QMat.zeros(0, 0)
    omr = standard_omega_blocks(m4)
    n1 = m4 + 3
    f = [[Fraction(0)] * n1 for _ in range(n1)]
    for i in range(m4):
        for j in range(m4):
            f[i][j] = p.fJ[i, j]
        f[i][m4 + 2] = u[i]
    ju = jr.apply(u) if m4 else ()
    for i in range(m4):
        f[m4][i] = _form_val(omr, ju, unit_vec(m4, i))
        f[m4 + 1][i] = _form_val(omr, u, unit_vec(m4, i))
    a, b, c = Fraction(p.a), Fraction(p.b), Fraction(p.c)
    f[m4][m4] = a
    f[m4 + 1][m4 + 1] = a
    f[m4][m4 + 2] = b
    f[m4 + 1][m4 + 2] = c
    f[m4 + 2][m4 + 2] = -a
    return AlmostAbelianAlg(QMat(f))


def _form_val(om: QMat, x, y):
    return sum((xi * v for xi, v in zip(x, om.apply(y))), Fraction(0))


def parse_thm_cs_shape(f: QMat) -> ThmCSParams:
    """Inverse of build_f_from_thm_cs; raises if f is not in the shape."""
    n1 = f.rows
    m4 = n1 - 3
    if m4 < 0 or m4 % 4:
        raise ValueError("matrix size is not 4n-1")
    a = f[m4, m4]
    fJ = QMat([[f[i, j] for j in range(m4)] for i in range(m4)])
    u = tuple(f[i, m4 + 2] for i in range(m4))
    p = ThmCSParams(fJ, a, f[m4, m4 + 2], f[m4 + 1, m4 + 2], u)
    if build_f_from_thm_cs(m4 // 4 + 1, p).f != f:
        raise ValueError("matrix is not in the structure-theorem block shape")
    return p


# --- block-form checks for J and omega separately ---------------------------


def detect_codim1_abelian_ideal(L: LieAlgebra) -> Subspace:
    r = codim1_abelian_ideals(L)
    if not r.witnesses:
        raise NotAlmostAbelian(f"no codimension-one abelian ideal ({r.kind})")
    return r.witnesses[0]


@dataclass
class ComplexBlockForm:
    conforms: bool
    reason: str | None
    f0: QMat | None = None
    v: tuple | None = None
    a: Fraction | None = None


def thm_complex_blockform(L: LieAlgebra, j: QMat, u: Subspace | None = None) -> ComplexBlockForm:
    """Block test for integrability of J on an almost Abelian algebra.

    Expresses f = ad_X|_u in the splitting u = u_J + <JX> (with X chosen
    so that JX lies in u); J is integrable iff f preserves u_J and its
    u_J block commutes with J.
    """
    if u is None:
        u = detect_codim1_abelian_ideal(L)
    n = L.dim
    x = _pick_x_with_jx_in_u(n, j, u)
    uj = u.intersect(u.image_under(j))
    jx = j.apply(x)
    basis = uj.basis_vectors() + [jx]
    coords = QMat.from_cols(basis)
    f = L.ad(x)
    f0_cols = []
    for b in uj.basis_vectors():
        sol = coords.solve(f.apply(b))
        if sol is None:
            raise NotAlmostAbelian("f does not preserve the abelian ideal")
        if sol[-1] != 0:
            return ComplexBlockForm(False, "f(u_J) is not inside u_J")
        f0_cols.append(sol[:-1])
    f0 = QMat.from_cols(f0_cols) if f0_cols else QMat.zeros(0, 0)
    # J restricted to u_J in the same basis
    juj_cols = []
    for b in uj.basis_vectors():
        sol = coords.solve(j.apply(b))
        if sol is None or sol[-1] != 0:
            raise ArithmeticError("u_J is not J-invariant")
        juj_cols.append(sol[:-1])
    juj = QMat.from_cols(juj_cols) if juj_cols else QMat.zeros(0, 0)
    if uj.dim and f0 * juj != juj * f0:
        return ComplexBlockForm(False, "u_J block of f does not commute with J")
    sol = coords.solve(f.apply(jx))
    if sol is None:
        raise NotAlmostAbelian("f does not preserve the abelian ideal")
    return ComplexBlockForm(True, None, f0, sol[:-1], sol[-1])


def _pick_x_with_jx_in_u(n, j, u: Subspace):
    from cslie.liecore import _quotient_projection_rows

    rows = _quotient_projection_rows(n, u)
    phi = rows[0]
    # S = {v : Jv in u} = kernel of the row functional phi . J
    row = [sum(phi[k] * j[k, c] for k in range(n)) for c in range(n)]
    cand = Subspace(n, QMat([row]).kernel_basis())
    for v in cand.basis_vectors():
        val = sum(phi[k] * v[k] for k in range(n))
        if val != 0:
            return vec_scale(v, 1 / val)
    raise NotAlmostAbelian("no X with JX in u exists (u is J-invariant)")


@dataclass
class SymplecticBlockForm:
    conforms: bool
    reason: str | None
    f_prime: QMat | None = None
    alpha: tuple | None = None
    a_prime: Fraction | None = None


def thm_symplectic_blockform(
    L: LieAlgebra, omega: QMat, u: Subspace | None = None
) -> SymplecticBlockForm:
    """Block test for closedness of a non-degenerate 2-form.

    Needs f(u-perp) inside u-perp and the u' block of f in sp(u', omega').
    """
    if omega.det() == 0:
        raise Degenerate("omega is degenerate")
    if u is None:
        u = detect_codim1_abelian_ideal(L)
    n = L.dim
    from cslie.csgeom import symplectic_orthogonal

    uperp = symplectic_orthogonal(omega, u)
    if uperp.dim != 1 or not u.contains_subspace(uperp):
        raise ArithmeticError("u-perp is not a line inside u")
    x = _pick_x_outside(n, u)
    f = L.ad(x)
    y = uperp.basis_vectors()[0]
    fy = f.apply(y)
    coords = uperp.coordinates_of(fy)
    if coords is None:
        return SymplecticBlockForm(False, "f does not preserve u-perp")
    a_prime = coords[0]
    uprime = uperp.complement_in(u)
    basis = uprime.basis_vectors()
    full = QMat.from_cols(basis + [y])
    fp_cols = []
    alpha = []
    for b in basis:
        sol = full.solve(f.apply(b))
        if sol is None:
            raise NotAlmostAbelian("f does not preserve the abelian ideal")
        fp_cols.append(sol[:-1])
        alpha.append(sol[-1])
    fp = QMat.from_cols(fp_cols) if fp_cols else QMat.zeros(0, 0)
    gram = QMat([[_form_val(omega, bi, bj) for bj in basis] for bi in basis])
    if not (fp.transpose() * gram + gram * fp).is_zero():
        return SymplecticBlockForm(False, "u' block of f is not in sp(u', omega')")
    return SymplecticBlockForm(True, None, fp, tuple(alpha), a_prime)


def _pick_x_outside(n, u: Subspace):
    for i in range(n):
        e = unit_vec(n, i)
        if not u.contains(e):
            return e
    raise NotAlmostAbelian("u is the whole algebra")


# --- decomposition of a verified structure ----------------------------------


@dataclass
class SplittingReport:
    u: Subspace
    u_prime_J: Subspace
    v_basis: tuple  # (Y, JY, JX, X) ambient vectors
    params: ThmCSParams
    omega_blocks_ok: bool  # omega(u'_J, V) = 0 and the V Gram pattern
    theorem_rows_ok: bool  # the omega(Ju, .), omega(u, .) row structure


def decompose_cs(
    L: LieAlgebra, s: CSStructure, u: Subspace | None = None
) -> SplittingReport:
    """Split a verified almost Abelian structure along the theorem basis.

    Recovers (fJ, a, b, c, u) with respect to the splitting
    u = u'_J + <Y> + <JY> + <JX>, normalized by omega(JY, JX) = 1 and by
    scaling X to unit coefficient on the canonical quotient functional.
    """
    from cslie.csgeom import symplectic_orthogonal, verify_cs
    from cslie.liecore import _quotient_projection_rows

    rep = verify_cs(L, s)
    if not rep.verdict:
        raise ValueError("decompose_cs requires a verified structure")
    if u is None:
        u = detect_codim1_abelian_ideal(L)
    n = L.dim
    j, om = s.J, s.Omega
    uperp = symplectic_orthogonal(om, u)
    if uperp.dim != 1:
        raise Degenerate("u-perp is not a line")
    juperp = uperp.image_under(j)
    core = uperp.sum(juperp)
    w = core.complement_in(u)
    uprime = juperp.sum(w)
    uJ = uprime.intersect(uprime.image_under(j))
    # X in (u')-perp, normalized against the quotient functional
    uprime_perp = symplectic_orthogonal(om, uprime)
    phi = _quotient_projection_rows(n, u)[0]
    x = None
    for vv in uprime_perp.basis_vectors():
        val = sum(phi[k] * vv[k] for k in range(n))
        if val != 0:
            x = vec_scale(vv, 1 / val)
            break
    if x is None:
        raise ArithmeticError("no X outside u in (u')-perp")
    jx = j.apply(x)
    if not uprime.contains(jx):
        raise ArithmeticError("JX does not land in u'")
    y0 = uperp.basis_vectors()[0]
    mu = _form_val(om, j.apply(y0), jx)
    if mu == 0:
        raise Degenerate("cannot normalize omega(JY, JX) = 1")
    y = vec_scale(y0, 1 / mu)
    jy = j.apply(y)
    # omega block checks
    vvecs = (y, jy, jx, x)
    blocks_ok = all(
        _form_val(om, b, vv) == 0 for b in uJ.basis_vectors() for vv in vvecs
    )
    expect = {
        (0, 3): Fraction(-1),
        (1, 2): Fraction(1),
    }
    for p in range(4):
        for q in range(p + 1, 4):
            want = expect.get((p, q), Fraction(0))
            if _form_val(om, vvecs[p], vvecs[q]) != want:
                blocks_ok = False
    # read off f in the splitting
    f = L.ad(x)
    basis = list(uJ.basis_vectors()) + [y, jy, jx]
    coords = QMat.from_cols(basis)
    m4 = uJ.dim
    cols = []
    for b in basis:
        sol = coords.solve(f.apply(b))
        if sol is None:
            raise NotAlmostAbelian("f does not preserve u")
        cols.append(sol)
    fm = QMat.from_cols(cols)
    fJ = QMat([[fm[i, jj] for jj in range(m4)] for i in range(m4)])
    a = fm[m4, m4]
    b_ = fm[m4, m4 + 2]
    c_ = fm[m4 + 1, m4 + 2]
    uvec = tuple(fm[i, m4 + 2] for i in range(m4))
    params = ThmCSParams(fJ, a, b_, c_, uvec)
    # theorem row structure: coefficient of Y in f(b_i) equals omega(J u, b_i)
    u_amb = vec_zero(n)
    for i, bb in enumerate(uJ.basis_vectors()):
        u_amb = vec_add(u_amb, vec_scale(bb, uvec[i]))
    rows_ok = True
    for i, bb in enumerate(uJ.basis_vectors()):
        if fm[m4, i] != _form_val(om, j.apply(u_amb), bb):
            rows_ok = False
        if fm[m4 + 1, i] != _form_val(om, u_amb, bb):
            rows_ok = False
        if fm[m4 + 2, i] != 0:
            rows_ok = False
    if fm[m4 + 1, m4 + 1] != a or fm[m4 + 2, m4 + 2] != -a:
        rows_ok = False
    return SplittingReport(u, uJ, vvecs, params, blocks_ok, rows_ok)


# --- equivalence moves ------------------------------------------------------


@dataclass(frozen=True)
class EquivalenceMove:
    Delta: QMat
    lam: Fraction
    mu1: Fraction
    mu2: Fraction
    uX: tuple  # vector in u'_J


def apply_equivalence(f: QMat, move: EquivalenceMove):
    """Transport f by the (J0, omega0)-preserving isomorphism K.

    Returns (f_tilde, K) with K f = lam f_tilde K on the ideal,
    K J0 = J0 K and K^T Omega0 K = Omega0.
    """
    params = parse_thm_cs_shape(f)
    m4 = f.rows - 3
    n = m4 // 4 + 1
    lam = Fraction(move.lam)
    if lam == 0:
        raise ValueError("lambda must be nonzero")
    delta = move.Delta
    jr = standard_J(m4 // 2) if m4 else QMat.zeros(0, 0)
    omr = standard_omega_blocks(m4)
    if m4:
        if delta.rows != m4 or delta * jr != jr * delta:
            raise ValueError("Delta must commute with the restricted J0")
        if delta.transpose() * omr * delta != omr:
            raise ValueError("Delta must preserve the restricted omega0")
    ux = tuple(Fraction(v) for v in move.uX)
    jux = jr.apply(ux) if m4 else ()
    d = 4 * n
    k = [[Fraction(0)] * d for _ in range(d)]
    for i in range(m4):
        for jj in range(m4):
            k[i][jj] = delta[i, jj]
        k[i][m4 + 2] = jux[i]
        k[i][m4 + 3] = ux[i]
    for i in range(m4):
        di = delta.col(i)
        k[m4][i] = -_form_val(omr, ux, di) / lam
        k[m4 + 1][i] = _form_val(omr, jux, di) / lam
    mu1, mu2 = Fraction(move.mu1), Fraction(move.mu2)
    k[m4][m4] = 1 / lam
    k[m4 + 1][m4 + 1] = 1 / lam
    k[m4][m4 + 2] = -mu2
    k[m4 + 1][m4 + 2] = mu1
    k[m4][m4 + 3] = mu1
    k[m4 + 1][m4 + 3] = mu2
    k[m4 + 2][m4 + 2] = lam
    k[m4 + 3][m4 + 3] = lam
    kmat = QMat(k)
    ku = QMat([[k[i][jj] for jj in range(d - 1)] for i in range(d - 1)])
    f_tilde = (ku * f * ku.inverse()) * (1 / lam)
    return f_tilde, kmat


# --- canonical families -----------------------------------------------------

I20 = QMat([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]])
I02 = QMat([[0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
DBLK = QMat([[-1, 0, 0, 0], [0, -1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
NTIL = QMat([[0, 0, 0, 0], [0, 0, 0, 0], [1, 0, 0, 0], [0, 1, 0, 0]])


def _block_tridiag(blocks_diag, width):
    """4x4-block tridiagonal with -I02 above and I20 below the diagonal."""
    m = width
    out = [[Fraction(0)] * (4 * m) for _ in range(4 * m)]
    for t, blk in enumerate(blocks_diag):
        for i in range(4):
            for j in range(4):
                out[4 * t + i][4 * t + j] = blk[i, j]
    for t in range(m - 1):
        for i in range(4):
            for j in range(4):
                out[4 * t + i][4 * (t + 1) + j] += -I02[i, j]
                out[4 * (t + 1) + i][4 * t + j] += I20[i, j]
    return QMat(out)


def jtilde_p_minus1(p: int) -> QMat:
    return _block_tridiag([DBLK] * p, p)


def jtilde_odd(k: int) -> QMat:
    """The (8k-4)-dimensional nilpotent block with 2k-1 diagonal zeros."""
    return _block_tridiag([QMat.zeros(4)] * (2 * k - 1), 2 * k - 1)


def jtilde_even(k: int) -> QMat:
    """The 4k-dimensional nilpotent block ending in the N-tilde corner."""
    return _block_tridiag([QMat.zeros(4)] * (k - 1) + [NTIL], k)


FAMILIES = (
    "nonunimodular-plain",
    "unimodular-plain",
    "nonunimodular-jordan",
    "unimodular-odd",
    "unimodular-even",
)


@dataclass(frozen=True)
class CanonicalFParams:
    family: str
    inner: QMat  # the sp(., C) corner block (possibly 0x0)
    b: Fraction = Fraction(0)
    c: Fraction = Fraction(0)
    p: int = 0  # block parameter for jordan/odd/even families


def canonical_family_build(n: int, params: CanonicalFParams) -> AlmostAbelianAlg:
    """Assemble one of the five canonical matrices for f."""
    fam = params.family
    if fam not in FAMILIES:
        raise ValueError(f"unknown family {fam!r}")
    m4 = 4 * n - 4
    inner = params.inner
    if not sp_complex_membership(inner):
        raise ValueError("inner block is not in sp(., C)")
    if fam == "nonunimodular-plain":
        if inner.rows != m4:
            raise ValueError("inner block must have size 4n-4")
        return build_f_from_thm_cs(
            n, ThmCSParams(inner, Fraction(1), Fraction(0), Fraction(0), vec_zero(m4))
        )
    if fam == "unimodular-plain":
        if inner.rows != m4:
            raise ValueError("inner block must have size 4n-4")
        return build_f_from_thm_cs(
            n, ThmCSParams(inner, Fraction(0), params.b, params.c, vec_zero(m4))
        )
    p = params.p
    if fam == "nonunimodular-jordan":
        if not 1 <= p <= n - 1:
            raise ValueError("p out of range")
        blk = jtilde_p_minus1(p)
        a, b, c = Fraction(1), Fraction(0), Fraction(0)
    elif fam == "unimodular-odd":
        if not 1 <= p <= n // 2:
            raise ValueError("r out of range")
        blk = jtilde_odd(p)
        a, b, c = Fraction(0), params.b, params.c
    else:  # unimodular-even
        if not 1 <= p <= n - 1:
            raise ValueError("s out of range")
        blk = jtilde_even(p)
        a, b, c = Fraction(0), params.b, params.c
    if inner.rows + blk.rows != m4:
        raise ValueError("inner block has the wrong size for this family")
    fj = _block_diag(inner, blk)
    u = unit_vec(m4, inner.rows) if m4 else ()
    return build_f_from_thm_cs(n, ThmCSParams(fj, a, b, c, u))


def _block_diag(a: QMat, b: QMat) -> QMat:
    n, m = a.rows, b.rows
    out = [[Fraction(0)] * (n + m) for _ in range(n + m)]
    for i in range(n):
        for j in range(n):
            out[i][j] = a[i, j]
    for i in range(m):
        for j in range(m):
            out[n + i][n + j] = b[i, j]
    return QMat(out)


def random_canonical_params(n: int, family: str, rng: random.Random) -> CanonicalFParams:
    """Random valid parameters for a canonical family (None if empty range)."""
    m4 = 4 * n - 4
    if family == "nonunimodular-plain":
        return CanonicalFParams(family, random_sp_matrix(m4, rng))
    if family == "unimodular-plain":
        return CanonicalFParams(
            family,
            random_sp_matrix(m4, rng),
            Fraction(rng.randint(-3, 3)),
            Fraction(rng.randint(-3, 3)),
        )
    if family == "nonunimodular-jordan":
        if n < 2:
            raise ValueError("family needs n >= 2")
        p = rng.randint(1, n - 1)
        return CanonicalFParams(family, random_sp_matrix(m4 - 4 * p, rng), p=p)
    if family == "unimodular-odd":
        if n < 2:
            raise ValueError("family needs n >= 2")
        r = rng.randint(1, n // 2)
        return CanonicalFParams(
            family,
            random_sp_matrix(4 * n - 8 * r, rng),
            Fraction(rng.randint(-3, 3)),
            Fraction(rng.randint(-3, 3)),
            p=r,
        )
    if family == "unimodular-even":
        if n < 2:
            raise ValueError("family needs n >= 2")
        s = rng.randint(1, n - 1)
        return CanonicalFParams(
            family,
            random_sp_matrix(m4 - 4 * s, rng),
            Fraction(rng.randint(-3, 3)),
            Fraction(rng.randint(-3, 3)),
            p=s,
        )
    raise ValueError(f"unknown family {family!r}")


# --- the classification decision procedure ----------------------------------


@dataclass
class Existence:
    exists: bool
    case: str | None
    violated: str | None

    def as_dict(self):
        return {"exists": self.exists, "case": self.case, "violated": self.violated}


def _counts_by_factor(profiles):
    return {pr.factor: pr.size_counts() for pr in profiles}


def classify_existence(f: QMat) -> Existence:
    """Decide existence of a complex symplectic structure on R^{4n-1} x_f R.

    Evaluates the parity and negation-pairing conditions on the primary
    profiles of f; in the non-unimodular case the distinguished eigenvalue
    is forced to equal tr(f) (all other eigenvalue classes cancel in the
    trace), so no search is needed.
    """
    if f.rows != f.cols or f.rows % 4 != 3:
        raise ValueError("f must be square of size 4n-1")
    profiles = primary_profiles(f)
    by = {pr.factor: pr for pr in profiles}
    xpoly = QPoly.x()
    # conditions at non-real, non-imaginary eigenvalues, and at imaginary ones
    for pr in profiles:
        p = pr.factor
        if p == xpoly:
            continue
        rc = root_classes(p)
        if rc.n_generic_pairs:
            q = negation_partner(p)
            if q != p and (q not in by or by[q].block_sizes != pr.block_sizes):
                return Existence(False, None, "generic eigenvalue pairing N(m,z)=N(m,-z)")
        if rc.n_imag_pairs:
            if any(cnt % 2 for cnt in pr.size_counts().values()):
                return Existence(False, None, "imaginary eigenvalue parity N(m,ib) even")
    zero_counts = by.get(xpoly).size_counts() if xpoly in by else {}
    tr = f.trace()
    if tr != 0:
        # non-unimodular: distinguished eigenvalue a0 = tr(f)
        a0 = tr
        plus = QPoly([-a0, 1])
        minus = QPoly([a0, 1])
        for pr in profiles:
            p = pr.factor
            if p in (xpoly, plus, minus):
                continue
            rc = root_classes(p)
            if rc.n_real:
                if any(cnt % 2 for cnt in pr.size_counts().values()):
                    return Existence(False, None, "real eigenvalue parity away from a0")
                q = negation_partner(p)
                if q != p and (q not in by or by[q].block_sizes != pr.block_sizes):
                    return Existence(False, None, "real eigenvalue pairing away from a0")
        if not _zero_parities_standard(zero_counts):
            return Existence(False, None, "zero eigenvalue parities")
        np_ = by.get(plus, None)
        nm_ = by.get(minus, None)
        cp = np_.size_counts() if np_ else {}
        cm = nm_.size_counts() if nm_ else {}
        if any(cnt % 2 for cnt in cp.values()):
            return Existence(False, None, "parity N(m,a0) even")
        diff = {}
        for m in set(cp) | set(cm):
            d = cm.get(m, 0) - cp.get(m, 0)
            if d:
                diff[m] = d
        if diff == {1: -1}:
            return Existence(True, "(a)(i)", None)
        if len(diff) == 2:
            m0 = min(diff)
            if diff == {m0: 1, m0 + 1: -1}:
                return Existence(True, "(a)(ii)", None)
        return Existence(False, None, "offset pattern at the distinguished eigenvalue")
    # unimodular case
    for pr in profiles:
        p = pr.factor
        if p == xpoly:
            continue
        rc = root_classes(p)
        if rc.n_real:
            if any(cnt % 2 for cnt in pr.size_counts().values()):
                return Existence(False, None, "real eigenvalue parity")
            q = negation_partner(p)
            if q != p and (q not in by or by[q].block_sizes != pr.block_sizes):
                return Existence(False, None, "real eigenvalue pairing")
    z = zero_counts
    kmax = (max(z) if z else 0) // 2 + 1
    anomalies = [
        k
        for k in range(1, kmax + 1)
        if z.get(2 * k - 1, 0) % 4 or z.get(2 * k, 0) % 2
    ]
    if len(anomalies) != 1:
        return Existence(False, None, "zero eigenvalue parities admit no single exception")
    k0 = anomalies[0]
    z_odd = z.get(2 * k0 - 1, 0)
    z_even = z.get(2 * k0, 0)
    if k0 == 1 and z_odd % 4 == 3 and z_even % 2 == 0:
        return Existence(True, "(b)(i)", None)
    if k0 == 1 and z_odd % 4 == 1 and z_even % 2 == 1:
        return Existence(True, "(b)(ii)", None)
    if z_odd % 4 == 1 and z_even % 4 == 3:
        return Existence(True, "(b)(iii)", None)
    if k0 >= 2 and z_odd % 4 == 1 and z_even % 2 == 1:
        return Existence(True, "(b)(iv)", None)
    return Existence(False, None, "zero eigenvalue exception pattern")


def _zero_parities_standard(zero_counts) -> bool:
    for size, cnt in zero_counts.items():
        if size % 2 == 1 and cnt % 4:
            return False
        if size % 2 == 0 and cnt % 2:
            return False
    return True


def sp_profile_admissible(profiles) -> bool:
    """Is the profile that of (the realification of) an sp(2m, C) matrix?"""
    by = {pr.factor: pr for pr in profiles}
    xpoly = QPoly.x()
    for pr in profiles:
        p = pr.factor
        if p == xpoly:
            if not _zero_parities_standard(pr.size_counts()):
                return False
            continue
        rc = root_classes(p)
        if (rc.n_real or rc.n_imag_pairs) and any(
            cnt % 2 for cnt in pr.size_counts().values()
        ):
            return False
        q = negation_partner(p)
        if q != p and (q not in by or by[q].block_sizes != pr.block_sizes):
            return False
    return True


def _scale_profiles(profiles, lam):
    """Profiles of f/lam from the profiles of f."""
    out = []
    for pr in profiles:
        out.append(PrimaryProfile(pr.factor.scale_roots(Fraction(1, 1) / lam), pr.block_sizes))
    return out


def _subtract_delta(profiles, delta):
    """Remove (factor, size) -> count from a profile list, or None."""
    counts = {pr.factor: pr.size_counts() for pr in profiles}
    for (fac, size), cnt in delta.items():
        have = counts.get(fac, {}).get(size, 0)
        if have < cnt:
            return None
        counts[fac][size] = have - cnt
    out = []
    for fac, sc in counts.items():
        sizes = []
        for size, cnt in sc.items():
            sizes.extend([size] * cnt)
        if sizes:
            out.append(PrimaryProfile(fac, tuple(sorted(sizes, reverse=True))))
    return out


def classify_existence_oracle(f: QMat) -> bool:
    """Existence via canonical-family profile matching.

    Scales f so the distinguished eigenvalue (the trace) is 1 when
    non-unimodular, subtracts each family's forced block contribution and
    asks whether some remainder is an sp profile.
    """
    if f.rows != f.cols or f.rows % 4 != 3:
        raise ValueError("f must be square of size 4n-1")
    n = (f.rows + 1) // 4
    xp = QPoly.x()
    one = QPoly([-1, 1])
    mone = QPoly([1, 1])
    profiles = primary_profiles(f)
    tr = f.trace()
    if tr != 0:
        profiles = _scale_profiles(profiles, tr)
        deltas = [{(one, 1): 2, (mone, 1): 1}]
        for p in range(1, n):
            deltas.append({(one, p + 1): 2, (mone, p + 1): 1, (mone, p): 1})
    else:
        deltas = [{(xp, 1): 3}, {(xp, 1): 1, (xp, 2): 1}]
        for r in range(1, n // 2 + 1):
            deltas.append({(xp, 2 * r): 3, (xp, 2 * r - 1): 1})
        for s in range(1, n):
            deltas.append({(xp, 2 * s + 1): 1, (xp, 2 * s + 2): 1})
    for delta in deltas:
        rem = _subtract_delta(profiles, delta)
        if rem is not None and sp_profile_admissible(rem):
            return True
    return False


def uniqueness_hint(f: QMat) -> str:
    """"unique" or "unknown", for f admitting a structure.

    Non-unimodular algebras and the unimodular case with the zero
    eigenvalue pattern N(1,0) = 3 mod 4 (an abelian 4k-1 factor carrying
    all size-one zero blocks) admit exactly one structure up to
    equivalence; anything else is left undecided.
    """
    ex = classify_existence(f)
    if not ex.exists:
        raise ValueError("uniqueness_hint requires classify_existence to be Yes")
    if ex.case in ("(a)(i)", "(a)(ii)", "(b)(i)"):
        return "unique"
    return "unknown"
