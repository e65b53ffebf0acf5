"""Almost complex structures, two-forms, and the verification engine.

A CSStructure is a candidate pair (J, Omega) on a Lie algebra; verify_cs
establishes the full conjunction: J almost complex and integrable, Omega
closed and non-degenerate, and J symmetric with respect to Omega.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from cslie.exactalg import QMat, Subspace, unit_vec, vec_add, vec_is_zero, vec_scale
from cslie.liecore import LieAlgebra, center, commutator_ideal


class NotAlmostComplex(Exception):
    pass


class DimensionNotMultipleOf4(Exception):
    pass


@dataclass(frozen=True)
class CSStructure:
    J: QMat
    Omega: QMat

    def __post_init__(self):
        n = self.J.rows
        if self.J.cols != n or self.Omega.rows != n or self.Omega.cols != n:
            raise ValueError("J and Omega must be square of equal size")
        if self.Omega.transpose() != -self.Omega:
            raise ValueError("Omega must be antisymmetric")

    @property
    def dim(self):
        return self.J.rows

    def omega(self, x, y):
        return sum(
            (xi * v for xi, v in zip(x, self.Omega.apply(y))), Fraction(0)
        )


def is_almost_complex(J: QMat) -> bool:
    return J * J == -QMat.identity(J.rows)


def nijenhuis(L: LieAlgebra, J: QMat, x, y):
    """N_J(X, Y) = [X,Y] + J[JX,Y] + J[X,JY] - [JX,JY]."""
    jx, jy = J.apply(x), J.apply(y)
    out = L.bracket(x, y)
    out = vec_add(out, J.apply(L.bracket(jx, y)))
    out = vec_add(out, J.apply(L.bracket(x, jy)))
    return vec_add(out, vec_scale(L.bracket(jx, jy), -1))


def is_integrable(L: LieAlgebra, J: QMat):
    """(True, None) or (False, (i, j)) for the first violating basis pair."""
    if not is_almost_complex(J):
        raise NotAlmostComplex("J^2 != -I")
    n = L.dim
    for i in range(n):
        for j in range(i + 1, n):
            if not vec_is_zero(nijenhuis(L, J, unit_vec(n, i), unit_vec(n, j))):
                return False, (i, j)
    return True, None


def d_two_form(L: LieAlgebra, omega: QMat):
    """d omega as a map (i < j < k) -> value, dropping zeros."""
    n = L.dim
    out = {}
    for i in range(n):
        for j in range(i + 1, n):
            vij = L.bracket_basis(i, j)
            for k in range(j + 1, n):
                v = _omega_vec(omega, vij, unit_vec(n, k))
                v += _omega_vec(omega, L.bracket_basis(j, k), unit_vec(n, i))
                v += _omega_vec(omega, L.bracket_basis(k, i), unit_vec(n, j))
                if v:
                    out[(i, j, k)] = -v
    return out


def _omega_vec(omega: QMat, x, y):
    return sum((xi * v for xi, v in zip(x, omega.apply(y))), Fraction(0))


def is_closed(L: LieAlgebra, omega: QMat):
    d = d_two_form(L, omega)
    if d:
        return False, min(d)
    return True, None


def is_J_symmetric(J: QMat, omega: QMat) -> bool:
    return J.transpose() * omega == omega * J


@dataclass
class VerifyReport:
    almost_complex: bool
    integrable: bool
    integrability_witness: tuple | None
    closed: bool
    closedness_witness: tuple | None
    nondegenerate: bool
    J_symmetric: bool

    @property
    def verdict(self) -> bool:
        return (
            self.almost_complex
            and self.integrable
            and self.closed
            and self.nondegenerate
            and self.J_symmetric
        )

    def as_dict(self):
        return {
            "almost_complex": self.almost_complex,
            "integrable": self.integrable,
            "integrability_witness": self.integrability_witness,
            "closed": self.closed,
            "closedness_witness": self.closedness_witness,
            "nondegenerate": self.nondegenerate,
            "J_symmetric": self.J_symmetric,
            "verdict": self.verdict,
        }


def verify_cs(L: LieAlgebra, s: CSStructure) -> VerifyReport:
    """Full complex symplectic verification; reports all failures."""
    if L.dim % 4:
        raise DimensionNotMultipleOf4(f"dim {L.dim} is not a multiple of 4")
    ac = is_almost_complex(s.J)
    if ac:
        integ, iw = is_integrable(L, s.J)
    else:
        integ, iw = False, None
    cl, cw = is_closed(L, s.Omega)
    nd = s.Omega.det() != 0
    sym = is_J_symmetric(s.J, s.Omega)
    return VerifyReport(ac, integ, iw, cl, cw, nd, sym)


def complexify(L: LieAlgebra, s: CSStructure):
    """Real and imaginary parts (Re, Im) of the closed (2,0)-form.

    Re = Omega and Im = -J^T Omega, i.e. the form -omega(J., .); requires
    verify_cs to pass.
    """
    rep = verify_cs(L, s)
    if not rep.verdict:
        raise ValueError(f"not a complex symplectic structure: {rep.as_dict()}")
    re = s.Omega
    im = -(s.J.transpose() * s.Omega)
    return re, im


def is_abelian_J(L: LieAlgebra, J: QMat) -> bool:
    """[X, Y] = [JX, JY] on all basis pairs."""
    if not is_almost_complex(J):
        raise NotAlmostComplex("J^2 != -I")
    n = L.dim
    for i in range(n):
        ji = J.apply(unit_vec(n, i))
        for j in range(i + 1, n):
            lhs = L.bracket_basis(i, j)
            rhs = L.bracket(ji, J.apply(unit_vec(n, j)))
            if lhs != rhs:
                return False
    return True


def is_parallelizable_J(L: LieAlgebra, J: QMat) -> bool:
    """J[X, Y] = [JX, Y] on all basis pairs."""
    if not is_almost_complex(J):
        raise NotAlmostComplex("J^2 != -I")
    n = L.dim
    for i in range(n):
        ji = J.apply(unit_vec(n, i))
        for j in range(i + 1, n):
            lhs = J.apply(L.bracket_basis(i, j))
            rhs = L.bracket(ji, unit_vec(n, j))
            if lhs != tuple(rhs):
                return False
    return True


def symplectic_orthogonal(omega: QMat, s: Subspace) -> Subspace:
    """{Y : omega(Y, S) = 0} as an exact kernel."""
    n = omega.rows
    if s.dim == 0:
        return Subspace.full(n)
    rows = [list(omega.apply(b)) for b in s.basis_vectors()]
    # omega(y, b) = -omega(b, y) = -(Omega b) . y; kernel is the same
    return Subspace(n, QMat(rows).kernel_basis())


def j_invariant(J: QMat, s: Subspace) -> bool:
    return all(s.contains(J.apply(b)) for b in s.basis_vectors())


def isotropic(omega: QMat, s: Subspace) -> bool:
    bs = s.basis_vectors()
    return all(
        _omega_vec(omega, bs[i], bs[j]) == 0
        for i in range(len(bs))
        for j in range(i + 1, len(bs))
    )


@dataclass
class AbelianJReport:
    g1_orth_abelian: bool
    g1J_orth_J_invariant: bool
    center_J_invariant: bool
    center_in_g1J_orth: bool
    half_commuting: bool  # J[X,Y] = [X,JY] for X in (g1_J)-perp
    two_step: bool
    g1_isotropic: bool | None
    g1J_isotropic_J_invariant: bool | None
    g1J_in_center_in_orth: bool | None

    @property
    def verdict(self) -> bool:
        core = (
            self.g1_orth_abelian
            and self.g1J_orth_J_invariant
            and self.center_J_invariant
            and self.center_in_g1J_orth
            and self.half_commuting
        )
        if not self.two_step:
            return core
        return core and bool(
            self.g1_isotropic
            and self.g1J_isotropic_J_invariant
            and self.g1J_in_center_in_orth
        )


def abelian_J_report(L: LieAlgebra, s: CSStructure) -> AbelianJReport:
    """Structural consequences of an Abelian J on a verified structure.

    Checks that the symplectic orthogonals of [g,g] and of its
    J-saturation are abelian / J-invariant, that the center is J-invariant
    and inside the latter, and the half-commuting identity; for 2-step
    nilpotent algebras also the isotropy refinements.
    """
    rep = verify_cs(L, s)
    if not rep.verdict:
        raise ValueError("abelian_J_report requires a verified structure")
    if not is_abelian_J(L, s.J):
        raise ValueError("abelian_J_report requires an Abelian J")
    n = L.dim
    g1 = commutator_ideal(L)
    g1j = g1.sum(g1.image_under(s.J))
    g1_orth = symplectic_orthogonal(s.Omega, g1)
    g1j_orth = symplectic_orthogonal(s.Omega, g1j)
    z = center(L)
    from cslie.liecore import bracket_subspaces, lower_central_series

    item1 = bracket_subspaces(L, g1_orth, g1_orth).dim == 0 and (
        bracket_subspaces(L, g1j_orth, g1j_orth).dim == 0
    )
    item2 = j_invariant(s.J, g1j_orth)
    item3a = j_invariant(s.J, z)
    item3b = g1j_orth.contains_subspace(z)
    item4 = True
    for x in g1j_orth.basis_vectors():
        for j in range(n):
            lhs = s.J.apply(L.bracket(x, unit_vec(n, j)))
            rhs = L.bracket(x, s.J.apply(unit_vec(n, j)))
            if tuple(lhs) != tuple(rhs):
                item4 = False
                break
        if not item4:
            break
    lcs = lower_central_series(L)
    two_step = lcs.step == 2
    i5 = i6 = i7 = None
    if two_step:
        i5 = isotropic(s.Omega, g1)
        i6 = isotropic(s.Omega, g1j) and j_invariant(s.J, g1j)
        i7 = z.contains_subspace(g1j) and g1j_orth.contains_subspace(z)
    return AbelianJReport(item1, item2, item3a, item3b, item4, two_step, i5, i6, i7)
