"""Lifts of structure-compatible linear maps, direct sums and semidirect
products.

A map t between accepted inputs lifts when there is a real matrix X between
the ambient spaces intertwining every complex structure (possibly through a
sphere rotation) and compatible with the inclusions (cr), the surjections
(cocr), or both (f).  The intertwining constraint is solved in closed form:
maps commuting with all left multiplications are exactly the sums of
per-factor right multiplications, a 4*k*k' dimensional space with an
explicit basis; a conjugation twist by a unit quaternion a just multiplies
that space by left multiplication with a on the target.  What remains is
one exact linear solve for the basis coefficients.

Uniqueness of lifts for nonzero t is not assumed: the homogeneous solution
dimension is computed and asserted to vanish.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .analysis import CRQInput, FQuaternionicCert, cocr_input, decide, inclusion_matrix, projection_matrices, rho_matrix
from .errors import ContractError, InternalCheckError
from .matrix import QQ, Mat
from .model import left_mult_matrix, right_mult_matrix
from .quaternion import Quat
from .subspace import Subspace


@dataclass(frozen=True)
class Twist:
    """Identification of the two twistor spheres: identity or conjugation
    q -> a q conj(a) by a rational unit quaternion a."""

    kind: str
    quat: Quat | None = None

    def __post_init__(self):
        if self.kind not in ("identity", "conjugation"):
            raise ContractError("twist kind must be 'identity' or 'conjugation'")
        if self.kind == "conjugation":
            if self.quat is None or not self.quat.is_unit():
                raise ContractError("conjugation twist needs a unit quaternion")

    @classmethod
    def identity(cls) -> Twist:
        return cls("identity")

    @classmethod
    def conjugation(cls, a: Quat) -> Twist:
        return cls("conjugation", a)

    def rotate(self, q: Quat) -> Quat:
        if self.kind == "identity":
            return q
        return self.quat * q * self.quat.conj()


IDENTITY_TWIST = Twist.identity()

_QUAT_UNITS = (Quat.ONE, Quat.I, Quat.J, Quat.K)


def quaternionic_map_basis(k_src: int, k_dst: int) -> list[Mat]:
    """Basis of real maps H^{k_src} -> H^{k_dst} commuting with every left
    multiplication: x -> (component s of x) * q placed into component t."""
    out = []
    for s in range(k_src):
        for t in range(k_dst):
            for q in _QUAT_UNITS:
                block = right_mult_matrix(q, 1)
                data = []
                for r in range(4 * k_dst):
                    row = [QQ.zero] * (4 * k_src)
                    if 4 * t <= r < 4 * t + 4:
                        for c in range(4):
                            row[4 * s + c] = block.data[r - 4 * t][c]
                    data.append(tuple(row))
                out.append(Mat(4 * k_dst, 4 * k_src, QQ, tuple(data)))
    return out


def intertwiner_basis(k_src: int, k_dst: int, twist: Twist) -> list[Mat]:
    """Basis of {X : X sigma(q) = sigma'(T q) X for all q}."""
    base = quaternionic_map_basis(k_src, k_dst)
    if twist.kind == "identity":
        return base
    rot = left_mult_matrix(twist.quat, k_dst)
    return [rot @ b for b in base]


def _vec(m: Mat) -> list:
    return [x for row in m.data for x in row]


def _solve_combination(columns: list[Mat], target: Mat):
    """Coefficients c with sum c_m columns[m] = target, plus the dimension
    of the homogeneous solution space; (None, dim) when unsolvable."""
    n = target.rows * target.cols
    a = Mat(n, len(columns), QQ, tuple(zip(*[_vec(c) for c in columns])) if columns else tuple(() for _ in range(n)))
    b = Mat(n, 1, QQ, tuple((x,) for x in _vec(target)))
    hom = len(columns) - a.rank()
    sol = a.solve(b)
    if sol is None:
        return None, hom
    return [sol.data[m][0] for m in range(len(columns))], hom


def _assemble(columns: list[Mat], coeffs, rows: int, cols: int) -> Mat:
    out = Mat.zeros(rows, cols, QQ)
    for c, m in zip(coeffs, columns):
        if c:
            out = out + m.scale(c)
    return out


@dataclass(frozen=True)
class LiftResult:
    matrix: Mat  # the intertwining map between the ambient spaces
    homogeneous_dim: int

    @property
    def unique(self) -> bool:
        return self.homogeneous_dim == 0


def _require_accepted(inp: CRQInput, what: str):
    dec = decide(inp)
    if dec.status != "yes":
        raise ContractError("%s requires accepted inputs (%s)" % (what, dec.status))


def lift_cr_map(t: Mat, src: CRQInput, dst: CRQInput, twist: Twist = IDENTITY_TWIST) -> LiftResult | None:
    """Solve X o incl_src = incl_dst o t over the intertwiner space.

    t is dimU' x dimU in the canonical basis coordinates of the two
    subspaces.  Returns None when no lift exists; for nonzero t a found
    lift is verified unique.
    """
    for inp in (src, dst):
        if inp.role != "cr":
            raise ContractError("lift_cr_map expects cr inputs")
        _require_accepted(inp, "lift_cr_map")
    if (t.rows, t.cols) != (dst.dim_u, src.dim_u):
        raise ContractError("map shape %dx%d != %dx%d" % (t.rows, t.cols, dst.dim_u, src.dim_u))
    basis = intertwiner_basis(src.k, dst.k, twist)
    incl_s = inclusion_matrix(src)
    incl_d = inclusion_matrix(dst)
    coeffs, hom = _solve_combination([b @ incl_s for b in basis], incl_d @ t)
    if coeffs is None:
        return None
    lift = _assemble(basis, coeffs, 4 * dst.k, 4 * src.k)
    if not t.is_zero() and hom != 0:
        raise InternalCheckError("nonzero map with a non-unique lift")
    return LiftResult(lift, hom)


def lift_cocr_map(t: Mat, src: CRQInput, dst: CRQInput, twist: Twist = IDENTITY_TWIST) -> LiftResult | None:
    """Solve rho_dst o X = t o rho_src over the intertwiner space."""
    for inp in (src, dst):
        if inp.role != "cocr":
            raise ContractError("lift_cocr_map expects cocr inputs")
        _require_accepted(inp, "lift_cocr_map")
    if (t.rows, t.cols) != (dst.dim_u, src.dim_u):
        raise ContractError("map shape %dx%d != %dx%d" % (t.rows, t.cols, dst.dim_u, src.dim_u))
    basis = intertwiner_basis(src.k, dst.k, twist)
    rho_s = rho_matrix(src)
    rho_d = rho_matrix(dst)
    coeffs, hom = _solve_combination([rho_d @ b for b in basis], t @ rho_s)
    if coeffs is None:
        return None
    lift = _assemble(basis, coeffs, 4 * dst.k, 4 * src.k)
    if not t.is_zero() and hom != 0:
        raise InternalCheckError("nonzero map with a non-unique lift")
    return LiftResult(lift, hom)


def lift_f_map(t: Mat, src: FQuaternionicCert, dst: FQuaternionicCert, twist: Twist = IDENTITY_TWIST) -> LiftResult | None:
    """Solve both compatibilities at once for certified compatible pairs:
    X o incl_src = incl_dst o t and proj_dst o X = t o proj_src, where the
    projections are the certificate projections along V."""
    if (t.rows, t.cols) != (dst.inp.dim_u, src.inp.dim_u):
        raise ContractError("map shape mismatch")
    basis = intertwiner_basis(src.k, dst.k, twist)
    incl_s = inclusion_matrix(src.inp)
    incl_d = inclusion_matrix(dst.inp)
    proj_s, _ = projection_matrices(src)
    proj_d, _ = projection_matrices(dst)
    cols = [(b @ incl_s).vstack(proj_d @ b) for b in basis]
    target = (incl_d @ t).vstack(t @ proj_s)
    coeffs, hom = _solve_combination(cols, target)
    if coeffs is None:
        return None
    lift = _assemble(basis, coeffs, 4 * dst.k, 4 * src.k)
    if not t.is_zero() and hom != 0:
        raise InternalCheckError("nonzero map with a non-unique lift")
    return LiftResult(lift, hom)


def direct_sum_cocr(a: CRQInput, b: CRQInput) -> CRQInput:
    """Blockwise sum: ambient H^{k_a + k_b}, kernel the product of kernels."""
    for inp in (a, b):
        if inp.role != "cocr":
            raise ContractError("direct_sum_cocr expects cocr inputs")
        _require_accepted(inp, "direct_sum_cocr")
    k = a.k + b.k
    pad_a = 4 * b.k * (QQ.zero,)
    pad_b = 4 * a.k * (QQ.zero,)
    vectors = [tuple(v) + pad_a for v in a.subspace.basis.data]
    vectors += [pad_b + tuple(v) for v in b.subspace.basis.data]
    kernel = Subspace(4 * k, vectors, QQ) if vectors else Subspace.zero(4 * k, QQ)
    return cocr_input(k, kernel)


@dataclass(frozen=True)
class SemidirectData:
    """Co-CR data (U', E', rho') and (U'', E'', rho'') twisted by a linear
    map alpha: E' -> U''.  The assembled surjection on E' x E'' is
    (e', e'') -> (rho' e', alpha e' + rho'' e'')."""

    first: CRQInput
    second: CRQInput
    alpha: Mat

    def __post_init__(self):
        if self.first.role != "cocr" or self.second.role != "cocr":
            raise ContractError("semidirect components must be cocr inputs")
        if (self.alpha.rows, self.alpha.cols) != (self.second.dim_u, 4 * self.first.k):
            raise ContractError(
                "alpha must be %dx%d, got %dx%d"
                % (self.second.dim_u, 4 * self.first.k, self.alpha.rows, self.alpha.cols)
            )


def assembled_rho(data: SemidirectData) -> Mat:
    r1 = rho_matrix(data.first)
    r2 = rho_matrix(data.second)
    top = r1.hstack(Mat.zeros(r1.rows, r2.cols, QQ))
    bottom = data.alpha.hstack(r2)
    return top.vstack(bottom)


def semidirect(data: SemidirectData) -> CRQInput:
    """The assembled cocr input; fails if the assembled map is not onto."""
    _require_accepted(data.first, "semidirect")
    _require_accepted(data.second, "semidirect")
    rho = assembled_rho(data)
    if rho.rank() != rho.rows:
        raise ContractError("assembled surjection is not onto")
    k = data.first.k + data.second.k
    vectors = rho.kernel_vectors()
    kernel = Subspace(4 * k, vectors, QQ) if vectors else Subspace.zero(4 * k, QQ)
    return cocr_input(k, kernel)


def is_direct(data: SemidirectData) -> tuple[bool, Mat | None]:
    """Triviality of the product: does some phi: U' -> U'' make
    alpha + phi o rho' lift through rho''?

    Feasibility of rho'' o Psi - phi o rho' = alpha over (Psi, phi) with
    Psi ranging over the intertwiner space; returns phi on success.
    """
    _require_accepted(data.first, "is_direct")
    _require_accepted(data.second, "is_direct")
    r1 = rho_matrix(data.first)
    r2 = rho_matrix(data.second)
    psi_basis = intertwiner_basis(data.first.k, data.second.k, IDENTITY_TWIST)
    columns = [r2 @ b for b in psi_basis]
    n_u2, n_u1 = data.second.dim_u, data.first.dim_u
    phi_cells = list(product(range(n_u2), range(n_u1)))
    for r, s in phi_cells:
        cell = [[QQ.zero] * r1.cols for _ in range(n_u2)]
        for j in range(r1.cols):
            cell[r][j] = -r1.data[s][j]
        columns.append(Mat(n_u2, r1.cols, QQ, tuple(tuple(row) for row in cell)))
    coeffs, _ = _solve_combination(columns, data.alpha)
    if coeffs is None:
        return False, None
    phi = Mat.zeros(n_u2, n_u1, QQ)
    base = len(psi_basis)
    phi_data = [[QQ.zero] * n_u1 for _ in range(n_u2)]
    for idx, (r, s) in enumerate(phi_cells):
        phi_data[r][s] = coeffs[base + idx]
    phi = Mat(n_u2, n_u1, QQ, tuple(tuple(row) for row in phi_data))
    return True, phi
