"""The standard model H^k and its sphere of complex structures.

Real coordinates on H^k are (x_{m,0}, x_{m,1}, x_{m,2}, x_{m,3}) per factor,
the components along 1, i, j, k.  Left multiplication by a quaternion gives
the algebra morphism into End(R^{4k}); unit imaginary quaternions give the
admissible complex structures.

Sphere coordinates are fixed ONCE, here, by the stereographic convention

    zeta = 0 -> i,   zeta = 1 -> j,   zeta = i -> k,   [1:0] -> -i,

realized by j_from_zeta; every higher module relies on this convention.
Rational points of the sphere are exactly the images of rational zeta.

The eigenframe is the 4k x 2k linear pencil whose column span at each
sphere point is the (-i)-eigenspace of the corresponding complex structure.
It is derived here by an exact three-point fit (the solution space of the
fitting system is forced to have the right dimension) and then validated
against direct eigenspace computations at several sample points, plus an
everywhere-full-rank check.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction

from .gaussian import GI_I, GaussRat
from .matrix import QI, QQ, Mat
from .polymatrix import LinearPencil, full_rank_everywhere
from .quaternion import Quat
from .subspace import Subspace
from .twistor import TwistorPoint

__all__ = [
    "TwistorPoint",
    "AdmissibleJ",
    "left_mult_matrix",
    "right_mult_matrix",
    "j_from_zeta",
    "antipode",
    "eigenframe",
    "eigenspace",
    "complexify",
    "dual_structure",
]


def _left_block(q: Quat):
    w, x, y, z = q.coords()
    return (
        (w, -x, -y, -z),
        (x, w, -z, y),
        (y, z, w, -x),
        (z, -y, x, w),
    )


def _right_block(q: Quat):
    w, x, y, z = q.coords()
    return (
        (w, -x, -y, -z),
        (x, w, z, -y),
        (y, -z, w, x),
        (z, y, -x, w),
    )


def _block_diag(block, k: int) -> Mat:
    n = 4 * k
    zero = Fraction(0)
    data = []
    for m in range(k):
        for r in range(4):
            row = [zero] * n
            for c in range(4):
                row[4 * m + c] = Fraction(block[r][c])
            data.append(tuple(row))
    return Mat(n, n, QQ, tuple(data))


def left_mult_matrix(q: Quat, k: int) -> Mat:
    """4k x 4k matrix of x -> q*x, block diagonal over the k factors."""
    return _block_diag(_left_block(q), k)


def right_mult_matrix(q: Quat, k: int) -> Mat:
    """4k x 4k matrix of x -> x*q; commutes with every left multiplication."""
    return _block_diag(_right_block(q), k)


@dataclass(frozen=True)
class AdmissibleJ:
    """A complex structure of the model: left multiplication by a unit
    imaginary quaternion."""

    q: Quat

    def __post_init__(self):
        if not self.q.is_imaginary() or not self.q.is_unit():
            raise ValueError("admissible structures come from unit imaginary quaternions")

    def matrix(self, k: int) -> Mat:
        return left_mult_matrix(self.q, k)


def j_from_zeta(p: TwistorPoint) -> AdmissibleJ:
    """Stereographic parametrization of the unit imaginary quaternions.

    For affine zeta = a+bi the structure is
    [(1-|zeta|^2) i + 2a j + 2b k] / (1+|zeta|^2); the point at infinity
    maps to -i.  Rational in, rational out, exactly unit.
    """
    if p.is_infinity:
        return AdmissibleJ(-Quat.I)
    a, b = p.zeta.re, p.zeta.im
    n = a * a + b * b
    d = 1 + n
    return AdmissibleJ(Quat(0, (1 - n) / d, 2 * a / d, 2 * b / d))


def antipode(p: TwistorPoint) -> TwistorPoint:
    return p.antipode()


def eigenspace(j: AdmissibleJ, k: int) -> Subspace:
    """(-i)-eigenspace of the complexified structure, a 2k-dim subspace of C^{4k}."""
    m = j.matrix(k).to_gaussian()
    probe = m + Mat.identity(4 * k, QI).scale(GI_I)
    return Subspace(4 * k, probe.kernel_vectors(), QI)


def complexify(s: Subspace) -> Subspace:
    """A real subspace viewed over Q(i); dimension is unchanged and the
    result is closed under conjugation."""
    return s.to_gaussian()


def dual_structure(k: int) -> dict[str, Mat]:
    """Structure matrices on the dual coordinate space.

    The dual of left multiplication by q is the transpose of left
    multiplication by conj(q).  In the self-dual standard coordinates these
    matrices coincide with the primal ones (left multiplication is
    orthogonal), which is what makes the dual model reusable as-is; tests
    verify the defining annihilator/eigenspace duality rather than assume it.
    """
    return {
        "i": left_mult_matrix(Quat.I.conj(), k).transpose(),
        "j": left_mult_matrix(Quat.J.conj(), k).transpose(),
        "k": left_mult_matrix(Quat.K.conj(), k).transpose(),
    }


_frame_lock = threading.Lock()
_frame_cache: dict[int, LinearPencil] = {}

_VALIDATION_ZETAS = (
    GaussRat(0),
    GaussRat(1),
    GaussRat(-1),
    GaussRat(2),
    GaussRat(0, 1),
    GaussRat(1, 1),
)


def _derive_base_frame() -> LinearPencil:
    """Fit the 4x2 pencil for k=1 through the eigenspaces at 0, infinity, 1."""
    e0 = eigenspace(j_from_zeta(TwistorPoint.affine(0)), 1)
    einf = eigenspace(j_from_zeta(TwistorPoint.infinity()), 1)
    e1 = eigenspace(j_from_zeta(TwistorPoint.affine(1)), 1)
    a0 = e0.basis.transpose()
    ainf = einf.basis.transpose()
    stacked = a0.hstack(ainf)  # invertible: the two eigenspaces are transverse
    cond = e1.annihilator().basis @ stacked
    sols = cond.kernel_vectors()
    if len(sols) != 2:
        raise AssertionError("eigenframe fit is not 2-dimensional")
    b_cols = []
    a_cols = []
    for s in sols:
        x, y = s[:2], s[2:]
        b_cols.append(a0.apply(x))
        a_cols.append(ainf.apply(y))
    A = Mat.from_rows(a_cols, QI).transpose()
    B = Mat.from_rows(b_cols, QI).transpose()
    return LinearPencil(A, B)


def _validate_frame(pencil: LinearPencil, k: int):
    for z in _VALIDATION_ZETAS:
        p = TwistorPoint.affine(z)
        span = Subspace(4 * k, pencil.at(p).transpose())
        if span != eigenspace(j_from_zeta(p), k):
            raise AssertionError("eigenframe span mismatch at %r" % (p,))
    inf_span = Subspace(4 * k, pencil.at(TwistorPoint.infinity()).transpose())
    if inf_span != eigenspace(j_from_zeta(TwistorPoint.infinity()), k):
        raise AssertionError("eigenframe span mismatch at infinity")
    if not full_rank_everywhere(pencil, 2 * k):
        raise AssertionError("eigenframe columns degenerate somewhere")


def eigenframe(k: int) -> LinearPencil:
    """The 4k x 2k pencil of (-i)-eigenspace frames, memoized per k."""
    with _frame_lock:
        cached = _frame_cache.get(k)
    if cached is not None:
        return cached
    if k == 0:
        pencil = LinearPencil(Mat.zeros(0, 0, QI), Mat.zeros(0, 0, QI))
    else:
        base = _frame_cache.get(1)
        if base is None:
            base = _derive_base_frame()
            _validate_frame(base, 1)
        pencil = base
        for _ in range(k - 1):
            pencil = pencil.block_diag(base)
        _validate_frame(pencil, k)
    with _frame_lock:
        _frame_cache.setdefault(k, pencil)
        if k >= 1:
            _frame_cache.setdefault(1, base if k > 1 else pencil)
    return _frame_cache[k]
