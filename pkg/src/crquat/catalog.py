"""Named example inputs.

Catalog names (fixed CLI vocabulary):

  u_k        index m: orthocomplement in H^{m+1} of R^{m+1} + sum R*e_j,
             where e_j places two consecutive sphere points q_j, q_{j+1} in
             factors j, j+1 and q_t = j_from_zeta(t-1) at zeta = 0, 1, 2, ...
             Dimension 2m+3; index 0 is the imaginary quaternions in H.
  uprime_k   index m: orthocomplement in H^{2m+1} of the 4m-dimensional
             space of tuples (z_1, conj z_1 + z_2 j, z_3 - conj z_2 j, ...,
             conj z_{2m-1} + z_{2m} j, -conj z_{2m} j) over complex z_t.
             Dimension 4m+4; index 0 is all of H.
  f_model    (l, k): (Im H)^l x H^{k-l} inside H^k, the model compatible
             pair; its distinguished complement is R^l x 0.
  ex351      orthocomplement of R^2 + R(i,j) in H^2 (dimension 5).
  ex352      orthocomplement of R^3 + R(i,j,k) in H^3 (dimension 8).

Orthocomplements use the standard Euclidean form on R^{4k}.
"""

from __future__ import annotations

from fractions import Fraction

from .analysis import CRQInput, cr_input
from .errors import ContractError
from .matrix import QQ, Mat
from .model import j_from_zeta
from .quaternion import Quat
from .subspace import Subspace
from .twistor import TwistorPoint

CATALOG_NAMES = ("u_k", "uprime_k", "f_model", "ex351", "ex352")


def embed_quat(q: Quat, factor: int, k: int) -> tuple[Fraction, ...]:
    """Coordinates of q placed in the given H-factor of H^k."""
    v = [Fraction(0)] * (4 * k)
    v[4 * factor : 4 * factor + 4] = list(q.coords())
    return tuple(v)


def orthocomplement(vectors, ambient_dim: int) -> Subspace:
    m = Mat.from_rows(vectors, QQ)
    return Subspace(ambient_dim, m.kernel_vectors(), QQ)


def sphere_points(count: int) -> list[Quat]:
    """q_1, q_2, ...: distinct pairwise non-antipodal rational unit imaginary
    quaternions, the images of zeta = 0, 1, 2, ..."""
    return [j_from_zeta(TwistorPoint.affine(t)).q for t in range(count)]


def _u_atom(index: int) -> CRQInput:
    if index < 0:
        raise ContractError("u_k index must be nonnegative")
    k = index + 1
    qs = sphere_points(index + 1)
    rows = [embed_quat(Quat.ONE, t, k) for t in range(k)]
    for j in range(index):
        a = embed_quat(qs[j], j, k)
        b = embed_quat(qs[j + 1], j + 1, k)
        rows.append(tuple(x + y for x, y in zip(a, b)))
    u = orthocomplement(rows, 4 * k)
    assert u.dim == 2 * index + 3
    return cr_input(k, u)


def _uprime_atom(index: int) -> CRQInput:
    if index < 0:
        raise ContractError("uprime_k index must be nonnegative")
    k = 2 * index + 1
    rows = []
    for t in range(1, 2 * index + 1):  # complex parameter z_t
        for part in (Quat.ONE, Quat.I):
            z = part
            zbar = z.conj()
            v = [Fraction(0)] * (4 * k)

            def add(component: int, q: Quat):
                for c in range(4):
                    v[4 * component + c] += q.coords()[c]

            if t == 1:
                add(0, z)
                add(1, zbar)
            elif t % 2 == 0:
                s = t // 2
                add(2 * s - 1, z * Quat.J)
                add(2 * s, -(zbar * Quat.J))
            else:
                s = (t - 1) // 2
                add(2 * s, z)
                add(2 * s + 1, zbar)
            rows.append(tuple(v))
    if not rows:
        return cr_input(1, Subspace.full(4, QQ))
    u = orthocomplement(rows, 4 * k)
    assert u.dim == 4 * index + 4
    return cr_input(k, u)


def f_model_subspace(l: int, k: int) -> Subspace:
    rows = []
    for t in range(l):
        for q in (Quat.I, Quat.J, Quat.K):
            rows.append(embed_quat(q, t, k))
    for t in range(l, k):
        for q in (Quat.ONE, Quat.I, Quat.J, Quat.K):
            rows.append(embed_quat(q, t, k))
    if not rows:
        return Subspace.zero(4 * k, QQ)
    return Subspace(4 * k, rows, QQ)


def f_model_complement(l: int, k: int) -> Subspace:
    """The distinguished complement R^l x 0 of the model subspace."""
    rows = [embed_quat(Quat.ONE, t, k) for t in range(l)]
    if not rows:
        return Subspace.zero(4 * k, QQ)
    return Subspace(4 * k, rows, QQ)


def _f_model(l: int, k: int) -> CRQInput:
    if not (0 <= l <= k):
        raise ContractError("f_model needs 0 <= l <= k")
    return cr_input(k, f_model_subspace(l, k))


def _ex351() -> CRQInput:
    rows = [
        embed_quat(Quat.ONE, 0, 2),
        embed_quat(Quat.ONE, 1, 2),
        tuple(x + y for x, y in zip(embed_quat(Quat.I, 0, 2), embed_quat(Quat.J, 1, 2))),
    ]
    u = orthocomplement(rows, 8)
    assert u.dim == 5
    return cr_input(2, u)


def _ex352() -> CRQInput:
    rows = [embed_quat(Quat.ONE, t, 3) for t in range(3)]
    cross = [embed_quat(Quat.I, 0, 3), embed_quat(Quat.J, 1, 3), embed_quat(Quat.K, 2, 3)]
    rows.append(tuple(a + b + c for a, b, c in zip(*cross)))
    u = orthocomplement(rows, 12)
    assert u.dim == 8
    return cr_input(3, u)


def named_example(name: str, **params) -> CRQInput:
    """Construct a catalog input; unknown names raise ContractError."""
    if name == "u_k":
        return _u_atom(int(params["index"]))
    if name == "uprime_k":
        return _uprime_atom(int(params["index"]))
    if name == "f_model":
        return _f_model(int(params["l"]), int(params["k"]))
    if name == "ex351":
        return _ex351()
    if name == "ex352":
        return _ex352()
    raise ContractError("unknown example name %r (have: %s)" % (name, ", ".join(CATALOG_NAMES)))
