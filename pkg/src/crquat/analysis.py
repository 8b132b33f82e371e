"""Decision procedures and classification for quaternionic subspace data.

An input is a real subspace of H^k in one of two roles:

  cr    the subspace U itself, with the inclusion map; accepted when
        U + J(U) = H^k for every admissible complex structure J,
  cocr  the kernel of a surjection rho: H^k -> U, given by that kernel
        and the target dimension; accepted when ker rho meets J(ker rho)
        only in 0 for every J.

Both quantifiers over the sphere reduce to an everywhere-full-rank test of
an explicit column family over CP^1 (constant columns from the subspace,
pencil columns from the eigenframe), decided exactly in polymatrix.

Accepted co-CR data is classified by its splitting type: the multiset of
line-bundle degrees of the associated holomorphic bundle.  The degrees are
recovered from the dimension sequence

    d_p = dim_C of the intersection of rho(E^{J_1}), ..., rho(E^{J_p})

over p distinct sphere points, which counts sections vanishing at p points;
second differences of d_p give the multiplicity of each degree.  CR data is
classified through its dual co-CR data with degrees negated, and the
resulting multiset is decomposed into the two families of atomic summands
(tags "U_m" of dimension 2m+3 and "U'_m" of dimension 4m+4).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import ContractError, InternalCheckError, WitnessBudgetError
from .gaussian import GaussRat
from .matrix import QI, QQ, Mat, dot
from .model import eigenframe, j_from_zeta, left_mult_matrix
from .polymatrix import ProjMat, full_rank_everywhere
from .quaternion import Quat
from .subspace import Subspace, intersect_many, sum_many
from .twistor import TwistorPoint


@dataclass(frozen=True)
class CRQInput:
    """k, a role tag, the defining real subspace, and dim U.

    For role "cr" the subspace is U itself (target_dim = dim U); for role
    "cocr" it is ker rho and target_dim = 4k - dim ker (rho is surjective).
    """

    k: int
    role: str
    subspace: Subspace
    target_dim: int

    def __post_init__(self):
        if self.role not in ("cr", "cocr"):
            raise ContractError("role must be 'cr' or 'cocr', got %r" % (self.role,))
        if self.k < 0:
            raise ContractError("k must be nonnegative")
        if self.subspace.ambient_dim != 4 * self.k:
            raise ContractError(
                "ambient dimension %d != 4k = %d" % (self.subspace.ambient_dim, 4 * self.k)
            )
        if self.subspace.domain is not QQ:
            raise ContractError("defining subspace must be real")
        expected = self.subspace.dim if self.role == "cr" else 4 * self.k - self.subspace.dim
        if self.target_dim != expected:
            raise ContractError(
                "target dimension %d inconsistent with the defining subspace (expected %d)"
                % (self.target_dim, expected)
            )

    @property
    def l(self) -> int:
        """Codimension of U (cr) = kernel dimension of rho (cocr)."""
        return 4 * self.k - self.target_dim

    @property
    def dim_u(self) -> int:
        return self.target_dim


def cr_input(k: int, subspace: Subspace) -> CRQInput:
    return CRQInput(k, "cr", subspace, subspace.dim)


def cocr_input(k: int, kernel: Subspace, target_dim: int | None = None) -> CRQInput:
    expected = 4 * k - kernel.dim
    if target_dim is not None and target_dim != expected:
        raise ContractError("target dimension %d != 4k - dim ker = %d" % (target_dim, expected))
    return CRQInput(k, "cocr", kernel, expected)


def dualize(inp: CRQInput) -> CRQInput:
    """Annihilate the defining subspace and swap the role; an involution."""
    ann = inp.subspace.annihilator()
    if inp.role == "cr":
        return CRQInput(inp.k, "cocr", ann, inp.target_dim)
    return CRQInput(inp.k, "cr", ann, inp.target_dim)


@dataclass(frozen=True)
class Decision:
    status: str  # "yes" | "no" | "impossible"
    witness: TwistorPoint | None = None
    reason: str = ""

    def __bool__(self):
        return self.status == "yes"


def rho_matrix(inp: CRQInput) -> Mat:
    """Canonical matrix of the surjection rho for a cocr input.

    Rows are the RREF basis of the annihilator of ker rho, so the matrix is
    reproducible, has full row rank dim U, and its kernel is exactly ker rho.
    """
    if inp.role != "cocr":
        raise ContractError("rho matrix exists only for cocr inputs")
    return inp.subspace.annihilator().basis


def inclusion_matrix(inp: CRQInput) -> Mat:
    """4k x dimU matrix of the inclusion (columns = canonical basis of U)."""
    if inp.role != "cr":
        raise ContractError("inclusion matrix exists only for cr inputs")
    return inp.subspace.basis.transpose()


@lru_cache(maxsize=None)
def is_cr_quaternionic(inp: CRQInput) -> Decision:
    """U + J(U) = H^k for every J, decided over the whole sphere at once."""
    if inp.role != "cr":
        raise ContractError("is_cr_quaternionic expects a cr input")
    k = inp.k
    if inp.dim_u <= 2 * k:
        return Decision("impossible", reason="dim U = %d must exceed 2k = %d" % (inp.dim_u, 2 * k))
    family = ProjMat.from_blocks(inclusion_matrix(inp).to_gaussian(), eigenframe(k))
    res = full_rank_everywhere(family, 4 * k)
    if res.ok:
        return Decision("yes")
    return Decision("no", witness=res.witness)


@lru_cache(maxsize=None)
def is_cocr_quaternionic(inp: CRQInput) -> Decision:
    """ker rho meets J(ker rho) trivially for every J."""
    if inp.role != "cocr":
        raise ContractError("is_cocr_quaternionic expects a cocr input")
    k, l = inp.k, inp.l
    if l >= 2 * k and not (l == 0 and k == 0):
        return Decision("impossible", reason="dim ker rho = %d must be below 2k = %d" % (l, 2 * k))
    kernel_cols = inp.subspace.to_gaussian().basis.transpose()
    family = ProjMat.from_blocks(kernel_cols, eigenframe(k))
    res = full_rank_everywhere(family, l + 2 * k)
    if res.ok:
        return Decision("yes")
    return Decision("no", witness=res.witness)


def decide(inp: CRQInput) -> Decision:
    return is_cr_quaternionic(inp) if inp.role == "cr" else is_cocr_quaternionic(inp)


class SplittingType:
    """Multiset of line-bundle degrees with multiplicities, kept sorted."""

    __slots__ = ("summands",)

    def __init__(self, pairs):
        merged: dict[int, int] = {}
        for deg, mult in pairs:
            if mult < 0:
                raise ValueError("negative multiplicity")
            if mult:
                merged[int(deg)] = merged.get(int(deg), 0) + int(mult)
        object.__setattr__(self, "summands", tuple(sorted(merged.items())))

    def __setattr__(self, name, value):
        raise AttributeError("SplittingType is immutable")

    def __eq__(self, other):
        if not isinstance(other, SplittingType):
            return NotImplemented
        return self.summands == other.summands

    def __hash__(self):
        return hash(self.summands)

    def __iter__(self):
        return iter(self.summands)

    @property
    def rank(self) -> int:
        return sum(m for _, m in self.summands)

    @property
    def total_degree(self) -> int:
        return sum(d * m for d, m in self.summands)

    def negate(self) -> SplittingType:
        return SplittingType((-d, m) for d, m in self.summands)

    def union(self, other: SplittingType) -> SplittingType:
        return SplittingType(list(self.summands) + list(other.summands))

    def __repr__(self):
        if not self.summands:
            return "SplittingType(0)"
        return "SplittingType(%s)" % " + ".join(
            ("O(%d)" % d if m == 1 else "%dO(%d)" % (m, d)) for d, m in self.summands
        )


def _require(cond: bool, message: str):
    if not cond:
        raise InternalCheckError(message)


def default_evaluation_zetas(l: int) -> list[GaussRat]:
    return [GaussRat(m) for m in range(l + 2)]


def splitting_type_cocr(inp: CRQInput, zetas=None) -> SplittingType:
    """Degrees and multiplicities of the bundle of an accepted cocr input.

    d_p is computed by intersecting the images rho(E^J) at p distinct
    rational points (any distinct points give the same dimensions; the
    default is 0, 1, ..., l+1).  a_p = (d_p - d_{p+1}) - (d_{p+1} - d_{p+2}).
    """
    dec = is_cocr_quaternionic(inp)
    if dec.status != "yes":
        raise ContractError("splitting type requires an accepted cocr input (%s)" % dec.status)
    k, l, n = inp.k, inp.l, inp.dim_u
    zetas = default_evaluation_zetas(l) if zetas is None else [GaussRat(z) if not isinstance(z, GaussRat) else z for z in zetas]
    if len(zetas) < l + 2 or len(set((z.re, z.im) for z in zetas)) != len(zetas):
        raise ContractError("need at least l+2 distinct evaluation points")
    frame = eigenframe(k)
    rho = rho_matrix(inp).to_gaussian()
    d = [n]
    acc = Subspace.full(n, QI)
    for p in range(l + 2):
        image = Subspace(n, (rho @ frame.at(TwistorPoint.affine(zetas[p]))).transpose())
        acc = acc.intersect(image)
        d.append(acc.dim)
    _require(d[l + 2] == 0, "d_{l+2} = %d, expected 0" % d[l + 2])
    d.append(0)
    for p in range(l + 2):
        _require(d[p] - d[p + 1] >= d[p + 1] - d[p + 2], "d_p sequence is not convex")
    mult = {}
    for p in range(1, l + 2):
        a = (d[p] - d[p + 1]) - (d[p + 1] - d[p + 2])
        _require(a >= 0, "negative multiplicity a_%d" % p)
        if a:
            mult[p] = a
    st = SplittingType(mult.items())
    _require(st.rank == 2 * k - l, "sum of multiplicities %d != 2k-l = %d" % (st.rank, 2 * k - l))
    _require(st.total_degree == 2 * k, "total degree %d != 2k = %d" % (st.total_degree, 2 * k))
    for deg, m in st:
        _require(deg % 2 == 0 or m % 2 == 0, "odd degree %d with odd multiplicity %d" % (deg, m))
    return st


def splitting_type_cr(inp: CRQInput, zetas=None) -> SplittingType:
    """Splitting of a cr input: dualize, classify, negate the degrees."""
    dec = is_cr_quaternionic(inp)
    if dec.status != "yes":
        raise ContractError("splitting type requires an accepted cr input (%s)" % dec.status)
    return splitting_type_cocr(dualize(inp), zetas).negate()


ATOM_U = "U"
ATOM_UPRIME = "U'"


def atom_dimension(kind: str, index: int) -> int:
    return 2 * index + 3 if kind == ATOM_U else 4 * index + 4


def atom_quaternionic_size(kind: str, index: int) -> int:
    """Number of H-factors the atom's ambient space contributes."""
    return index + 1 if kind == ATOM_U else 2 * index + 1


def atom_filtration_size(kind: str, index: int) -> int:
    """Smallest n with the atom inside the n-th canonical filtration step."""
    return 2 * index + 2 if kind == ATOM_U else 2 * index + 1


@dataclass(frozen=True)
class CRDecomposition:
    tags: tuple[tuple[str, int, int], ...]  # (kind, index, count), sorted
    filtration_dims: tuple[int, ...]  # dim W_n for n = 1..max step

    def tag_multiset(self) -> dict[tuple[str, int], int]:
        return {(kind, idx): count for kind, idx, count in self.tags}

    def __repr__(self):
        body = ", ".join(
            "%s_%d x%d" % (kind, idx, count) for kind, idx, count in self.tags
        )
        return "CRDecomposition({%s})" % body


def decompose_cr(inp: CRQInput) -> CRDecomposition:
    """Unique decomposition of an accepted cr input into atomic summands.

    Each even degree -2m in the splitting contributes one U_{m-1}; each
    PAIR of odd degrees -(2m+1) contributes one U'_m.  Dimension counts and
    the first two filtration steps are cross-checked against the subspaces
    computed directly from U.
    """
    st = splitting_type_cr(inp)
    tags: dict[tuple[str, int], int] = {}
    for deg, mult in st:
        d = -deg
        _require(d >= 1, "cr splitting degree %d is not negative" % deg)
        if d % 2 == 0:
            tags[(ATOM_U, d // 2 - 1)] = tags.get((ATOM_U, d // 2 - 1), 0) + mult
        else:
            _require(mult % 2 == 0, "odd degree %d appears with odd multiplicity" % deg)
            if mult:
                tags[(ATOM_UPRIME, (d - 1) // 2)] = tags.get((ATOM_UPRIME, (d - 1) // 2), 0) + mult // 2
    total_dim = sum(atom_dimension(kind, idx) * c for (kind, idx), c in tags.items())
    total_k = sum(atom_quaternionic_size(kind, idx) * c for (kind, idx), c in tags.items())
    _require(total_dim == inp.dim_u, "tag dimensions sum to %d != dim U = %d" % (total_dim, inp.dim_u))
    _require(total_k == inp.k, "tag ambient sizes sum to %d != k = %d" % (total_k, inp.k))
    n_max = max((atom_filtration_size(kind, idx) for (kind, idx) in tags), default=0)
    dims = []
    for n in range(1, n_max + 1):
        dims.append(
            sum(
                atom_dimension(kind, idx) * c
                for (kind, idx), c in tags.items()
                if atom_filtration_size(kind, idx) <= n
            )
        )
    w1 = filtration_w1(inp)
    w2 = filtration_w2(inp)
    dim_w1 = dims[0] if dims else 0
    dim_w2 = dims[1] if len(dims) > 1 else dim_w1
    _require(w1.dim == dim_w1, "filtration W_1: subspace dim %d != tag dim %d" % (w1.dim, dim_w1))
    _require(w2.dim == dim_w2, "filtration W_2: subspace dim %d != tag dim %d" % (w2.dim, dim_w2))
    ordered = tuple(sorted((kind, idx, count) for (kind, idx), count in tags.items()))
    return CRDecomposition(ordered, tuple(dims))


def _j_images(s: Subspace, k: int) -> list[Subspace]:
    return [s.image_under(left_mult_matrix(q, k)) for q in (Quat.I, Quat.J, Quat.K)]


def imaginary_core(s: Subspace, k: int) -> Subspace:
    """iS ^ jS ^ kS; equals the intersection over the whole sphere of unit
    imaginary structures (rotation cross-checks live in the tests)."""
    return intersect_many(_j_images(s, k))


def filtration_w1(inp: CRQInput) -> Subspace:
    """U ^ iU ^ jU ^ kU: the largest quaternionic subspace inside U."""
    if inp.role != "cr":
        raise ContractError("filtrations are computed for cr inputs")
    u = inp.subspace
    w1 = u.intersect(imaginary_core(u, inp.k))
    for q in (Quat.I, Quat.J, Quat.K):
        _require(w1.image_under(left_mult_matrix(q, inp.k)) == w1, "W_1 is not quaternionic")
    return w1


def filtration_w2(inp: CRQInput) -> Subspace:
    """U ^ (core + i core + j core + k core) with core = iU ^ jU ^ kU."""
    if inp.role != "cr":
        raise ContractError("filtrations are computed for cr inputs")
    u = inp.subspace
    core = imaginary_core(u, inp.k)
    spanned = quaternionic_span(core, inp.k)
    w2 = u.intersect(spanned)
    _require(u.contains(w2) and w2.contains(filtration_w1(inp)), "W_1 <= W_2 <= U violated")
    return w2


def quaternionic_span(s: Subspace, k: int) -> Subspace:
    """Smallest quaternionic subspace containing s: s + is + js + ks."""
    return sum_many([s] + _j_images(s, k))


def e_lower(s: Subspace, k: int) -> Subspace:
    """Quaternionic span of iS ^ jS ^ kS (a quaternionic subspace)."""
    return quaternionic_span(imaginary_core(s, k), k)


def e_upper(s: Subspace, k: int) -> Subspace:
    """Intersection of I(iS + jS + kS) over I in {1, i, j, k}."""
    outer = sum_many(_j_images(s, k))
    return outer.intersect(imaginary_core(outer, k))


def e_lower_of_input(inp: CRQInput) -> Subspace:
    return e_lower(inp.subspace, inp.k)


def e_upper_of_input(inp: CRQInput) -> Subspace:
    return e_upper(inp.subspace, inp.k)


@dataclass(frozen=True)
class FQuaternionicCert:
    """Certificate that (U, H^k, V) is f-quaternionic.

    V is the deterministic complement of W_1 inside iU ^ jU ^ kU; W is the
    largest quaternionic subspace inside U; QV is iV + jV + kV.
    """

    inp: CRQInput
    V: Subspace
    W: Subspace
    QV: Subspace

    @property
    def k(self) -> int:
        return self.inp.k

    @property
    def l(self) -> int:
        return self.inp.l


def f_detect(inp: CRQInput) -> FQuaternionicCert | None:
    """Certificate construction when one exists, else None.

    Existence is equivalent to e_lower(U) being all of H^k; the complement
    V of U then comes out of the imaginary core with the fixed tie-break.
    On the None branch the strict inequality l > k - k' is asserted, where
    4k' = dim W_1.
    """
    dec = is_cr_quaternionic(inp)
    if dec.status != "yes":
        raise ContractError("f_detect requires an accepted cr input (%s)" % dec.status)
    k, l = inp.k, inp.l
    u = inp.subspace
    core = imaginary_core(u, k)
    w1 = u.intersect(core)
    if e_lower(u, k) != Subspace.full(4 * k, QQ):
        _require(w1.dim % 4 == 0, "W_1 dimension is not a multiple of 4")
        k_prime = w1.dim // 4
        _require(l > k - k_prime, "no certificate but l <= k - k'")
        return None
    v = w1.complement_in(core)
    qv = sum_many([v.image_under(left_mult_matrix(q, k)) for q in (Quat.I, Quat.J, Quat.K)])
    _require(v.dim == l, "dim V = %d != l = %d" % (v.dim, l))
    _require(core.dim == 4 * k - 3 * l, "imaginary core dim %d != 4k-3l = %d" % (core.dim, 4 * k - 3 * l))
    _require(w1.dim == 4 * (k - l), "dim W = %d != 4(k-l) = %d" % (w1.dim, 4 * (k - l)))
    _require(qv.dim == 3 * v.dim, "QV is not the direct sum of iV, jV, kV")
    _require(qv.intersect(w1).dim == 0 and qv.sum(w1) == u, "U != QV + W")
    _require(u.intersect(v).dim == 0 and u.sum(v) == Subspace.full(4 * k, QQ), "H^k != U + V")
    return FQuaternionicCert(inp, v, w1, qv)


def projection_matrices(cert: FQuaternionicCert) -> tuple[Mat, Mat]:
    """(coords, proj): coords maps ambient points to U-basis coordinates along
    V; proj = B_U^T coords reprojects onto U inside the ambient space."""
    bu = cert.inp.subspace.basis.transpose()
    bv = cert.V.basis.transpose()
    full = bu.hstack(bv)
    inv = full.solve(Mat.identity(4 * cert.k, QQ))
    _require(inv is not None, "U + V does not span the ambient space")
    coords = inv.take_rows(range(cert.inp.dim_u))
    return coords, bu @ coords


def induced_f_structure(cert: FQuaternionicCert, p: TwistorPoint) -> Mat:
    """F = rho o J o incl on U-coordinates; satisfies F^3 + F = 0 and
    ker F = J(V)."""
    k = cert.k
    jmat = j_from_zeta(p).matrix(k)
    coords, _ = projection_matrices(cert)
    bu = cert.inp.subspace.basis.transpose()
    f = coords @ jmat @ bu
    n = cert.inp.dim_u
    _require((f @ f @ f + f).is_zero(), "F^3 + F != 0")
    jv_coords = Subspace(n, (coords @ jmat @ cert.V.basis.transpose()).transpose())
    kernel = Subspace(n, Mat.from_rows(f.kernel_vectors(), QQ) if f.kernel_vectors() else Mat.zeros(0, n, QQ))
    _require(kernel == jv_coords, "ker F != J(V)")
    return f


def induced_cr_cocr(cert: FQuaternionicCert, p: TwistorPoint):
    """(C, D, ker) over Q(i) in U-coordinates for the structure at p."""
    k, n = cert.k, cert.inp.dim_u
    frame = eigenframe(k)
    coords, _ = projection_matrices(cert)
    coords_c = coords.to_gaussian()
    ej = Subspace(4 * k, frame.at(p).transpose())
    uc = cert.inp.subspace.to_gaussian()
    c = uc.intersect(ej).image_under(coords_c)
    d = Subspace(n, (coords_c @ frame.at(p)).transpose())
    f = induced_f_structure(cert, p).to_gaussian()
    ker = Subspace(n, Mat.from_rows(f.kernel_vectors(), QI) if f.kernel_vectors() else Mat.zeros(0, n, QI))
    return c, d, ker


def cocr_images_triple_test(inp: CRQInput) -> bool:
    """Intersection of the rho-images at the three structures i, j, k."""
    dec = is_cocr_quaternionic(inp)
    if dec.status != "yes":
        raise ContractError("triple test requires an accepted cocr input (%s)" % dec.status)
    frame = eigenframe(inp.k)
    rho = rho_matrix(inp).to_gaussian()
    images = [
        Subspace(inp.dim_u, (rho @ frame.at(TwistorPoint.affine(z))).transpose())
        for z in (GaussRat(0), GaussRat(1), GaussRat(0, 1))
    ]
    return intersect_many(images).dim == 0


def twistor_grid(budget: int):
    """Deterministic sequence of sphere points: 0, [1:0], then Gaussian
    rationals of increasing height."""
    from .polynomial import _grid_candidates

    count = 0
    yield TwistorPoint.affine(0)
    count += 1
    if count >= budget:
        return
    yield TwistorPoint.infinity()
    count += 1
    for z in _grid_candidates(64):
        if not z:
            continue
        if count >= budget:
            return
        yield TwistorPoint.affine(z)
        count += 1


def full_witness(inp: CRQInput, alpha, budget: int = 200):
    """A structure J and u, v in U ^ J(U) with alpha(u) > 0 > alpha(v).

    alpha is a nonzero functional given by its 4k ambient coefficients and
    must not vanish on U.  The sphere is scanned over a deterministic
    expanding grid; exhausting the budget raises WitnessBudgetError (a
    witness always exists, so this signals "budget too small").
    """
    dec = is_cr_quaternionic(inp)
    if dec.status != "yes":
        raise ContractError("full_witness requires an accepted cr input (%s)" % dec.status)
    alpha = tuple(Fraction(a) for a in alpha)
    if len(alpha) != 4 * inp.k:
        raise ContractError("alpha must have 4k coefficients")
    u = inp.subspace
    if all(not dot(alpha, b) for b in u.basis.data):
        raise ContractError("alpha vanishes on U")
    attempts = 0
    for p in twistor_grid(budget):
        attempts += 1
        ju = u.image_under(j_from_zeta(p).matrix(inp.k))
        meet = u.intersect(ju)
        for b in meet.basis.data:
            val = dot(alpha, b)
            if val:
                pos = b if val > 0 else tuple(-x for x in b)
                neg = tuple(-x for x in pos)
                assert dot(alpha, pos) * dot(alpha, neg) < 0
                return p, pos, neg
    raise WitnessBudgetError(attempts)


def enumerate_splitting_types(k: int, l: int) -> list[SplittingType]:
    """All degree multisets allowed for co-CR data with the given (k, l):
    nonnegative a_1..a_{l+1} with sum 2k-l, weighted sum 2k, and even a_j
    for odd j."""
    if not (0 <= l <= max(2 * k - 1, 0)):
        raise ContractError("need 0 <= l <= 2k-1")
    out: list[SplittingType] = []

    def rec(j: int, rank_left: int, deg_left: int, acc: list):
        if j > l + 1:
            if rank_left == 0 and deg_left == 0:
                out.append(SplittingType(acc))
            return
        top = min(rank_left, deg_left // j)
        for a in range(top + 1):
            if j % 2 == 1 and a % 2 == 1:
                continue
            rec(j + 1, rank_left - a, deg_left - j * a, acc + ([(j, a)] if a else []))

    rec(1, 2 * k - l, 2 * k, [])
    out.sort(key=lambda st: st.summands)
    _require(bool(out) or k == 0, "no splitting type satisfies the constraints")
    return out
