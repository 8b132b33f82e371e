"""Polynomial matrices over Q(i) and the everywhere-full-rank decision.

The decision procedure answers: does a matrix family over the projective
line have a prescribed rank at *every* point?  Families are either linear
pencils z0*A + z1*B or mixed-degree column families (constant columns next
to pencil columns).  The test is exact:

  1. the rank over the rational-function field (the number of Smith
     invariant factors of the affine-chart matrix) must equal the target,
  2. every invariant factor must be constant (no affine rank drop),
  3. the rank at [1:0], evaluated in the second chart, must equal the
     target (the affine chart misses exactly that point).

Rank-drop witnesses are exact points: roots in Q(i) of the last invariant
factor, or [1:0].  A drop locus with no Q(i)-rational point yields decision
False with witness None.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gaussian import GaussRat
from .matrix import QI, Mat
from .polynomial import P_ONE, Poly, gauss_roots, poly_gcd
from .twistor import TwistorPoint


class PolyMat:
    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries):
        entries = tuple(tuple(e if isinstance(e, Poly) else Poly.constant(e) for e in row) for row in entries)
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "rows", len(entries))
        object.__setattr__(self, "cols", len(entries[0]) if entries else 0)
        if any(len(r) != self.cols for r in entries):
            raise ValueError("ragged polynomial matrix")

    def __setattr__(self, name, value):
        raise AttributeError("PolyMat is immutable")

    @classmethod
    def from_const(cls, m: Mat) -> PolyMat:
        g = m.to_gaussian()
        return cls(tuple(tuple(Poly.constant(x) for x in row) for row in g.data))

    def eval_at(self, z: GaussRat) -> Mat:
        return Mat(self.rows, self.cols, QI, tuple(tuple(e.eval(z) for e in row) for row in self.entries))

    def take_columns(self, idxs) -> PolyMat:
        return PolyMat(tuple(tuple(row[j] for j in idxs) for row in self.entries))

    def hstack(self, other: PolyMat) -> PolyMat:
        if self.rows != other.rows:
            raise ValueError("row count mismatch")
        return PolyMat(tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __eq__(self, other):
        if not isinstance(other, PolyMat):
            return NotImplemented
        return self.entries == other.entries

    def __repr__(self):
        return "PolyMat(%dx%d)" % (self.rows, self.cols)


def smith_form(m: PolyMat) -> list[Poly]:
    """Monic invariant factors d_1 | d_2 | ... | d_r over Q(i)[z].

    Deterministic: the pivot is always a nonzero entry of minimal degree
    (ties broken by position), remainders swap into the pivot so its degree
    strictly decreases, and a final pass restores the divisibility chain.
    """
    a = [[e for e in row] for row in m.entries]
    R, C = m.rows, m.cols
    t = 0
    factors: list[Poly] = []
    while t < min(R, C):
        piv = None
        best = None
        for i in range(t, R):
            for j in range(t, C):
                e = a[i][j]
                if e and (best is None or e.degree < best):
                    best = e.degree
                    piv = (i, j)
        if piv is None:
            break
        i0, j0 = piv
        if i0 != t:
            a[t], a[i0] = a[i0], a[t]
        if j0 != t:
            for row in a:
                row[t], row[j0] = row[j0], row[t]
        while True:
            changed = False
            for i in range(t + 1, R):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    if q:
                        for j in range(t, C):
                            a[i][j] = a[i][j] - q * a[t][j]
                    if a[i][t]:
                        a[t], a[i] = a[i], a[t]
                        changed = True
            if changed:
                continue
            for j in range(t + 1, C):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    if q:
                        for i in range(t, R):
                            a[i][j] = a[i][j] - q * a[i][t]
                    if a[t][j]:
                        for row in a:
                            row[t], row[j] = row[j], row[t]
                        changed = True
            if changed:
                continue
            # pivot must divide the whole trailing block for the chain to hold
            offender = None
            p = a[t][t]
            for i in range(t + 1, R):
                for j in range(t + 1, C):
                    if a[i][j] % p:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            for j in range(t, C):
                a[t][j] = a[t][j] + a[offender][j]
        factors.append(a[t][t].monic())
        t += 1
    return factors


@dataclass(frozen=True)
class LinearPencil:
    """M(z0, z1) = z0*A + z1*B with A, B over Q(i) of equal shape."""

    A: Mat
    B: Mat

    def __post_init__(self):
        if (self.A.rows, self.A.cols) != (self.B.rows, self.B.cols):
            raise ValueError("pencil parts must share a shape")
        if self.A.domain is not QI or self.B.domain is not QI:
            raise ValueError("pencil parts must live over Q(i)")

    @property
    def rows(self) -> int:
        return self.A.rows

    @property
    def cols(self) -> int:
        return self.A.cols

    def at(self, p: TwistorPoint) -> Mat:
        if p.is_infinity:
            return self.A
        return self.A.scale(p.zeta) + self.B

    def conj(self) -> LinearPencil:
        return LinearPencil(self.A.conj(), self.B.conj())

    def block_diag(self, other: LinearPencil) -> LinearPencil:
        def blocks(x, y):
            top = x.hstack(Mat.zeros(x.rows, y.cols, QI))
            bot = Mat.zeros(y.rows, x.cols, QI).hstack(y)
            return top.vstack(bot)

        return LinearPencil(blocks(self.A, other.A), blocks(self.B, other.B))

    def as_projective(self) -> ProjMat:
        entries = tuple(
            tuple(Poly((self.B.data[i][j], self.A.data[i][j])) for j in range(self.cols))
            for i in range(self.rows)
        )
        return ProjMat(PolyMat(entries), (1,) * self.cols)


class ProjMat:
    """Column family over CP^1: column j is homogeneous of degree deg_j.

    Stored as the affine-chart matrix (z1 = 1); the chart at infinity is
    obtained by reversing each column's coefficients inside its degree.
    Pointwise column spans (hence ranks) are chart-independent.
    """

    __slots__ = ("pm", "col_degrees")

    def __init__(self, pm: PolyMat, col_degrees):
        col_degrees = tuple(col_degrees)
        if len(col_degrees) != pm.cols:
            raise ValueError("one degree per column required")
        for j, d in enumerate(col_degrees):
            for i in range(pm.rows):
                if pm.entries[i][j].degree > d:
                    raise ValueError("entry degree exceeds column degree")
        object.__setattr__(self, "pm", pm)
        object.__setattr__(self, "col_degrees", col_degrees)

    def __setattr__(self, name, value):
        raise AttributeError("ProjMat is immutable")

    @property
    def rows(self) -> int:
        return self.pm.rows

    @property
    def cols(self) -> int:
        return self.pm.cols

    @classmethod
    def from_blocks(cls, const: Mat | None, pencil: LinearPencil | None) -> ProjMat:
        """[C | P]: constant columns (degree 0) next to pencil columns (degree 1)."""
        parts = []
        degs: list[int] = []
        if const is not None and const.cols:
            parts.append(PolyMat.from_const(const))
            degs += [0] * const.cols
        if pencil is not None and pencil.cols:
            parts.append(pencil.as_projective().pm)
            degs += [1] * pencil.cols
        if not parts:
            rows = const.rows if const is not None else pencil.rows
            return cls(PolyMat(tuple(() for _ in range(rows))), ())
        pm = parts[0]
        for extra in parts[1:]:
            pm = pm.hstack(extra)
        return cls(pm, degs)

    def infinity_matrix(self) -> Mat:
        data = []
        for i in range(self.rows):
            row = []
            for j, d in enumerate(self.col_degrees):
                e = self.pm.entries[i][j]
                row.append(e.coeffs[d] if e.degree == d else GaussRat(0))
            data.append(tuple(row))
        return Mat(self.rows, self.cols, QI, tuple(data))

    def at(self, p: TwistorPoint) -> Mat:
        if p.is_infinity:
            return self.infinity_matrix()
        return self.pm.eval_at(p.zeta)


@dataclass(frozen=True)
class RankEverywhereResult:
    ok: bool
    witness: TwistorPoint | None
    generic_rank: int
    invariant_factors: tuple[Poly, ...]

    def __bool__(self):
        return self.ok


def _as_projective(m) -> ProjMat:
    if isinstance(m, LinearPencil):
        return m.as_projective()
    if isinstance(m, ProjMat):
        return m
    raise TypeError("expected LinearPencil or ProjMat")


def full_rank_everywhere(m, target: int) -> RankEverywhereResult:
    """Decide rank == target at every point of CP^1; witness a drop if not."""
    pm = _as_projective(m)
    factors = tuple(smith_form(pm.pm))
    r = len(factors)
    if r < target:
        # rank <= r < target at every point, so any point witnesses
        return RankEverywhereResult(False, TwistorPoint.affine(0), r, factors)
    if r > target:
        z = 0
        while True:
            p = TwistorPoint.affine(z)
            if pm.at(p).rank() != target:
                return RankEverywhereResult(False, p, r, factors)
            z += 1
    last = factors[-1] if factors else P_ONE
    if not last.is_constant():
        witness = None
        for root in gauss_roots(last):
            p = TwistorPoint.affine(root)
            if pm.at(p).rank() < target:
                witness = p
                break
        return RankEverywhereResult(False, witness, r, factors)
    inf_rank = pm.infinity_matrix().rank()
    if inf_rank != target:
        return RankEverywhereResult(False, TwistorPoint.infinity(), r, factors)
    return RankEverywhereResult(True, None, r, factors)


def minor_product_check(m: PolyMat, upto: int | None = None) -> bool:
    """Brute-force check: prod of first s invariant factors = gcd of s-minors.

    Exponential in the size; meant for matrices up to about 4x6 in tests.
    """
    from itertools import combinations

    factors = smith_form(m)
    r = len(factors)
    upto = r if upto is None else min(upto, r)
    prod = P_ONE
    for s in range(1, upto + 1):
        prod = (prod * factors[s - 1]).monic()
        g = Poly()
        for ridx in combinations(range(m.rows), s):
            for cidx in combinations(range(m.cols), s):
                sub = [[m.entries[i][j] for j in cidx] for i in ridx]
                g = poly_gcd(g, _poly_det(sub))
        if g != prod:
            return False
    return True


def _poly_det(rows: list[list[Poly]]) -> Poly:
    n = len(rows)
    if n == 0:
        return P_ONE
    if n == 1:
        return rows[0][0]
    out = Poly()
    sign = 1
    for j in range(n):
        if rows[0][j]:
            sub = [[rows[i][jj] for jj in range(n) if jj != j] for i in range(1, n)]
            term = rows[0][j] * _poly_det(sub)
            out = out + term if sign > 0 else out - term
        sign = -sign
    return out
