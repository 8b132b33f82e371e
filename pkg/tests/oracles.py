"""Independent brute-force oracles.

These deliberately avoid the Smith-form route used by the library: ranks of
polynomial families are judged through exhaustive maximal-minor
enumeration, with determinants computed by evaluation and Lagrange
interpolation.  Shared primitives are limited to exact scalar arithmetic
and numeric (evaluated) determinants.
"""

from __future__ import annotations

from itertools import combinations

from crquat import GaussRat, Poly, poly_gcd
from crquat.analysis import CRQInput, inclusion_matrix
from crquat.model import eigenframe
from crquat.polymatrix import PolyMat, ProjMat


def lagrange_interpolate(points: list[GaussRat], values: list[GaussRat]) -> Poly:
    out = Poly()
    for m, (x, y) in enumerate(zip(points, values)):
        if not y:
            continue
        num = Poly((1,))
        den = GaussRat(1)
        for n, xn in enumerate(points):
            if n == m:
                continue
            num = num * Poly((-xn, 1))
            den = den * (x - xn)
        out = out + num * (y / den)
    return out


def polymat_det(pm: PolyMat) -> Poly:
    """Determinant via evaluation at degree_bound+1 points."""
    assert pm.rows == pm.cols
    bound = sum(max((e.degree for e in row if e), default=0) for row in pm.entries)
    points = [GaussRat(z) for z in range(bound + 1)]
    values = [pm.eval_at(z).det() for z in points]
    det = lagrange_interpolate(points, values)
    probe = GaussRat(bound + 1)
    assert det.eval(probe) == pm.eval_at(probe).det()
    return det


def maximal_minor_decision(family: ProjMat, target: int) -> bool:
    """Full row rank (== target) at EVERY point of the projective line.

    Scope: target == family.rows <= family.cols.  True iff some maximal
    minor is nonzero (generic full rank), the nonzero minors share no
    affine root (monic gcd 1), and some nonzero minor has no degree defect.
    Column j is homogeneous of degree deg_j, so a minor over a column
    subset is homogeneous of degree sum(deg_j); affine degree below that
    sum is exactly a root at [1:0].
    """
    if target > family.cols:
        return False
    assert target == family.rows
    some_nonzero = False
    defect_free = False
    g = Poly()
    for cols_idx in combinations(range(family.cols), target):
        sub = PolyMat(tuple(tuple(row[j] for j in cols_idx) for row in family.pm.entries))
        det = polymat_det(sub)
        if not det:
            continue
        some_nonzero = True
        homdeg = sum(family.col_degrees[j] for j in cols_idx)
        if det.degree == homdeg:
            defect_free = True
        g = poly_gcd(g, det)
        if defect_free and g.degree == 0:
            return True
    return some_nonzero and g.degree == 0 and defect_free


def cr_family(inp: CRQInput) -> ProjMat:
    return ProjMat.from_blocks(inclusion_matrix(inp).to_gaussian(), eigenframe(inp.k))


def cr_oracle(inp: CRQInput) -> bool:
    """Brute-force version of the cr acceptance decision."""
    if inp.dim_u <= 2 * inp.k:
        return False
    return maximal_minor_decision(cr_family(inp), 4 * inp.k)
