"""Smith form and the everywhere-full-rank decision."""

from fractions import Fraction

from crquat.gaussian import GaussRat
from crquat.matrix import QI, Mat
from crquat.polynomial import Poly
from crquat.polymatrix import (
    LinearPencil,
    PolyMat,
    ProjMat,
    full_rank_everywhere,
    minor_product_check,
    smith_form,
)
from crquat.twistor import TwistorPoint

from helpers import rng_for
from oracles import maximal_minor_decision, polymat_det

Z = Poly.variable()
ONE = Poly((1,))


def _rand_polymat(rng, rows, cols, deg=1):
    return PolyMat(
        tuple(
            tuple(
                Poly([GaussRat(rng.randint(-2, 2), rng.randint(-1, 1)) for _ in range(rng.randint(0, deg + 1))])
                for _ in range(cols)
            )
            for _ in range(rows)
        )
    )


def test_smith_diagonal_example():
    m = PolyMat(((Z, Poly()), (Poly(), ONE)))
    assert smith_form(m) == [ONE, Z]


def test_smith_identity():
    m = PolyMat.from_const(Mat.identity(4, QI))
    assert smith_form(m) == [ONE] * 4


def test_smith_upper_triangular_oracle_value():
    # [[z, z^2], [0, z]]: 1x1 minor gcd z, 2x2 det z^2, so factors (z, z)
    m = PolyMat(((Z, Z * Z), (Poly(), Z)))
    factors = smith_form(m)
    g1 = polymat_det(PolyMat(((Z,),))).monic()
    det = polymat_det(m).monic()
    assert factors == [g1, (det // g1).monic()]
    assert factors == [Z, Z]


def test_smith_divisibility_chain_random():
    rng = rng_for("smith")
    for _ in range(20):
        m = _rand_polymat(rng, rng.randint(1, 4), rng.randint(1, 4))
        factors = smith_form(m)
        for a, b in zip(factors, factors[1:]):
            assert not b % a
        for f in factors:
            assert f and f.coeffs[-1] == GaussRat(1)


def test_smith_minor_product_property():
    rng = rng_for("smith-minor")
    for _ in range(12):
        m = _rand_polymat(rng, rng.randint(1, 4), rng.randint(1, 6))
        assert minor_product_check(m)


def test_evaluation_rank_matches_factor_count():
    rng = rng_for("smith-eval")
    for _ in range(15):
        m = _rand_polymat(rng, rng.randint(1, 4), rng.randint(1, 4))
        factors = smith_form(m)
        bad = Poly((1,))
        for f in factors:
            bad = bad * f
        z = 0
        while not bad.eval(GaussRat(z)):
            z += 1
        assert m.eval_at(GaussRat(z)).rank() == len(factors)


def test_full_rank_identity_pencil():
    n = 3
    pencil = LinearPencil(Mat.zeros(n, n, QI), Mat.identity(n, QI))
    res = full_rank_everywhere(pencil, n)
    assert res.ok and res.witness is None


def test_full_rank_vanishing_diagonal():
    # diag(z0, z1) drops rank at [1:0] and [0:1]
    a = Mat.from_rows([(1, 0), (0, 0)], QI)
    b = Mat.from_rows([(0, 0), (0, 1)], QI)
    res = full_rank_everywhere(LinearPencil(a, b), 2)
    assert not res.ok
    assert res.witness in (TwistorPoint.affine(0), TwistorPoint.infinity())
    assert LinearPencil(a, b).at(res.witness).rank() < 2


def test_full_rank_witness_is_genuine():
    rng = rng_for("witness")
    for _ in range(10):
        a = Mat.from_rows([[GaussRat(rng.randint(-2, 2)) for _ in range(3)] for _ in range(3)], QI)
        scalepoint = GaussRat(rng.randint(-3, 3))
        # force a drop at a chosen affine point: pencil column scaled by (z - c)
        col = tuple(GaussRat(rng.randint(1, 3)) for _ in range(3))
        pa = Mat.from_rows([(col[i], a.data[i][1], a.data[i][2]) for i in range(3)], QI)
        pb = Mat.from_rows(
            [(col[i] * (-scalepoint), a.data[i][1] * 0, a.data[i][2] * 0) for i in range(3)], QI
        )
        pencil = LinearPencil(pa, pb)
        res = full_rank_everywhere(pencil, 3)
        assert not res.ok
        if res.witness is not None:
            assert pencil.at(res.witness).rank() < 3


def test_projmat_mixed_columns_agree_with_oracle():
    rng = rng_for("projmat")
    for _ in range(12):
        rows = 3
        const = Mat.from_rows(
            [[GaussRat(rng.randint(-2, 2)) for _ in range(2)] for _ in range(rows)], QI
        )
        a = Mat.from_rows([[GaussRat(rng.randint(-2, 2)) for _ in range(2)] for _ in range(rows)], QI)
        b = Mat.from_rows([[GaussRat(rng.randint(-2, 2)) for _ in range(2)] for _ in range(rows)], QI)
        family = ProjMat.from_blocks(const, LinearPencil(a, b))
        got = full_rank_everywhere(family, rows).ok
        expected = maximal_minor_decision(family, rows)
        assert got == expected


def test_projmat_charts_consistent():
    a = Mat.from_rows([(1, 2), (GaussRat(0, 1), 0)], QI)
    b = Mat.from_rows([(0, 1), (1, GaussRat(0, -1))], QI)
    pm = LinearPencil(a, b).as_projective()
    assert pm.at(TwistorPoint.infinity()) == a
    assert pm.at(TwistorPoint.affine(0)) == b
    z = GaussRat(Fraction(2, 3), Fraction(-1, 2))
    assert pm.at(TwistorPoint.affine(z)) == a.scale(z) + b
