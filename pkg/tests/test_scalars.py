"""Scalar layer: Gaussian rationals, quaternions, parsing."""

from fractions import Fraction

import pytest

from crquat.gaussian import (
    GaussRat,
    format_gauss,
    parse_gauss,
    parse_rat,
    sqrt_fraction,
    sqrt_gauss,
)
from crquat.quaternion import Quat, unit_from_imaginary

from helpers import rng_for


def test_gauss_field_ops():
    a = GaussRat(Fraction(1, 2), Fraction(-3))
    b = GaussRat(2, Fraction(1, 5))
    assert a + b - b == a
    assert (a * b) / b == a
    assert a * a.conj() == GaussRat(a.norm2())
    assert -(-a) == a
    assert bool(GaussRat(0, 0)) is False


def test_gauss_conj_involution_random():
    rng = rng_for("gauss-conj")
    for _ in range(50):
        z = GaussRat(Fraction(rng.randint(-9, 9), rng.randint(1, 9)), Fraction(rng.randint(-9, 9), rng.randint(1, 9)))
        assert z.conj().conj() == z
        assert (z * z.conj()).im == 0


def test_gauss_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        GaussRat(1) / GaussRat(0)


def test_parse_rat_strict():
    assert parse_rat("-3/4") == Fraction(-3, 4)
    assert parse_rat("7") == 7
    for bad in ("1.5", "1e3", "", "a/b", "1/-2"):
        with pytest.raises(ValueError):
            parse_rat(bad)


def test_parse_format_gauss_roundtrip():
    rng = rng_for("gauss-io")
    for _ in range(40):
        z = GaussRat(Fraction(rng.randint(-9, 9), rng.randint(1, 9)), Fraction(rng.randint(-9, 9), rng.randint(1, 9)))
        assert parse_gauss(format_gauss(z)) == z
    assert parse_gauss("i") == GaussRat(0, 1)
    assert parse_gauss("-i") == GaussRat(0, -1)
    assert parse_gauss("3/4-2/5i") == GaussRat(Fraction(3, 4), Fraction(-2, 5))


def test_sqrt_fraction():
    assert sqrt_fraction(Fraction(9, 4)) == Fraction(3, 2)
    assert sqrt_fraction(Fraction(2)) is None
    assert sqrt_fraction(Fraction(-1)) is None
    assert sqrt_fraction(Fraction(0)) == 0


def test_sqrt_gauss():
    assert sqrt_gauss(GaussRat(-1)) in (GaussRat(0, 1), GaussRat(0, -1))
    z = GaussRat(0, 2)  # (1+i)^2 = 2i
    w = sqrt_gauss(z)
    assert w is not None and w * w == z
    assert sqrt_gauss(GaussRat(2)) is None
    rng = rng_for("gauss-sqrt")
    for _ in range(30):
        w = GaussRat(Fraction(rng.randint(-5, 5), rng.randint(1, 4)), Fraction(rng.randint(-5, 5), rng.randint(1, 4)))
        s = sqrt_gauss(w * w)
        assert s is not None and s * s == w * w


def test_quaternion_table():
    assert Quat.I * Quat.J == Quat.K
    assert Quat.J * Quat.K == Quat.I
    assert Quat.K * Quat.I == Quat.J
    assert Quat.J * Quat.I == -Quat.K
    assert Quat.I * Quat.I == Quat(-1)


def test_quaternion_associativity_and_norm():
    rng = rng_for("quat")
    qs = [
        Quat(rng.randint(-4, 4), rng.randint(-4, 4), rng.randint(-4, 4), rng.randint(-4, 4))
        for _ in range(12)
    ]
    for a, b, c in zip(qs, qs[1:], qs[2:]):
        assert (a * b) * c == a * (b * c)
        assert (a * b).norm2() == a.norm2() * b.norm2()
    for q in qs:
        if q:
            assert q * q.inverse() == Quat.ONE
            assert q * q.conj() == Quat(q.norm2())


def test_unit_from_imaginary():
    rng = rng_for("unit-quat")
    for _ in range(20):
        q = Quat(0, Fraction(rng.randint(-3, 3)), Fraction(rng.randint(-3, 3)), Fraction(rng.randint(-3, 3)))
        u = unit_from_imaginary(q)
        assert u.is_unit()
    with pytest.raises(ValueError):
        unit_from_imaginary(Quat(1, 1, 0, 0))
