"""Polynomials over Q(i): division, gcd, chart reversal, root extraction."""

from fractions import Fraction

import pytest

from crquat.gaussian import GaussRat
from crquat.polynomial import Poly, gauss_roots, poly_gcd

from helpers import rng_for

Z = Poly.variable()


def _p(*coeffs):
    return Poly(coeffs)


def test_gcd_examples():
    # gcd(z^2 - 1, z - 1) = z - 1
    assert poly_gcd(_p(-1, 0, 1), _p(-1, 1)) == _p(-1, 1)
    # gcd(p, 0) = monic p
    p = _p(2, 4)
    assert poly_gcd(p, Poly()) == _p(1, 2).monic() == _p(GaussRat(Fraction(1, 2)), 1)
    # coprime
    assert poly_gcd(_p(0, 1), _p(1, 1)) == Poly((1,))


def test_divmod_invariant():
    rng = rng_for("polydiv")
    for _ in range(40):
        a = Poly([GaussRat(rng.randint(-4, 4), rng.randint(-4, 4)) for _ in range(rng.randint(0, 6))])
        b = Poly([GaussRat(rng.randint(-4, 4), rng.randint(-4, 4)) for _ in range(rng.randint(1, 4))])
        if not b:
            continue
        q, r = divmod(a, b)
        assert q * b + r == a
        assert r.degree < b.degree or not r


def test_gcd_divides_both():
    rng = rng_for("polygcd")
    for _ in range(30):
        g = Poly([GaussRat(rng.randint(-2, 2), rng.randint(-2, 2)) for _ in range(rng.randint(1, 3))])
        if not g:
            continue
        a = g * Poly([GaussRat(rng.randint(-2, 2)) for _ in range(rng.randint(1, 3))])
        b = g * Poly([GaussRat(rng.randint(-2, 2)) for _ in range(rng.randint(1, 3))])
        d = poly_gcd(a, b)
        if a and b:
            assert not a % d and not b % d


def test_eval_horner():
    p = _p(1, GaussRat(0, 1), 3)  # 1 + i z + 3 z^2
    z = GaussRat(2, -1)
    assert p.eval(z) == GaussRat(1) + GaussRat(0, 1) * z + GaussRat(3) * z * z


def test_reversed_to_degree():
    p = _p(5, 7)  # 5 + 7z, column degree 1 -> 7 + 5z on the other chart
    assert p.reversed_to_degree(1) == _p(7, 5)
    assert p.reversed_to_degree(2) == _p(0, 7, 5)
    with pytest.raises(ValueError):
        p.reversed_to_degree(0)


def test_roots_linear_quadratic():
    # (z - 3)(z + i) has roots 3 and -i
    p = _p(3, -1) * _p(GaussRat(0, 1), 1)
    roots = gauss_roots(p)
    assert set(roots) == {GaussRat(3), GaussRat(0, -1)}
    # z^2 - 2 has no Q(i) roots
    assert gauss_roots(_p(-2, 0, 1)) == []
    # z^2 + 1 factors over Q(i)
    assert set(gauss_roots(_p(1, 0, 1))) == {GaussRat(0, 1), GaussRat(0, -1)}


def test_roots_cubic_with_rational_root():
    # (z - 1/2)(z^2 + 1): grid finds 1/2, then the quadratic is exact
    p = _p(GaussRat(Fraction(-1, 2)), 1) * _p(1, 0, 1)
    assert set(gauss_roots(p)) == {GaussRat(Fraction(1, 2)), GaussRat(0, 1), GaussRat(0, -1)}


def test_zero_poly_conventions():
    assert Poly().degree == -1
    assert not Poly()
    assert Poly((0, 0)).degree == -1
    assert poly_gcd(Poly(), Poly()) == Poly()
