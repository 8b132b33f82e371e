"""Subspace lattice: canonical form, sum, intersection, annihilator,
complement, and the transpose/annihilator exchange law."""

from fractions import Fraction

import pytest

from crquat.matrix import QQ, Mat
from crquat.subspace import Subspace, annihilator, complement, intersect, subspace_sum

from helpers import rand_int_matrix, rand_subspace, rng_for


def _e(i, n):
    v = [Fraction(0)] * n
    v[i] = Fraction(1)
    return tuple(v)


def test_canonical_form_is_basis_independent():
    rng = rng_for("canon")
    for _ in range(30):
        s = rand_subspace(rng, 6, rng.randint(1, 4))
        while True:
            mix = rand_int_matrix(rng, s.dim, s.dim)
            if mix.rank() == s.dim:
                break
        remixed = Subspace(6, mix @ s.basis)
        assert remixed == s
        assert remixed.basis == s.basis


def test_sum_examples():
    a = Subspace(3, [_e(0, 3)], QQ)
    b = Subspace(3, [_e(1, 3)], QQ)
    assert subspace_sum(a, b).dim == 2
    assert subspace_sum(a, a) == a
    assert subspace_sum(a, Subspace.zero(3, QQ)) == a


def test_intersect_examples():
    e0, e1, e2 = (_e(i, 3) for i in range(3))
    a = Subspace(3, [e0, e1], QQ)
    b = Subspace(3, [e1, e2], QQ)
    assert intersect(a, b) == Subspace(3, [e1], QQ)
    assert intersect(a, a) == a
    assert intersect(Subspace(3, [e0], QQ), Subspace(3, [e1, e2], QQ)).dim == 0


def test_annihilator_examples():
    assert annihilator(Subspace.zero(4, QQ)) == Subspace.full(4, QQ)
    assert annihilator(Subspace.full(4, QQ)).dim == 0
    assert annihilator(Subspace(2, [_e(0, 2)], QQ)) == Subspace(2, [_e(1, 2)], QQ)


def test_double_annihilator_identity():
    rng = rng_for("ann")
    for _ in range(25):
        s = rand_subspace(rng, 5, rng.randint(0, 5))
        assert annihilator(annihilator(s)) == s


def test_dimension_formula():
    rng = rng_for("dimf")
    for _ in range(40):
        a = rand_subspace(rng, 6, rng.randint(0, 6))
        b = rand_subspace(rng, 6, rng.randint(0, 6))
        assert a.dim + b.dim == subspace_sum(a, b).dim + intersect(a, b).dim


def test_annihilator_of_sum():
    rng = rng_for("annsum")
    for _ in range(25):
        a = rand_subspace(rng, 5, rng.randint(0, 4))
        b = rand_subspace(rng, 5, rng.randint(0, 4))
        assert annihilator(subspace_sum(a, b)) == intersect(annihilator(a), annihilator(b))


def test_transpose_preimage_exchange():
    # image of the annihilator under the transpose = annihilator of the preimage
    rng = rng_for("exchange")
    for _ in range(30):
        rows, cols = rng.randint(1, 5), rng.randint(1, 5)
        m = rand_int_matrix(rng, rows, cols)
        b = rand_subspace(rng, rows, rng.randint(0, rows))
        lhs = annihilator(b).image_under(m.transpose())
        rhs = annihilator(b.preimage_under(m))
        assert lhs == rhs


def test_complement_examples_and_tiebreak():
    e0, e1 = _e(0, 2), _e(1, 2)
    x = Subspace.full(2, QQ)
    assert complement(Subspace.zero(2, QQ), x) == x
    assert complement(x, x).dim == 0
    assert complement(Subspace(2, [e0], QQ), x) == Subspace(2, [e1], QQ)
    with pytest.raises(ValueError):
        complement(Subspace(2, [e0], QQ), Subspace(2, [e1], QQ))


def test_complement_direct_and_deterministic():
    rng = rng_for("compl")
    for _ in range(25):
        outer = rand_subspace(rng, 6, rng.randint(1, 6))
        pick = rand_int_matrix(rng, rng.randint(0, outer.dim), outer.dim)
        inner = Subspace(6, pick @ outer.basis) if pick.rows else Subspace.zero(6, QQ)
        w = complement(inner, outer)
        assert inner.dim + w.dim == outer.dim
        assert intersect(inner, w).dim == 0
        assert subspace_sum(inner, w) == outer
        assert complement(inner, outer) == w


def test_contains_and_membership():
    s = Subspace(4, [(1, 1, 0, 0), (0, 0, 1, 1)], QQ)
    assert s.contains_vector((2, 2, -3, -3))
    assert not s.contains_vector((1, 0, 0, 0))
    assert s.contains(Subspace(4, [(1, 1, 1, 1)], QQ))
