"""Exact matrix kernel: rank, RREF, kernel, solve, determinant."""

from fractions import Fraction

import pytest

from crquat.gaussian import GaussRat
from crquat.matrix import QI, QQ, Mat

from helpers import rand_int_matrix, rng_for


def test_rank_examples():
    assert Mat.identity(3, QQ).rank() == 3
    assert Mat.zeros(2, 2, QQ).rank() == 0
    assert Mat.from_rows([(1, 2), (2, 4)], QQ).rank() == 1


def test_kernel_examples():
    assert Mat.identity(2, QQ).kernel_vectors() == []
    ker = Mat.from_rows([(1, 1)], QQ).kernel_vectors()
    assert len(ker) == 1 and ker[0][0] == -ker[0][1]
    assert len(Mat.zeros(2, 3, QQ).kernel_vectors()) == 3


def test_bareiss_agrees_with_rref_rank():
    rng = rng_for("rank")
    for _ in range(40):
        m = rand_int_matrix(rng, rng.randint(1, 6), rng.randint(1, 6), -4, 4)
        _, pivots = m.rref()
        assert m.rank() == len(pivots)


def test_rank_gaussian_entries():
    rng = rng_for("rank-qi")
    for _ in range(25):
        rows = [
            [GaussRat(Fraction(rng.randint(-3, 3), rng.randint(1, 2)), rng.randint(-3, 3)) for _ in range(4)]
            for _ in range(4)
        ]
        m = Mat.from_rows(rows, QI)
        _, pivots = m.rref()
        assert m.rank() == len(pivots)


def test_kernel_vectors_annihilate():
    rng = rng_for("kernel")
    for _ in range(30):
        m = rand_int_matrix(rng, rng.randint(1, 5), rng.randint(1, 6))
        for v in m.kernel_vectors():
            assert all(not x for x in m.apply(v))


def test_det_examples_and_multiplicativity():
    assert Mat.identity(4, QQ).det() == 1
    assert Mat.from_rows([(0, 1), (1, 0)], QQ).det() == -1
    rng = rng_for("det")
    for _ in range(20):
        a = rand_int_matrix(rng, 4, 4)
        b = rand_int_matrix(rng, 4, 4)
        assert (a @ b).det() == a.det() * b.det()


def test_solve():
    a = Mat.from_rows([(1, 2), (3, 4)], QQ)
    x = a.solve(Mat.identity(2, QQ))
    assert a @ x == Mat.identity(2, QQ)
    # inconsistent system
    sing = Mat.from_rows([(1, 1), (1, 1)], QQ)
    rhs = Mat.from_rows([(1,), (2,)], QQ)
    assert sing.solve(rhs) is None


def test_domain_mismatch_rejected():
    a = Mat.identity(2, QQ)
    b = Mat.identity(2, QI)
    with pytest.raises(ValueError):
        a @ b
    assert a.to_gaussian() @ b == b


def test_empty_shapes():
    z = Mat.zeros(0, 3, QQ)
    assert z.transpose().rows == 3 and z.transpose().cols == 0
    assert z.rank() == 0
    assert Mat.zeros(0, 0, QQ).det() == 1
