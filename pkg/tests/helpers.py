"""Shared deterministic random generators for the test suite."""

from __future__ import annotations

import random
from fractions import Fraction

from crquat import QQ, CRQInput, Mat, Quat, Subspace, TwistorPoint, is_cr_quaternionic, is_cocr_quaternionic, j_from_zeta
from crquat.analysis import cocr_input, cr_input
from crquat.catalog import f_model_complement, f_model_subspace
from crquat.model import left_mult_matrix, right_mult_matrix
from crquat.quaternion import unit_from_imaginary


def rng_for(name: str) -> random.Random:
    return random.Random("crquat:" + name)


def rand_int_matrix(rng, rows, cols, lo=-3, hi=3) -> Mat:
    return Mat.from_rows(
        [[Fraction(rng.randint(lo, hi)) for _ in range(cols)] for _ in range(rows)], QQ
    )


def rand_subspace(rng, ambient: int, dim: int) -> Subspace:
    while True:
        m = rand_int_matrix(rng, dim, ambient)
        if m.rank() == dim:
            return Subspace(ambient, m)


def rand_unit_quat(rng) -> Quat:
    q = Quat(0, rng.randint(-2, 2), rng.randint(-2, 2), rng.randint(-2, 2))
    return unit_from_imaginary(q)


def rand_imaginary_unit(rng) -> Quat:
    """A rational point of the unit sphere of imaginary quaternions."""
    z = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
    w = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
    from crquat.gaussian import GaussRat

    return j_from_zeta(TwistorPoint.affine(GaussRat(z, w))).q


def rand_quat_matrix(rng, k_src: int, k_dst: int, lo=-2, hi=2) -> Mat:
    """Real matrix of a random right-multiplication map H^{k_src} -> H^{k_dst}."""
    out = Mat.zeros(4 * k_dst, 4 * k_src, QQ)
    for s in range(k_src):
        for t in range(k_dst):
            q = Quat(rng.randint(lo, hi), rng.randint(lo, hi), rng.randint(lo, hi), rng.randint(lo, hi))
            block = right_mult_matrix(q, 1)
            rows = [list(r) for r in out.data]
            for r in range(4):
                for c in range(4):
                    rows[4 * t + r][4 * s + c] += block.data[r][c]
            out = Mat(4 * k_dst, 4 * k_src, QQ, tuple(tuple(r) for r in rows))
    return out


def rand_invertible_quat_matrix(rng, k: int) -> Mat:
    while True:
        m = rand_quat_matrix(rng, k, k)
        if m.rank() == 4 * k:
            return m


def rand_accepted_cr(rng, k: int, dim: int | None = None) -> CRQInput:
    while True:
        d = dim if dim is not None else rng.randint(2 * k + 1, 4 * k)
        inp = cr_input(k, rand_subspace(rng, 4 * k, d))
        if is_cr_quaternionic(inp):
            return inp


def rand_accepted_cocr(rng, k: int, l: int | None = None) -> CRQInput:
    while True:
        d = l if l is not None else rng.randint(0, 2 * k - 1)
        inp = cocr_input(k, rand_subspace(rng, 4 * k, d) if d else Subspace.zero(4 * k, QQ))
        if is_cocr_quaternionic(inp):
            return inp


def engineered_cr_failure(rng, k: int = 2) -> tuple[CRQInput, TwistorPoint]:
    """A subspace of H^k (k >= 2) of dim in {5, 6} inside a 6-dimensional
    J-invariant space, so the defining condition fails at that J."""
    assert k == 2
    from crquat.gaussian import GaussRat

    zeta = GaussRat(Fraction(rng.randint(-2, 2), rng.randint(1, 2)))
    point = TwistorPoint.affine(zeta)
    jm = j_from_zeta(point).matrix(k)
    while True:
        vecs = []
        for _ in range(3):
            v = tuple(Fraction(rng.randint(-3, 3)) for _ in range(8))
            vecs.append(v)
            vecs.append(jm.apply(v))
        s = Subspace(8, vecs, QQ)
        if s.dim != 6:
            continue
        dim = rng.choice((5, 6))
        if dim == 6:
            u = s
        else:
            coeffs = rand_int_matrix(rng, 5, 6)
            u = Subspace(8, (coeffs @ s.basis))
            if u.dim != 5:
                continue
        return cr_input(k, u), point


def transported_f_model(rng, l: int, k: int, rotate: bool = True):
    """A randomized compatible pair: the model subspace and its complement
    moved by an invertible right multiplication and optionally a left unit
    rotation.  Returns (cr input, moved complement)."""
    g = rand_invertible_quat_matrix(rng, k)
    if rotate:
        g = left_mult_matrix(rand_unit_quat(rng), k) @ g
    u = f_model_subspace(l, k).image_under(g)
    v = f_model_complement(l, k).image_under(g)
    return cr_input(k, u), v


def restrict_map(x: Mat, src: CRQInput, dst: CRQInput) -> Mat:
    """Coordinates of x between the canonical bases; requires x(U) <= U'."""
    incl_s = src.subspace.basis.transpose()
    incl_d = dst.subspace.basis.transpose()
    sol = incl_d.solve(x @ incl_s)
    assert sol is not None, "map does not carry the source into the target"
    return sol


def dual_basis_alphas(inp: CRQInput) -> list[tuple[Fraction, ...]]:
    """Ambient functionals restricting to the dual basis of the canonical
    basis of U (the pivot-coordinate functionals)."""
    n = inp.subspace.ambient_dim
    _, pivots = inp.subspace.basis.rref()
    out = []
    for p in pivots:
        v = [Fraction(0)] * n
        v[p] = Fraction(1)
        out.append(tuple(v))
    return out
