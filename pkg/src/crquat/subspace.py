"""Subspaces of Q^n / Q(i)^n in canonical reduced-basis form.

A Subspace stores its ambient dimension and a basis matrix in RREF whose
rows are the basis vectors.  Canonical form makes set equality literal
tuple equality: two spans are equal iff their stored bases are identical.

Lattice operations:

  sum           stack the bases, re-reduce
  intersect     kernel of the stacked annihilators
  annihilator   {a : a|_S = 0} in dual coordinates, dim = ambient - dim S
  complement    deterministic W with outer = inner (+) W, grown greedily
                along the outer basis ordered by pivot column

Downstream constructions depend on complement's tie-break, so its rule is
fixed: walk the RREF basis of `outer` (rows ordered by ascending pivot,
i.e. lowest-index standard coordinates first) and keep each vector that
enlarges the span of `inner`.
"""

from __future__ import annotations

from .matrix import QI, QQ, Domain, Mat


class Subspace:
    __slots__ = ("ambient_dim", "basis")

    def __init__(self, ambient_dim: int, vectors, domain: Domain | None = None):
        """Canonicalize a spanning set (iterable of vectors, or a Mat of rows)."""
        if isinstance(vectors, Mat):
            m = vectors
            if domain is not None and domain.name != m.domain.name:
                raise ValueError("domain mismatch")
        else:
            vectors = [tuple(v) for v in vectors]
            if domain is None:
                raise ValueError("domain required when passing raw vectors")
            m = Mat.from_rows(vectors, domain)
        if m.cols not in (ambient_dim, 0) and m.rows > 0:
            raise ValueError("vector length %d != ambient dimension %d" % (m.cols, ambient_dim))
        if m.rows == 0:
            m = Mat.zeros(0, ambient_dim, m.domain if domain is None else domain)
        red, pivots = m.rref()
        basis = red.take_rows(range(len(pivots)))
        object.__setattr__(self, "ambient_dim", ambient_dim)
        object.__setattr__(self, "basis", basis)

    def __setattr__(self, name, value):
        raise AttributeError("Subspace is immutable")

    @classmethod
    def zero(cls, ambient_dim: int, domain: Domain) -> Subspace:
        return cls(ambient_dim, Mat.zeros(0, ambient_dim, domain))

    @classmethod
    def full(cls, ambient_dim: int, domain: Domain) -> Subspace:
        return cls(ambient_dim, Mat.identity(ambient_dim, domain))

    @property
    def dim(self) -> int:
        return self.basis.rows

    @property
    def domain(self) -> Domain:
        return self.basis.domain

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self):
        return "Subspace(dim %d of %d over %s)" % (self.dim, self.ambient_dim, self.domain.name)

    def vectors(self) -> list[tuple]:
        return list(self.basis.data)

    def contains_vector(self, v) -> bool:
        probe = Mat.from_rows([tuple(v)], self.domain)
        return self.basis.vstack(probe).rank() == self.dim

    def contains(self, other: Subspace) -> bool:
        self._check(other)
        return self.basis.vstack(other.basis).rank() == self.dim

    def _check(self, other: Subspace):
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        if self.domain.name != other.domain.name:
            raise ValueError("scalar domain mismatch")

    def sum(self, other: Subspace) -> Subspace:
        self._check(other)
        return Subspace(self.ambient_dim, self.basis.vstack(other.basis))

    __add__ = sum

    def annihilator(self) -> Subspace:
        """Dual-coordinate subspace {a : <a, v> = 0 for all v in self}."""
        return Subspace(self.ambient_dim, Mat.from_rows(self.basis.kernel_vectors(), self.domain)
                        if self.dim else Mat.identity(self.ambient_dim, self.domain))

    def intersect(self, other: Subspace) -> Subspace:
        self._check(other)
        stacked = self.annihilator().basis.vstack(other.annihilator().basis)
        return Subspace(self.ambient_dim, Mat.from_rows(stacked.kernel_vectors(), self.domain)
                        if stacked.rows else Mat.identity(self.ambient_dim, self.domain))

    def complement_in(self, outer: Subspace) -> Subspace:
        """Deterministic W with outer = self (+) W; requires self <= outer."""
        self._check(outer)
        if not outer.contains(self):
            raise ValueError("complement requested outside the enclosing subspace")
        picked = []
        current = self.basis
        rank = current.rank()
        for v in outer.basis.data:
            trial = current.vstack(Mat.from_rows([v], self.domain))
            r = trial.rank()
            if r > rank:
                picked.append(v)
                current, rank = trial, r
        w = Subspace(self.ambient_dim, picked, self.domain) if picked else Subspace.zero(self.ambient_dim, self.domain)
        assert self.dim + w.dim == outer.dim
        return w

    def image_under(self, m: Mat) -> Subspace:
        """Span of m v over basis vectors v (m maps ambient to m.rows space)."""
        if m.cols != self.ambient_dim:
            raise ValueError("map/ambient mismatch")
        rows = [m.apply(v) for v in self.basis.data]
        return Subspace(m.rows, rows, m.domain) if rows else Subspace.zero(m.rows, m.domain)

    def preimage_under(self, m: Mat) -> Subspace:
        """{v : m v in self}; kernel of (annihilator rows) m."""
        if m.rows != self.ambient_dim:
            raise ValueError("map/ambient mismatch")
        ann = self.annihilator().basis
        if ann.rows == 0:
            return Subspace.full(m.cols, m.domain)
        vecs = (ann @ m).kernel_vectors()
        return Subspace(m.cols, vecs, m.domain) if vecs else Subspace.zero(m.cols, m.domain)

    def to_gaussian(self) -> Subspace:
        if self.domain is QI:
            return self
        return Subspace(self.ambient_dim, self.basis.to_gaussian())

    def conjugate(self) -> Subspace:
        return Subspace(self.ambient_dim, self.basis.conj())


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    return a.sum(b)


def intersect(a: Subspace, b: Subspace) -> Subspace:
    return a.intersect(b)


def annihilator(a: Subspace) -> Subspace:
    return a.annihilator()


def complement(inner: Subspace, outer: Subspace) -> Subspace:
    return inner.complement_in(outer)


def intersect_many(spaces) -> Subspace:
    it = iter(spaces)
    try:
        acc = next(it)
    except StopIteration:
        raise ValueError("intersect_many of no subspaces is the full space; pass it explicitly")
    for s in it:
        acc = acc.intersect(s)
    return acc


def sum_many(spaces) -> Subspace:
    it = iter(spaces)
    try:
        acc = next(it)
    except StopIteration:
        raise ValueError("sum_many needs at least one subspace")
    for s in it:
        acc = acc.sum(s)
    return acc
