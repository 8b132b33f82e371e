"""Exact dense matrices over Q or Q(i).

Matrices are immutable, carry an explicit scalar-domain tag, and are stored
row-major as tuples.  Rank and determinant run fraction-free (Bareiss) on an
integerized copy so intermediate entries stay integral; canonical bases come
from a plain Gauss-Jordan reduction to RREF.
"""

from __future__ import annotations

from fractions import Fraction

from .gaussian import GaussRat


class Domain:
    """Scalar-domain tag: the rationals or the Gaussian rationals."""

    __slots__ = ("name", "zero", "one")

    def __init__(self, name, zero, one):
        object.__setattr__(self, "name", name)
        object.__setattr__(self, "zero", zero)
        object.__setattr__(self, "one", one)

    def __setattr__(self, name, value):
        raise AttributeError("Domain is immutable")

    def coerce(self, x):
        if self.name == "Q":
            if isinstance(x, Fraction):
                return x
            if isinstance(x, int):
                return Fraction(x)
            raise TypeError("entry %r is not rational" % (x,))
        if isinstance(x, GaussRat):
            return x
        if isinstance(x, (int, Fraction)):
            return GaussRat(x)
        raise TypeError("entry %r is not Gaussian rational" % (x,))

    def conj(self, x):
        return x.conj() if self.name == "Qi" else x

    def __repr__(self):
        return "Domain(%s)" % self.name


QQ = Domain("Q", Fraction(0), Fraction(1))
QI = Domain("Qi", GaussRat(0), GaussRat(1))


def _denoms(x):
    if isinstance(x, Fraction):
        return (x.denominator,)
    return (x.re.denominator, x.im.denominator)


def _lcm(a, b):
    from math import gcd

    return a * b // gcd(a, b)


class Mat:
    __slots__ = ("rows", "cols", "domain", "data")

    def __init__(self, rows: int, cols: int, domain: Domain, data):
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "domain", domain)
        object.__setattr__(self, "data", data)
        if len(data) != rows or any(len(r) != cols for r in data):
            raise ValueError("shape mismatch")

    def __setattr__(self, name, value):
        raise AttributeError("Mat is immutable")

    @classmethod
    def from_rows(cls, rows, domain: Domain) -> Mat:
        rows = [tuple(domain.coerce(x) for x in r) for r in rows]
        cols = len(rows[0]) if rows else 0
        return cls(len(rows), cols, domain, tuple(rows))

    @classmethod
    def zeros(cls, rows: int, cols: int, domain: Domain) -> Mat:
        z = domain.zero
        return cls(rows, cols, domain, tuple(tuple(z for _ in range(cols)) for _ in range(rows)))

    @classmethod
    def identity(cls, n: int, domain: Domain) -> Mat:
        z, o = domain.zero, domain.one
        return cls(n, n, domain, tuple(tuple(o if i == j else z for j in range(n)) for i in range(n)))

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and self.domain.name == other.domain.name
            and self.data == other.data
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.domain.name, self.data))

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in row) for row in self.data)
        return "Mat(%dx%d %s: %s)" % (self.rows, self.cols, self.domain.name, body)

    def entry(self, i: int, j: int):
        return self.data[i][j]

    def row(self, i: int):
        return self.data[i]

    def column(self, j: int):
        return tuple(r[j] for r in self.data)

    def columns(self):
        return [self.column(j) for j in range(self.cols)]

    def take_columns(self, idxs) -> Mat:
        return Mat(self.rows, len(idxs), self.domain, tuple(tuple(r[j] for j in idxs) for r in self.data))

    def take_rows(self, idxs) -> Mat:
        return Mat(len(idxs), self.cols, self.domain, tuple(self.data[i] for i in idxs))

    def transpose(self) -> Mat:
        if self.rows == 0:
            return Mat(self.cols, 0, self.domain, tuple(() for _ in range(self.cols)))
        return Mat(self.cols, self.rows, self.domain, tuple(zip(*self.data)))

    def conj(self) -> Mat:
        if self.domain is QQ:
            return self
        return Mat(self.rows, self.cols, self.domain, tuple(tuple(x.conj() for x in r) for r in self.data))

    def to_gaussian(self) -> Mat:
        if self.domain is QI:
            return self
        return Mat(self.rows, self.cols, QI, tuple(tuple(GaussRat(x) for x in r) for r in self.data))

    def __add__(self, other):
        self._check_same(other)
        return Mat(
            self.rows,
            self.cols,
            self.domain,
            tuple(tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(self.data, other.data)),
        )

    def __sub__(self, other):
        self._check_same(other)
        return Mat(
            self.rows,
            self.cols,
            self.domain,
            tuple(tuple(a - b for a, b in zip(ra, rb)) for ra, rb in zip(self.data, other.data)),
        )

    def __neg__(self):
        return Mat(self.rows, self.cols, self.domain, tuple(tuple(-a for a in r) for r in self.data))

    def scale(self, c) -> Mat:
        c = self.domain.coerce(c)
        return Mat(self.rows, self.cols, self.domain, tuple(tuple(c * a for a in r) for r in self.data))

    def _check_same(self, other):
        if self.domain.name != other.domain.name:
            raise ValueError("scalar domain mismatch: %s vs %s" % (self.domain.name, other.domain.name))

    def __matmul__(self, other: Mat) -> Mat:
        self._check_same(other)
        if self.cols != other.rows:
            raise ValueError("inner dimension mismatch")
        bt = other.transpose().data
        out = []
        for r in self.data:
            out.append(tuple(_dot(r, c, self.domain.zero) for c in bt))
        return Mat(self.rows, other.cols, self.domain, tuple(out))

    __mul__ = __matmul__

    def apply(self, v):
        """Matrix times column vector (a tuple)."""
        if len(v) != self.cols:
            raise ValueError("vector length mismatch")
        return tuple(_dot(r, v, self.domain.zero) for r in self.data)

    def hstack(self, other: Mat) -> Mat:
        self._check_same(other)
        if self.rows != other.rows:
            raise ValueError("row count mismatch")
        return Mat(self.rows, self.cols + other.cols, self.domain, tuple(a + b for a, b in zip(self.data, other.data)))

    def vstack(self, other: Mat) -> Mat:
        self._check_same(other)
        if self.cols != other.cols:
            raise ValueError("column count mismatch")
        return Mat(self.rows + other.rows, self.cols, self.domain, self.data + other.data)

    def is_zero(self) -> bool:
        return all(not x for r in self.data for x in r)

    def _integerized_rows(self):
        """Row-scaled copy with integral entries (row scaling preserves rank)."""
        out = []
        for r in self.data:
            m = 1
            for x in r:
                for d in _denoms(x):
                    m = _lcm(m, d)
            out.append([x * m for x in r])
        return out

    def rank(self) -> int:
        """Rank via fraction-free (Bareiss) elimination."""
        a = self._integerized_rows()
        R, C = self.rows, self.cols
        if R == 0 or C == 0:
            return 0
        one = self.domain.one
        prev = one
        r = 0
        for c in range(C):
            piv = None
            for i in range(r, R):
                if a[i][c]:
                    piv = i
                    break
            if piv is None:
                continue
            if piv != r:
                a[r], a[piv] = a[piv], a[r]
            arc = a[r][c]
            for i in range(r + 1, R):
                aic = a[i][c]
                rowi = a[i]
                rowr = a[r]
                for j in range(c + 1, C):
                    rowi[j] = (arc * rowi[j] - aic * rowr[j]) / prev
                rowi[c] = self.domain.zero
            prev = arc
            r += 1
            if r == R:
                break
        return r

    def det(self):
        """Determinant via Bareiss; the matrix must be square."""
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        if n == 0:
            return self.domain.one
        a = [list(r) for r in self.data]
        sign = 1
        prev = self.domain.one
        for c in range(n - 1):
            piv = None
            for i in range(c, n):
                if a[i][c]:
                    piv = i
                    break
            if piv is None:
                return self.domain.zero
            if piv != c:
                a[c], a[piv] = a[piv], a[c]
                sign = -sign
            acc = a[c][c]
            for i in range(c + 1, n):
                aic = a[i][c]
                rowi = a[i]
                rowc = a[c]
                for j in range(c + 1, n):
                    rowi[j] = (acc * rowi[j] - aic * rowc[j]) / prev
                rowi[c] = self.domain.zero
            prev = acc
        d = a[n - 1][n - 1]
        return -d if sign < 0 else d

    def rref(self) -> tuple[Mat, tuple[int, ...]]:
        """Reduced row echelon form and its pivot columns (canonical)."""
        a = [list(r) for r in self.data]
        R, C = self.rows, self.cols
        pivots = []
        r = 0
        for c in range(C):
            piv = None
            for i in range(r, R):
                if a[i][c]:
                    piv = i
                    break
            if piv is None:
                continue
            if piv != r:
                a[r], a[piv] = a[piv], a[r]
            inv = a[r][c]
            if inv != self.domain.one:
                a[r] = [x / inv for x in a[r]]
            for i in range(R):
                if i != r and a[i][c]:
                    f = a[i][c]
                    rowi = a[i]
                    rowr = a[r]
                    for j in range(c, C):
                        rowi[j] = rowi[j] - f * rowr[j]
            pivots.append(c)
            r += 1
            if r == R:
                break
        return Mat(R, C, self.domain, tuple(tuple(row) for row in a)), tuple(pivots)

    def kernel_vectors(self) -> list[tuple]:
        """A basis of {v : self v = 0}, one vector per free column."""
        red, pivots = self.rref()
        pivset = set(pivots)
        free = [j for j in range(self.cols) if j not in pivset]
        out = []
        z, o = self.domain.zero, self.domain.one
        for f in free:
            v = [z] * self.cols
            v[f] = o
            for r, p in enumerate(pivots):
                v[p] = -red.data[r][f]
            out.append(tuple(v))
        return out

    def solve(self, rhs: Mat) -> Mat | None:
        """X with self X = rhs (free variables set to zero), or None."""
        self._check_same(rhs)
        if rhs.rows != self.rows:
            raise ValueError("rhs row count mismatch")
        red, pivots = self.hstack(rhs).rref()
        if any(p >= self.cols for p in pivots):
            return None
        z = self.domain.zero
        data = [[z] * rhs.cols for _ in range(self.cols)]
        for r, p in enumerate(pivots):
            for j in range(rhs.cols):
                data[p][j] = red.data[r][self.cols + j]
        return Mat(self.cols, rhs.cols, self.domain, tuple(tuple(row) for row in data))


def _dot(u, v, zero):
    s = zero
    for a, b in zip(u, v):
        if a and b:
            s = s + a * b
    return s


def dot(u, v):
    """Bilinear dot product of two equal-length tuples (no conjugation)."""
    if len(u) != len(v):
        raise ValueError("length mismatch")
    it = iter(u)
    first = next(it, None)
    zero = Fraction(0) if first is None or isinstance(first, (int, Fraction)) else GaussRat(0)
    return _dot(u, v, zero)
