"""Univariate polynomials over the Gaussian rationals.

Coefficients are stored lowest degree first with no trailing zeros; the
zero polynomial is the empty tuple and reports degree -1.  Division, gcd
(monic) and evaluation are exact.  Root extraction over Q(i) is exact for
degrees one and two (quadratic formula with exact Q(i) square roots) and
falls back to a deterministic bounded grid of small Gaussian rationals for
higher degree; callers treat an empty answer as "no rational root found",
not as a proof of none.
"""

from __future__ import annotations

from fractions import Fraction

from .gaussian import GaussRat, sqrt_gauss


def _coerce_coeff(x):
    if isinstance(x, GaussRat):
        return x
    if isinstance(x, (int, Fraction)):
        return GaussRat(x)
    raise TypeError("coefficient %r is not Gaussian rational" % (x,))


class Poly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_coerce_coeff(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def constant(cls, c) -> Poly:
        return cls((c,))

    @classmethod
    def variable(cls) -> Poly:
        return cls((0, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return Poly(tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussRat)):
            c = _coerce_coeff(other)
            return Poly(tuple(c * a for a in self.coeffs))
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [GaussRat(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if not ca:
                continue
            for j, cb in enumerate(b):
                if cb:
                    out[i + j] = out[i + j] + ca * cb
        return Poly(out)

    __rmul__ = __mul__

    def __divmod__(self, other: Poly):
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Poly(), self
        quot = [GaussRat(0)] * (dq + 1)
        lead = other.coeffs[-1]
        for k in range(dq, -1, -1):
            top = rem[k + other.degree]
            if top:
                f = top / lead
                quot[k] = f
                for i, c in enumerate(other.coeffs):
                    rem[k + i] = rem[k + i] - f * c
        return Poly(quot), Poly(rem[: other.degree if other.degree > 0 else 0])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self) -> Poly:
        if not self:
            return self
        lead = self.coeffs[-1]
        if lead == GaussRat(1):
            return self
        return Poly(tuple(c / lead for c in self.coeffs))

    def eval(self, z: GaussRat) -> GaussRat:
        out = GaussRat(0)
        for c in reversed(self.coeffs):
            out = out * z + c
        return out

    def reversed_to_degree(self, d: int) -> Poly:
        """Coefficients reversed inside degree d: p(z) -> z^d p(1/z).

        Used to pass between the two affine charts of the projective line;
        requires degree(self) <= d.
        """
        if self.degree > d:
            raise ValueError("degree exceeds homogenization bound")
        padded = list(self.coeffs) + [GaussRat(0)] * (d + 1 - len(self.coeffs))
        return Poly(tuple(reversed(padded)))

    def is_constant(self) -> bool:
        return self.degree <= 0

    def __repr__(self):
        if not self:
            return "Poly(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append("(%s)z" % c)
            else:
                terms.append("(%s)z^%d" % (c, i))
        return "Poly(%s)" % " + ".join(terms)


P_ZERO = Poly()
P_ONE = Poly((1,))


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Monic gcd; gcd(p, 0) is monic p and gcd(0, 0) is 0."""
    a, b = p, q
    while b:
        a, b = b, a % b
    return a.monic()


def _height_fracs(h: int) -> list[Fraction]:
    """Reduced fractions whose height max(|num|, den) is exactly h."""
    if h == 0:
        return [Fraction(0)]
    out = []
    for den in range(1, h + 1):
        for num in range(-h, h + 1):
            if max(abs(num), den) != h:
                continue
            f = Fraction(num, den)
            if f.numerator == num and f.denominator == den:
                out.append(f)
    return out


def _grid_candidates(height: int):
    """Deterministic expansion of small Gaussian rationals by height,
    real candidates of each height before the complex ones."""
    prev: list[Fraction] = []
    for h in range(height + 1):
        new = _height_fracs(h)
        for f in new:
            yield GaussRat(f)
        for re in prev:
            for im in new:
                if im:
                    yield GaussRat(re, im)
        for re in new:
            for im in prev + new:
                if im:
                    yield GaussRat(re, im)
        prev += new


def gauss_roots(p: Poly, grid_height: int = 8) -> list[GaussRat]:
    """Roots of p in Q(i) that this routine can certify.

    Linear and quadratic factors are solved exactly; beyond that a
    deterministic grid is scanned, so a higher-degree irrational locus
    can legitimately come back empty.
    """
    if not p or p.is_constant():
        return []
    roots: list[GaussRat] = []
    work = p
    # peel off grid roots first so the exact low-degree solvers see the rest
    for cand in _grid_candidates(grid_height):
        while work.degree >= 1 and not work.eval(cand):
            roots.append(cand)
            work = work // Poly((-cand, 1))
        if work.degree <= 2:
            break
    if work.degree == 1:
        roots.append(-work.coeffs[0] / work.coeffs[1])
    elif work.degree == 2:
        c, b, a = work.coeffs
        disc = b * b - GaussRat(4) * a * c
        s = sqrt_gauss(disc)
        if s is not None:
            roots.append((-b + s) / (GaussRat(2) * a))
            roots.append((-b - s) / (GaussRat(2) * a))
    out = []
    for r in roots:
        if r not in out:
            assert not p.eval(r)
            out.append(r)
    return out
