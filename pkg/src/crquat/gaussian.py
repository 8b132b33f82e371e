"""Exact scalars: rationals and Gaussian rationals.

Plain rationals are stdlib ``fractions.Fraction`` (already in lowest terms
with a positive denominator).  ``GaussRat`` is the field Q(i), stored as an
immutable pair of Fractions.  Everything here is exact; there is no float
path anywhere.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

Rat = Fraction

_RAT_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def parse_rat(text: str) -> Fraction:
    """Parse a rational from a strict "p" or "p/q" string (no floats)."""
    s = text.strip()
    if not _RAT_RE.match(s):
        raise ValueError("not a rational literal: %r" % (text,))
    return Fraction(s)


def format_rat(x: Fraction) -> str:
    return str(x)


def sqrt_fraction(x: Fraction) -> Fraction | None:
    """Exact square root of a nonnegative rational, or None if irrational."""
    if x < 0:
        return None
    n, d = x.numerator, x.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn != n or rd * rd != d:
        return None
    return Fraction(rn, rd)


class GaussRat:
    """A Gaussian rational re + im*i with exact Fraction parts.

    >>> GaussRat(1, 2) * GaussRat(1, -2)
    GaussRat(5, 0)
    >>> GaussRat(0, 1) ** 2 == GaussRat(-1)
    True
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", re if type(re) is Fraction else Fraction(re))
        object.__setattr__(self, "im", im if type(im) is Fraction else Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussRat is immutable")

    @staticmethod
    def _coerce(other):
        if isinstance(other, GaussRat):
            return other
        if isinstance(other, (int, Fraction)):
            return GaussRat(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussRat(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussRat(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussRat(o.re - self.re, o.im - self.im)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b, c, d = self.re, self.im, o.re, o.im
        return GaussRat(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = o.re * o.re + o.im * o.im
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        a, b, c, d = self.re, self.im, o.re, o.im
        return GaussRat((a * c + b * d) / n, (b * c - a * d) / n)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self):
        return GaussRat(-self.re, -self.im)

    def __pow__(self, n: int):
        if n < 0:
            return GaussRat(1) / self.__pow__(-n)
        out = GaussRat(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def conj(self) -> GaussRat:
        return GaussRat(self.re, -self.im)

    def norm2(self) -> Fraction:
        """Squared modulus re^2 + im^2, a rational."""
        return self.re * self.re + self.im * self.im

    def is_real(self) -> bool:
        return not self.im

    def __repr__(self):
        return "GaussRat(%s, %s)" % (self.re, self.im)

    def __str__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return "%si" % (self.im,)
        sign = "+" if self.im > 0 else "-"
        return "%s%s%si" % (self.re, sign, abs(self.im))


GI_ZERO = GaussRat(0)
GI_ONE = GaussRat(1)
GI_I = GaussRat(0, 1)


def parse_gauss(text: str) -> GaussRat:
    """Parse "a/b", "c/di" or "a/b+c/di" (also with '-') into a GaussRat."""
    s = text.strip().replace(" ", "")
    if not s:
        raise ValueError("empty Gaussian rational literal")
    if s.endswith("i"):
        body = s[:-1]
        # split off an optional real part before the trailing imaginary term
        for pos in range(len(body) - 1, 0, -1):
            if body[pos] in "+-" and body[pos - 1] not in "+-/":
                re_part, im_part = body[:pos], body[pos:]
                break
        else:
            re_part, im_part = "", body
        if im_part in ("", "+"):
            im = Fraction(1)
        elif im_part == "-":
            im = Fraction(-1)
        else:
            im = parse_rat(im_part)
        re = parse_rat(re_part) if re_part else Fraction(0)
        return GaussRat(re, im)
    return GaussRat(parse_rat(s))


def format_gauss(z: GaussRat) -> str:
    return str(z)


def sqrt_gauss(z: GaussRat) -> GaussRat | None:
    """Exact square root in Q(i) if one exists, else None.

    w = u+vi solves w^2 = x+yi iff u^2 - v^2 = x, 2uv = y; this forces
    u^2 = (x+m)/2 and v^2 = (m-x)/2 with m = |z|, so a root exists in Q(i)
    exactly when |z| and those two halves are rational squares.
    """
    x, y = z.re, z.im
    m = sqrt_fraction(x * x + y * y)
    if m is None:
        return None
    u = sqrt_fraction((x + m) / 2)
    v = sqrt_fraction((m - x) / 2)
    if u is None or v is None:
        return None
    if y < 0:
        v = -v
    w = GaussRat(u, v)
    assert w * w == z
    return w
