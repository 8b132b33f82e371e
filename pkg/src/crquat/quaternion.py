"""Quaternions with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction

from .gaussian import sqrt_fraction


class Quat:
    """q = w + x*i + y*j + z*k over Q, with i*j = k.

    >>> Quat.I * Quat.J == Quat.K
    True
    >>> (Quat.I * Quat.I).w
    Fraction(-1, 1)
    """

    __slots__ = ("w", "x", "y", "z")

    def __init__(self, w=0, x=0, y=0, z=0):
        object.__setattr__(self, "w", Fraction(w))
        object.__setattr__(self, "x", Fraction(x))
        object.__setattr__(self, "y", Fraction(y))
        object.__setattr__(self, "z", Fraction(z))

    def __setattr__(self, name, value):
        raise AttributeError("Quat is immutable")

    @staticmethod
    def _coerce(other):
        if isinstance(other, Quat):
            return other
        if isinstance(other, (int, Fraction)):
            return Quat(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Quat(self.w + o.w, self.x + o.x, self.y + o.y, self.z + o.z)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Quat(self.w - o.w, self.x - o.x, self.y - o.y, self.z - o.z)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b, c, d = self.w, self.x, self.y, self.z
        e, f, g, h = o.w, o.x, o.y, o.z
        return Quat(
            a * e - b * f - c * g - d * h,
            a * f + b * e + c * h - d * g,
            a * g - b * h + c * e + d * f,
            a * h + b * g - c * f + d * e,
        )

    def __rmul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __neg__(self):
        return Quat(-self.w, -self.x, -self.y, -self.z)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self.w, self.x, self.y, self.z) == (o.w, o.x, o.y, o.z)

    def __hash__(self):
        return hash((self.w, self.x, self.y, self.z))

    def __bool__(self):
        return bool(self.w) or bool(self.x) or bool(self.y) or bool(self.z)

    def conj(self) -> Quat:
        return Quat(self.w, -self.x, -self.y, -self.z)

    def norm2(self) -> Fraction:
        return self.w**2 + self.x**2 + self.y**2 + self.z**2

    def inverse(self) -> Quat:
        n = self.norm2()
        if n == 0:
            raise ZeroDivisionError("zero quaternion")
        c = self.conj()
        return Quat(c.w / n, c.x / n, c.y / n, c.z / n)

    def is_imaginary(self) -> bool:
        return not self.w

    def is_unit(self) -> bool:
        return self.norm2() == 1

    def coords(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.w, self.x, self.y, self.z)

    def __repr__(self):
        return "Quat(%s, %s, %s, %s)" % (self.w, self.x, self.y, self.z)


Quat.ONE = Quat(1)
Quat.I = Quat(0, 1)
Quat.J = Quat(0, 0, 1)
Quat.K = Quat(0, 0, 0, 1)


def unit_from_imaginary(q: Quat) -> Quat:
    """Cayley-style unit quaternion (1+q)^2 / (1+|q|^2) for imaginary q.

    Produces exact rational unit quaternions; as q ranges over Im H these are
    dense in the unit sphere.  Used to generate rotation frames in tests.
    """
    if not q.is_imaginary():
        raise ValueError("expected an imaginary quaternion")
    u = (Quat.ONE + q) * (Quat.ONE + q)
    n = 1 + q.norm2()
    out = Quat(u.w / n, u.x / n, u.y / n, u.z / n)
    assert out.is_unit()
    return out


def normalized_if_square(q: Quat) -> Quat | None:
    """q/|q| when |q| is rational, else None."""
    n = sqrt_fraction(q.norm2())
    if n is None or n == 0:
        return None
    return Quat(q.w / n, q.x / n, q.y / n, q.z / n)
