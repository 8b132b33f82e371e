"""Points of the projective line CP^1 with exact Gaussian-rational coordinates.

A point [z0 : z1] is stored in canonical form: (z, 1) when z1 != 0, else
(1, 0).  The affine coordinate z = z0/z1 parametrizes one chart; [1:0] is
the point at infinity covered by the second chart.
"""

from __future__ import annotations

from fractions import Fraction

from .gaussian import GI_ONE, GI_ZERO, GaussRat


def _coerce(z) -> GaussRat:
    if isinstance(z, GaussRat):
        return z
    if isinstance(z, (int, Fraction)):
        return GaussRat(z)
    raise TypeError("not a Gaussian rational: %r" % (z,))


class TwistorPoint:
    __slots__ = ("z0", "z1")

    def __init__(self, z0, z1=GI_ONE):
        z0, z1 = _coerce(z0), _coerce(z1)
        if not z0 and not z1:
            raise ValueError("[0:0] is not a point of the projective line")
        if z1:
            z0, z1 = z0 / z1, GI_ONE
        else:
            z0, z1 = GI_ONE, GI_ZERO
        object.__setattr__(self, "z0", z0)
        object.__setattr__(self, "z1", z1)

    def __setattr__(self, name, value):
        raise AttributeError("TwistorPoint is immutable")

    @classmethod
    def affine(cls, z) -> TwistorPoint:
        return cls(z, GI_ONE)

    @classmethod
    def infinity(cls) -> TwistorPoint:
        return cls(GI_ONE, GI_ZERO)

    @property
    def is_infinity(self) -> bool:
        return not self.z1

    @property
    def zeta(self) -> GaussRat:
        """Affine coordinate; only defined away from infinity."""
        if self.is_infinity:
            raise ValueError("affine coordinate undefined at [1:0]")
        return self.z0

    def antipode(self) -> TwistorPoint:
        """[z0:z1] -> [-conj(z1):conj(z0)], the fixed-point-free involution."""
        return TwistorPoint(-self.z1.conj(), self.z0.conj())

    def __eq__(self, other):
        if not isinstance(other, TwistorPoint):
            return NotImplemented
        return self.z0 == other.z0 and self.z1 == other.z1

    def __hash__(self):
        return hash((self.z0, self.z1))

    def __repr__(self):
        if self.is_infinity:
            return "TwistorPoint(inf)"
        return "TwistorPoint(%s)" % (self.z0,)
