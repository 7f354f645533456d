"""Slopes on boundary tori in (fiber, section) coordinates."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import GMSplitError
from .model import GluingMap


@dataclass(frozen=True, order=True)
class Slope:
    """Primitive class ``a*fiber + b*section``, normalized so b > 0, or b == 0 and a == 1."""

    a: int
    b: int

    @classmethod
    def of(cls, a: int, b: int) -> "Slope":
        return primitive(a, b)[0]

    def __post_init__(self):
        if math.gcd(self.a, self.b) != 1:
            raise GMSplitError("bad-slope", f"({self.a},{self.b}) is not primitive")
        if self.b < 0 or (self.b == 0 and self.a != 1):
            raise GMSplitError("bad-slope", f"({self.a},{self.b}) is not sign-normalized")

    def __str__(self):
        return f"({self.a},{self.b})"


FIBER = Slope(1, 0)
SECTION = Slope(0, 1)


def primitive(a: int, b: int) -> tuple[Slope, int]:
    """Split a nonzero homology class into (normalized primitive slope, content)."""
    g = math.gcd(a, b)
    if g == 0:
        raise GMSplitError("bad-slope", "(0,0) is not a slope")
    a, b = a // g, b // g
    if b < 0 or (b == 0 and a < 0):
        a, b = -a, -b
    return Slope(a, b), g


def intersection_number(s: Slope, t: Slope) -> int:
    return abs(s.a * t.b - s.b * t.a)


def transport_slope(gl: GluingMap, s: Slope) -> Slope:
    return primitive(*gl.apply(s.a, s.b))[0]


@dataclass(frozen=True, order=True)
class Curves:
    """``count`` parallel copies of ``slope`` on one boundary component."""

    slope: Slope
    count: int

    def __post_init__(self):
        if self.count < 1:
            raise GMSplitError("bad-multislope", "curve count must be positive")


# boundary index -> Curves; indices not present are missed by the surface
MultiSlope = dict[int, Curves]
