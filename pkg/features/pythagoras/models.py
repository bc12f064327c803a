"""
Pythagorean Models
------------------
Value types shared by the circle construction and the triple classifier.
"""
from enum import Enum
from typing import NamedTuple

from features.numeric import Rational


class Orientation(str, Enum):
    """Which leg carries the m(q²-p²) shape."""
    ODD_FIRST = "odd_first"
    EVEN_FIRST = "even_first"


class Triple(NamedTuple):
    """Side lengths (a, b, c); verified triples satisfy a² + b² = c²."""
    a: int
    b: int
    c: int


class Parametrization(NamedTuple):
    """Canonical (m, p, q, orientation) representative of a triple."""
    m: int
    p: int
    q: int
    orientation: Orientation = Orientation.ODD_FIRST

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "p": self.p,
            "q": self.q,
            "orientation": self.orientation.value,
        }


class CirclePoint(NamedTuple):
    """Rational point of the unit circle in the nonnegative quadrant."""
    x: Rational
    y: Rational


ZERO_PARAMETRIZATION = Parametrization(m=0, p=0, q=1, orientation=Orientation.ODD_FIRST)
