"""
Unit Circle Construction
------------------------
Rational points of x² + y² = 1 in the nonnegative quadrant, their slopes
through (-1, 0), and the odd-odd normalization that turns an irreducible
slope into a distinct-parity one.
"""
from fractions import Fraction
from math import lcm

from errors import DomainError
from features.numeric import Rational, distinct_parity, rel_prime, require_nat

from .models import CirclePoint, Triple

ONE = Fraction(1)


def cond_pq(p: int, q: int) -> bool:
    """q ≥ 1, p ≤ q, p and q coprime with distinct parities."""
    require_nat(p=p, q=q)
    return q >= 1 and p <= q and rel_prime(p, q) and distinct_parity(p, q)


def _require_rational(r) -> Rational:
    if isinstance(r, bool) or not isinstance(r, (int, Fraction)):
        raise DomainError(f"expected an exact rational, got {r!r}")
    return Fraction(r)


def on_unit_circle(pt: CirclePoint) -> bool:
    """Exact test x² + y² = 1 with both coordinates in [0, 1]."""
    x, y = _require_rational(pt.x), _require_rational(pt.y)
    return 0 <= x <= 1 and 0 <= y <= 1 and x * x + y * y == ONE


def circle_point(r: Rational) -> CirclePoint:
    """
    Second intersection of the line y = r(x + 1) with the unit circle.

    Args:
        r (Rational): Slope in [0, 1]

    Returns:
        CirclePoint: ((1 - r²)/(1 + r²), 2r/(1 + r²))

    Raises:
        DomainError: r outside [0, 1]
    """
    r = _require_rational(r)
    if not 0 <= r <= 1:
        raise DomainError(f"slope must lie in [0, 1], got {r}")
    denom = 1 + r * r
    return CirclePoint(x=(1 - r * r) / denom, y=2 * r / denom)


def slope_of_point(pt: CirclePoint) -> Rational:
    """
    Slope y/(x + 1) of the line through (-1, 0) and pt.

    Raises:
        DomainError: pt not on the unit circle or outside the quadrant
    """
    if not on_unit_circle(pt):
        raise DomainError(f"({pt.x}, {pt.y}) is not a nonnegative point of the unit circle")
    return Fraction(pt.y) / (Fraction(pt.x) + 1)


def normalize_odd_odd(p: int, q: int) -> tuple[int, int]:
    """
    Replace an odd-odd irreducible slope p/q by the distinct-parity pair
    ((q - p)/2, (q + p)/2) that swaps the roles of the two coordinates.

    Args:
        p (int): Odd, p ≤ q
        q (int): Odd, coprime to p

    Returns:
        tuple[int, int]: (p', q')

    Raises:
        DomainError: p, q not both odd, not coprime, or p > q
    """
    require_nat(p=p, q=q)
    if p > q or p % 2 == 0 or q % 2 == 0 or not rel_prime(p, q):
        raise DomainError(f"normalize_odd_odd needs odd coprime p <= q; got p={p}, q={q}")
    return (q - p) // 2, (q + p) // 2


def expand_even_first(p: int, q: int) -> tuple[int, int]:
    """
    Inverse of normalize_odd_odd: a distinct-parity pair back to the odd pair
    (q - p, q + p).

    Raises:
        DomainError: (p, q) does not satisfy cond_pq
    """
    if not cond_pq(p, q):
        raise DomainError(f"expand_even_first needs cond_pq; got p={p}, q={q}")
    return q - p, q + p


def point_of_triple(t: Triple) -> CirclePoint:
    """
    The point (a/c, b/c) attached to a nonzero Pythagorean triple.

    Raises:
        DomainError: c = 0 or a² + b² ≠ c²
    """
    a, b, c = t
    require_nat(a=a, b=b, c=c)
    if c == 0 or a * a + b * b != c * c:
        raise DomainError(f"{tuple(t)} is not a nonzero Pythagorean triple")
    return CirclePoint(x=Fraction(a, c), y=Fraction(b, c))


def scale_point(pt: CirclePoint, m: int) -> Triple:
    """
    Triple (m·a, m·b, m·c) where (a/c, b/c) is pt over its least common denominator.
    """
    require_nat(m=m)
    if not on_unit_circle(pt):
        raise DomainError(f"({pt.x}, {pt.y}) is not a nonnegative point of the unit circle")
    x, y = Fraction(pt.x), Fraction(pt.y)
    c = lcm(x.denominator, y.denominator)
    a = x.numerator * (c // x.denominator)
    b = y.numerator * (c // y.denominator)
    return Triple(m * a, m * b, m * c)
