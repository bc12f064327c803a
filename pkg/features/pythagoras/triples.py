"""
Pythagorean Triples
-------------------
Generation of triples from (m, p, q) parametrizations, canonical
classification of triples back into parametrizations through the unit
circle, and bounded enumeration.
"""
import logging
from typing import List

from errors import DomainError, InternalLogicError, InternalNonIntegral, NotPythagorean
from features.numeric import require_nat

from .circle import cond_pq, normalize_odd_odd, point_of_triple, slope_of_point
from .models import ZERO_PARAMETRIZATION, Orientation, Parametrization, Triple

logger = logging.getLogger(__name__)


def is_pytha(t: Triple) -> bool:
    """True iff a² + b² = c²."""
    a, b, c = t
    require_nat(a=a, b=b, c=c)
    return a * a + b * b == c * c


def swap_legs(t: Triple) -> Triple:
    """(b, a, c)."""
    return Triple(t[1], t[0], t[2])


def generate(param: Parametrization) -> Triple:
    """
    Build the triple of a parametrization.

    Args:
        param (Parametrization): (m, p, q, orientation) with cond_pq on (p, q)

    Returns:
        Triple: (m(q²-p²), 2mpq, m(p²+q²)), legs swapped for EVEN_FIRST

    Raises:
        DomainError: cond_pq fails or m is negative
    """
    m, p, q, orientation = param
    require_nat(m=m)
    if not cond_pq(p, q):
        raise DomainError(f"cond_pq fails for p={p}, q={q}")

    odd_leg = m * (q * q - p * p)
    even_leg = 2 * m * p * q
    hypotenuse = m * (p * p + q * q)
    if Orientation(orientation) is Orientation.EVEN_FIRST:
        return Triple(even_leg, odd_leg, hypotenuse)
    return Triple(odd_leg, even_leg, hypotenuse)


def classify(t: Triple) -> Parametrization:
    """
    Canonical parametrization of a Pythagorean triple.

    The slope of (a/c, b/c) seen from (-1, 0) is b/(a + c); in lowest terms it
    gives (p, q). An odd-odd slope is normalized and flips the orientation.
    The multiplier is c/(p² + q²).

    Args:
        t (Triple): Pythagorean triple

    Returns:
        Parametrization: P with generate(P) == t

    Raises:
        NotPythagorean: a² + b² ≠ c²
        InternalNonIntegral: c not a multiple of p² + q²
    """
    t = Triple(*t)
    if not is_pytha(t):
        raise NotPythagorean(f"{tuple(t)} is not a Pythagorean triple")
    if t.c == 0:
        return ZERO_PARAMETRIZATION

    r = slope_of_point(point_of_triple(t))
    p, q = r.numerator, r.denominator
    orientation = Orientation.ODD_FIRST
    if p % 2 == 1 and q % 2 == 1:
        p, q = normalize_odd_odd(p, q)
        orientation = Orientation.EVEN_FIRST

    m, remainder = divmod(t.c, p * p + q * q)
    if remainder:
        raise InternalNonIntegral(f"c={t.c} is not a multiple of p²+q²={p * p + q * q}")

    param = Parametrization(m=m, p=p, q=q, orientation=orientation)
    if generate(param) != t:
        logger.error("classify(%s) produced %s which does not regenerate the triple", t, param)
        raise InternalLogicError(f"classification of {tuple(t)} does not round-trip")
    return param


def enumerate_triples(
    c_bound: int,
    primitive_only: bool = False,
    include_degenerate: bool = False,
    c_min: int = 0,
) -> List[Triple]:
    """
    All triples with c_min ≤ c ≤ c_bound, one per unordered pair of legs.

    Args:
        c_bound (int): Largest hypotenuse
        primitive_only (bool): Keep only m = 1
        include_degenerate (bool): Keep triples with a zero side
        c_min (int): Smallest hypotenuse, used to split the range

    Returns:
        List[Triple]: OddFirst triples sorted by (c, a)
    """
    require_nat(c_bound=c_bound, c_min=c_min)
    found: List[Triple] = []
    if include_degenerate and not primitive_only and c_min == 0:
        found.append(generate(ZERO_PARAMETRIZATION))

    q = 1
    while q * q <= c_bound:
        for p in range(0, q):
            c0 = p * p + q * q
            if c0 > c_bound:
                break
            if p == 0 and not include_degenerate:
                continue
            if not cond_pq(p, q):
                continue
            m_lo = max(1, -(-c_min // c0))
            m_hi = 1 if primitive_only else c_bound // c0
            for m in range(m_lo, m_hi + 1):
                found.append(generate(Parametrization(m=m, p=p, q=q)))
        q += 1

    found.sort(key=lambda t: (t.c, t.a))
    logger.debug("enumerated %d triples with %d <= c <= %d", len(found), c_min, c_bound)
    return found
