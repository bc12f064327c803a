"""
Fermat n=4 Verifier
-------------------
Exhaustive search for x⁴ + y⁴ = z⁴ over 1 ≤ y < z ≤ bound.
"""
import logging
from typing import Optional

from features.diophantus20 import ScanResult
from features.numeric import is_square, require_nat

from .reduction import Flt4Candidate, coprime_reduce

logger = logging.getLogger(__name__)


def fourth_root(n: int) -> Optional[int]:
    """Exact fourth root through two nested square tests."""
    root = is_square(n)
    if root is None:
        return None
    return is_square(root)


def scan_flt4(lo: int, hi: int) -> ScanResult:
    """
    Pairs 1 ≤ y < z with lo ≤ z ≤ hi for which z⁴ - y⁴ is a fourth power.
    Since z⁴ - y⁴ = d⁴(z_r⁴ - y_r⁴) with d = gcd(y, z), the test runs on the
    coprime pair and the witness is scaled back by d.

    Returns:
        ScanResult: counterexamples as Flt4Candidate dicts
    """
    require_nat(lo=lo, hi=hi)
    checked = 0
    found = []
    for z in range(max(lo, 1), hi + 1):
        for y in range(1, z):
            checked += 1
            d, y_r, z_r = coprime_reduce(y, z)
            x_r = fourth_root(z_r ** 4 - y_r ** 4)
            if x_r is not None and x_r >= 1:
                logger.warning("x⁴ + y⁴ = z⁴ at x=%d, y=%d, z=%d", d * x_r, y, z)
                found.append(Flt4Candidate(d * x_r, y, z).to_dict())
    logger.debug("flt4 scanned z in [%d, %d]: %d pairs", lo, hi, checked)
    return ScanResult(checked, tuple(found))


def verify_flt4(bound: int) -> Optional[Flt4Candidate]:
    """
    First (x, y, z) with 1 ≤ y < z ≤ bound and x⁴ + y⁴ = z⁴.

    Returns:
        Optional[Flt4Candidate]: None when no counterexample exists
    """
    result = scan_flt4(1, bound)
    if result.counterexamples:
        return Flt4Candidate(**result.counterexamples[0])
    return None
