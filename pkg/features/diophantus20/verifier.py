"""
Diophantus 20 Verifiers
-----------------------
Bounded exhaustive searches for a counterexample to each form of the
problem. Every search is split into scan_* functions over a sub-range of
its outer index so the CLI can run disjoint ranges in parallel and merge
the results in range order.
"""
import logging
from dataclasses import dataclass
from typing import Optional, Tuple

from features.numeric import is_square, rel_prime, require_nat
from features.pythagoras import enumerate_triples

from .step import DescentState

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SearchWitness:
    """x² + y² = z² and xy = 2t² with all four positive; never expected."""
    x: int
    y: int
    z: int
    t: int

    def to_dict(self) -> dict:
        return {"x": self.x, "y": self.y, "z": self.z, "t": self.t}


@dataclass(frozen=True)
class ScanResult:
    """Outcome of scanning one sub-range: how many states, which failed."""
    states_checked: int = 0
    counterexamples: Tuple[dict, ...] = ()

    def merge(self, other: "ScanResult") -> "ScanResult":
        return ScanResult(
            states_checked=self.states_checked + other.states_checked,
            counterexamples=self.counterexamples + other.counterexamples,
        )


def _coprime_partners(big: int):
    """Every small with 1 ≤ small < big, coprime to big, of the other parity."""
    for small in range(1 + big % 2, big, 2):
        if rel_prime(small, big):
            yield small


def scan_pq_square(lo: int, hi: int) -> ScanResult:
    """
    States (p, q) with lo ≤ q ≤ hi for which pq(q² - p²) is a square.

    Args:
        lo (int): Smallest q
        hi (int): Largest q

    Returns:
        ScanResult: counterexamples as {"p", "q"} dicts
    """
    require_nat(lo=lo, hi=hi)
    checked = 0
    found = []
    for q in range(max(lo, 1), hi + 1):
        for p in _coprime_partners(q):
            checked += 1
            if is_square(p * q * (q * q - p * p)) is not None:
                logger.warning("pq(q²-p²) is a square at p=%d, q=%d", p, q)
                found.append(DescentState(p, q).to_dict())
    logger.debug("pq_square scanned q in [%d, %d]: %d states", lo, hi, checked)
    return ScanResult(checked, tuple(found))


def verify_pq_square(bound: int) -> Optional[DescentState]:
    """
    First valid state with q ≤ bound whose claim holds.

    Returns:
        Optional[DescentState]: None when no counterexample exists
    """
    result = scan_pq_square(1, bound)
    if result.counterexamples:
        return DescentState(**result.counterexamples[0])
    return None


def scan_diophantus20(lo: int, hi: int) -> ScanResult:
    """
    Positive triples with lo ≤ z ≤ hi whose half product of legs is a square.

    Returns:
        ScanResult: counterexamples as SearchWitness dicts
    """
    require_nat(lo=lo, hi=hi)
    triples = enumerate_triples(hi, primitive_only=False, include_degenerate=False, c_min=max(lo, 1))
    found = []
    for x, y, z in triples:
        t = is_square(x * y // 2)
        if t is not None and t >= 1:
            logger.warning("right triangle (%d, %d, %d) has square area %d²", x, y, z, t)
            found.append(SearchWitness(x, y, z, t).to_dict())
    logger.debug("dio20 scanned z in [%d, %d]: %d triples", lo, hi, len(triples))
    return ScanResult(len(triples), tuple(found))


def verify_diophantus20(bound: int) -> Optional[SearchWitness]:
    """
    First (x, y, z, t) with z ≤ bound, x² + y² = z² and xy = 2t².

    Returns:
        Optional[SearchWitness]: None when no counterexample exists
    """
    result = scan_diophantus20(1, bound)
    if result.counterexamples:
        return SearchWitness(**result.counterexamples[0])
    return None


def scan_right_triangle_premise(lo: int, hi: int) -> ScanResult:
    """
    Pairs n < m with lo ≤ m ≤ hi, coprime with distinct parities, such that
    m² + n² and m² - n² are both squares.

    Returns:
        ScanResult: counterexamples as {"m", "n"} dicts
    """
    require_nat(lo=lo, hi=hi)
    checked = 0
    found = []
    for m in range(max(lo, 1), hi + 1):
        for n in _coprime_partners(m):
            checked += 1
            if is_square(m * m + n * n) is not None and is_square(m * m - n * n) is not None:
                logger.warning("m=%d, n=%d: sum and difference of squares are squares", m, n)
                found.append({"m": m, "n": n})
    logger.debug("right_triangle scanned m in [%d, %d]: %d pairs", lo, hi, checked)
    return ScanResult(checked, tuple(found))


def verify_right_triangle_premise(bound: int) -> Optional[Tuple[int, int]]:
    """
    First (m, n) with 1 ≤ n < m ≤ bound whose squares have square sum and difference.

    Returns:
        Optional[Tuple[int, int]]: None when no counterexample exists
    """
    result = scan_right_triangle_premise(1, bound)
    if result.counterexamples:
        hit = result.counterexamples[0]
        return hit["m"], hit["n"]
    return None
