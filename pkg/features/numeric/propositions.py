"""
Coprimality Lemmas
------------------
The coprimality and square-decomposition facts the descent relies on, plus
Gauss divisibility, as checked evaluations. Each function validates its
hypotheses, then evaluates the conclusion instead of assuming it.
"""
import logging
from itertools import combinations
from math import prod
from typing import List, Sequence

from errors import DomainError, InternalLogicError, NotPairwiseCoprime, ProductNotSquare

from .arithmetic import distinct_parity, is_square, rel_prime, require_nat

logger = logging.getLogger(__name__)


def prop1_holds(m: int, n: int) -> bool:
    """
    For n < m coprime with distinct parities, m+n and m-n are coprime.

    Args:
        m (int): Larger operand
        n (int): Smaller operand

    Returns:
        bool: rel_prime(m+n, m-n)

    Raises:
        DomainError: hypotheses not met
    """
    require_nat(m=m, n=n)
    if not (n < m and rel_prime(m, n) and distinct_parity(m, n)):
        raise DomainError(f"prop1 needs n < m, coprime, distinct parity; got m={m}, n={n}")
    return rel_prime(m + n, m - n)


def prop2_holds(m: int, n: int) -> bool:
    """
    For n ≤ m coprime, m², n² are coprime and m, n are each
    coprime to m² - n².
    """
    require_nat(m=m, n=n)
    if not (n <= m and rel_prime(m, n)):
        raise DomainError(f"prop2 needs n <= m and coprime; got m={m}, n={n}")
    diff = m * m - n * n
    return rel_prime(m * m, n * n) and rel_prime(m, diff) and rel_prime(n, diff)


def prop3_holds(m: int, n: int) -> bool:
    """Coprime squares have coprime roots."""
    require_nat(m=m, n=n)
    if not rel_prime(m * m, n * n):
        raise DomainError(f"prop3 needs m², n² coprime; got m={m}, n={n}")
    return rel_prime(m, n)


def prop4_decompose(factors: Sequence[int]) -> List[int]:
    """
    Pairwise coprime factors whose product is a square are squares.

    Args:
        factors: Pairwise coprime naturals

    Returns:
        List[int]: Square root of each factor, in order

    Raises:
        NotPairwiseCoprime: some pair shares a divisor
        ProductNotSquare: the product is not a perfect square
        InternalLogicError: a factor is not a square although the hypotheses hold
    """
    for i, value in enumerate(factors):
        require_nat(**{f"factors[{i}]": value})

    for (i, x), (j, y) in combinations(enumerate(factors), 2):
        if not rel_prime(x, y):
            raise NotPairwiseCoprime(f"factors[{i}]={x} and factors[{j}]={y} are not coprime")

    product = prod(factors)
    if is_square(product) is None:
        raise ProductNotSquare(f"product {product} is not a square")

    roots = []
    for value in factors:
        root = is_square(value)
        if root is None:
            logger.error("prop4: factor %d of square product %d is not a square", value, product)
            raise InternalLogicError(f"factor {value} is not a square")
        roots.append(root)
    return roots


def gauss_divides(d: int, a: int, b: int) -> bool:
    """
    If d divides a·b and gcd(a, d) = 1 then d divides b.

    Args:
        d (int): Divisor, at least 1
        a (int): Factor coprime to d
        b (int): Other factor

    Returns:
        bool: d | b

    Raises:
        DomainError: hypotheses not met
    """
    require_nat(d=d, a=a, b=b)
    if d < 1:
        raise DomainError("gauss needs d >= 1")
    if (a * b) % d != 0:
        raise DomainError(f"gauss needs d | ab; {d} does not divide {a * b}")
    if not rel_prime(a, d):
        raise DomainError(f"gauss needs gcd(a, d) = 1; gcd({a}, {d}) != 1")
    return b % d == 0
