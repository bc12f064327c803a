"""
Exact Arithmetic
----------------
Nonnegative-integer and rational primitives. Python integers are unbounded,
so nothing here can wrap; every result is an exact identity.
"""
import math
from fractions import Fraction
from typing import Optional

from errors import DomainError

# Reduced fraction with nonnegative numerator and positive denominator.
Rational = Fraction


def require_nat(**values: int) -> None:
    """
    Check that every keyword argument is a nonnegative int.

    Raises:
        DomainError: naming the first offending argument
    """
    for name, value in values.items():
        if isinstance(value, bool) or not isinstance(value, int):
            raise DomainError(f"{name} must be an integer, got {value!r}")
        if value < 0:
            raise DomainError(f"{name} must be nonnegative, got {value}")


def gcd(a: int, b: int) -> int:
    """
    Greatest common divisor of two naturals, with gcd(0, 0) = 0.

    Args:
        a (int): First operand
        b (int): Second operand

    Returns:
        int: The gcd
    """
    require_nat(a=a, b=b)
    return math.gcd(a, b)


def rel_prime(a: int, b: int) -> bool:
    """True iff gcd(a, b) = 1; note rel_prime(0, 1) holds."""
    return gcd(a, b) == 1


def distinct_parity(a: int, b: int) -> bool:
    """True iff exactly one of a, b is even (0 counts as even)."""
    require_nat(a=a, b=b)
    return (a - b) % 2 == 1


def isqrt(n: int) -> int:
    """
    Floor of the square root, integer arithmetic only.

    Args:
        n (int): Natural number

    Returns:
        int: r with r² ≤ n < (r+1)²
    """
    require_nat(n=n)
    return math.isqrt(n)


def is_square(n: int) -> Optional[int]:
    """
    Exact square root when n is a perfect square.

    Args:
        n (int): Natural number

    Returns:
        Optional[int]: i with i·i = n, or None
    """
    root = isqrt(n)
    if root * root == n:
        return root
    return None


def make_rational(num: int, den: int) -> Rational:
    """
    Build a reduced nonnegative fraction.

    Args:
        num (int): Numerator
        den (int): Denominator, at least 1

    Returns:
        Rational: num/den in lowest terms

    Raises:
        DomainError: zero denominator or negative part
    """
    require_nat(num=num, den=den)
    if den == 0:
        raise DomainError("zero denominator")
    return Fraction(num, den)

