"""
Numeric Feature
---------------
Exact integer/rational arithmetic and the coprimality lemmas.
"""
from .arithmetic import (
    Rational,
    require_nat,
    gcd,
    rel_prime,
    distinct_parity,
    isqrt,
    is_square,
    make_rational,
)
from .propositions import (
    prop1_holds,
    prop2_holds,
    prop3_holds,
    prop4_decompose,
    gauss_divides,
)

__all__ = [
    # Types and validation
    'Rational',
    'require_nat',
    # Arithmetic primitives
    'gcd',
    'rel_prime',
    'distinct_parity',
    'isqrt',
    'is_square',
    'make_rational',
    # Coprimality lemmas
    'prop1_holds',
    'prop2_holds',
    'prop3_holds',
    'prop4_decompose',
    'gauss_divides',
]
