import random
from fractions import Fraction
from math import gcd as reference_gcd

import pytest
from hypothesis import given, strategies as st

from errors import DomainError, InternalLogicError, NotPairwiseCoprime, ProductNotSquare
from features.numeric import (
    distinct_parity,
    gauss_divides,
    gcd,
    is_square,
    isqrt,
    make_rational,
    prop1_holds,
    prop2_holds,
    prop3_holds,
    prop4_decompose,
    rel_prime,
)
from features.numeric import propositions


@pytest.mark.parametrize("a,b,expected", ((12, 8, 4), (0, 5, 5), (35, 64, 1), (0, 0, 0)))
def test_gcd_examples(a, b, expected):
    assert gcd(a, b) == expected


@pytest.mark.parametrize("a,b,expected", ((1, 2, True), (2, 4, False), (0, 1, True), (0, 0, False)))
def test_rel_prime_examples(a, b, expected):
    assert rel_prime(a, b) is expected


@pytest.mark.parametrize("a,b,expected", ((1, 2, True), (3, 5, False), (0, 1, True), (0, 0, False)))
def test_distinct_parity_examples(a, b, expected):
    assert distinct_parity(a, b) is expected


@pytest.mark.parametrize("value", (-1, 1.5, "4", True))
def test_negative_or_non_integer_input_is_rejected(value):
    with pytest.raises(DomainError):
        isqrt(value)


@given(st.integers(min_value=0, max_value=1000), st.integers(min_value=0, max_value=1000))
def test_gcd_invariants(a, b):
    g = gcd(a, b)
    assert g == gcd(b, a)
    assert gcd(a, 0) == a
    if g:
        assert a % g == 0 and b % g == 0
    assert g == reference_gcd(a, b)


@pytest.mark.parametrize("n,expected", ((49, 7), (50, 7), (0, 0), (1, 1), (2, 1), (65535, 255), (65536, 256)))
def test_isqrt_examples(n, expected):
    assert isqrt(n) == expected


def test_isqrt_and_is_square_up_to_a_million():
    for n in range(10 ** 6 + 1):
        r = isqrt(n)
        assert r * r <= n < (r + 1) * (r + 1)
        assert (is_square(n) is not None) == (r * r == n)


def test_isqrt_big_integer():
    n = 10 ** 40 + 12345
    r = isqrt(n)
    assert r * r <= n < (r + 1) ** 2
    assert is_square((10 ** 30 + 7) ** 2) == 10 ** 30 + 7


@pytest.mark.parametrize("n,expected", ((49, 7), (0, 0), (41, None)))
def test_is_square_examples(n, expected):
    assert is_square(n) == expected


@pytest.mark.parametrize("num,den,expected", ((4, 8, Fraction(1, 2)), (0, 5, Fraction(0, 1)), (3, 3, Fraction(1))))
def test_make_rational_reduces(num, den, expected):
    r = make_rational(num, den)
    assert r == expected
    assert r.denominator >= 1
    assert reference_gcd(r.numerator, r.denominator) == 1


def test_make_rational_zero_denominator():
    with pytest.raises(DomainError):
        make_rational(1, 0)


@pytest.mark.parametrize("m,n", ((4, 3), (5, 2), (2, 1)))
def test_prop1_examples(m, n):
    assert prop1_holds(m, n) is True


@pytest.mark.parametrize("m,n", ((3, 1), (4, 2), (2, 3)))
def test_prop1_rejects_bad_hypotheses(m, n):
    with pytest.raises(DomainError):
        prop1_holds(m, n)


@pytest.mark.parametrize("m,n", ((3, 2), (1, 0), (5, 4)))
def test_prop2_examples(m, n):
    assert prop2_holds(m, n) is True


@pytest.mark.parametrize("m,n", ((3, 2), (1, 1), (7, 4)))
def test_prop3_examples(m, n):
    assert prop3_holds(m, n) is True


def test_prop2_and_prop3_reject_bad_hypotheses():
    with pytest.raises(DomainError):
        prop2_holds(4, 2)
    with pytest.raises(DomainError):
        prop2_holds(2, 3)
    with pytest.raises(DomainError):
        prop3_holds(2, 4)


def test_propositions_exhaustive_up_to_500():
    for m in range(1, 501):
        for n in range(0, m + 1):
            if reference_gcd(m, n) != 1:
                continue
            assert prop2_holds(m, n)
            assert prop3_holds(m, n)
            if n < m and (m - n) % 2 == 1:
                assert prop1_holds(m, n)


@pytest.mark.parametrize("factors,roots", (([9, 16], [3, 4]), ([1, 1], [1, 1]), ([], []), ([0, 1], [0, 1])))
def test_prop4_examples(factors, roots):
    assert prop4_decompose(factors) == roots


def test_prop4_errors():
    with pytest.raises(ProductNotSquare):
        prop4_decompose([2, 3])
    with pytest.raises(NotPairwiseCoprime):
        prop4_decompose([4, 8])


def test_prop4_root_extraction_failure_is_internal(monkeypatch):
    fake_roots = {6: 0}
    monkeypatch.setattr(propositions, "is_square", lambda n: fake_roots.get(n))
    with pytest.raises(InternalLogicError):
        prop4_decompose([2, 3])


@given(st.lists(st.integers(min_value=1, max_value=1000), max_size=8))
def test_prop4_round_trip(candidates):
    roots = []
    for value in candidates:
        if all(reference_gcd(value, r) == 1 for r in roots):
            roots.append(value)
    assert prop4_decompose([r * r for r in roots]) == roots


@pytest.mark.parametrize("d,a,b", ((3, 4, 6), (1, 5, 7)))
def test_gauss_examples(d, a, b):
    assert gauss_divides(d, a, b) is True


@pytest.mark.parametrize("d,a,b", ((6, 4, 9), (0, 1, 0), (5, 2, 3)))
def test_gauss_rejects_bad_hypotheses(d, a, b):
    with pytest.raises(DomainError):
        gauss_divides(d, a, b)


def test_gauss_randomized():
    rng = random.Random(20240611)
    checked = 0
    while checked < 10_000:
        a = rng.randint(0, 10 ** 6)
        d = rng.randint(1, 10 ** 6)
        if reference_gcd(a, d) != 1:
            continue
        b = d * rng.randint(0, 10 ** 6)
        assert gauss_divides(d, a, b)
        checked += 1
