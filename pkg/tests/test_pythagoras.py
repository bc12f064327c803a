from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, strategies as st

from errors import DomainError, NotPythagorean
from features.pythagoras import (
    CirclePoint,
    Orientation,
    Parametrization,
    Triple,
    circle_point,
    classify,
    cond_pq,
    enumerate_triples,
    expand_even_first,
    generate,
    is_pytha,
    normalize_odd_odd,
    on_unit_circle,
    point_of_triple,
    scale_point,
    slope_of_point,
    swap_legs,
)

ODD = Orientation.ODD_FIRST
EVEN = Orientation.EVEN_FIRST


@pytest.mark.parametrize("triple,expected", (((3, 4, 5), True), ((0, 0, 0), True), ((1, 1, 1), False), ((5, 12, 13), True)))
def test_is_pytha_examples(triple, expected):
    assert is_pytha(Triple(*triple)) is expected


@pytest.mark.parametrize("p,q,expected", ((1, 2, True), (0, 1, True), (1, 3, False), (2, 4, False), (3, 2, False), (0, 0, False)))
def test_cond_pq_examples(p, q, expected):
    assert cond_pq(p, q) is expected


@pytest.mark.parametrize("param,triple", (
    (Parametrization(1, 1, 2, ODD), (3, 4, 5)),
    (Parametrization(0, 0, 1, ODD), (0, 0, 0)),
    (Parametrization(2, 1, 2, EVEN), (8, 6, 10)),
    (Parametrization(1, 2, 3, ODD), (5, 12, 13)),
    (Parametrization(3, 0, 1, ODD), (3, 0, 3)),
))
def test_generate_examples(param, triple):
    assert generate(param) == triple


@pytest.mark.parametrize("param", (Parametrization(1, 1, 3), Parametrization(1, 2, 1), Parametrization(1, 2, 4)))
def test_generate_rejects_bad_pairs(param):
    with pytest.raises(DomainError):
        generate(param)


def test_generate_is_sound():
    for q in range(1, 51):
        for p in range(0, q + 1):
            if not cond_pq(p, q):
                continue
            for m in range(0, 21):
                for orientation in Orientation:
                    assert is_pytha(generate(Parametrization(m, p, q, orientation)))


@pytest.mark.parametrize("triple,param", (
    ((3, 4, 5), Parametrization(1, 1, 2, ODD)),
    ((8, 6, 10), Parametrization(2, 1, 2, EVEN)),
    ((0, 0, 0), Parametrization(0, 0, 1, ODD)),
    ((4, 3, 5), Parametrization(1, 1, 2, EVEN)),
    ((0, 4, 4), Parametrization(4, 0, 1, EVEN)),
    ((4, 0, 4), Parametrization(4, 0, 1, ODD)),
))
def test_classify_examples(triple, param):
    assert classify(Triple(*triple)) == param


def test_classify_rejects_non_pythagorean():
    with pytest.raises(NotPythagorean):
        classify(Triple(1, 2, 3))


def test_classify_round_trips_every_triple_up_to_1000(brute_triples):
    for triple in brute_triples:
        param = classify(Triple(*triple))
        assert cond_pq(param.p, param.q)
        assert generate(param) == triple


@pytest.mark.parametrize("orientation", list(Orientation))
def test_canonical_parametrizations_round_trip(orientation):
    for q in range(1, 31):
        for p in range(0, q + 1):
            if not cond_pq(p, q):
                continue
            for m in range(1, 11):
                param = Parametrization(m, p, q, orientation)
                assert classify(generate(param)) == param


def test_swap_legs():
    assert swap_legs(Triple(3, 4, 5)) == (4, 3, 5)
    assert classify(swap_legs(Triple(3, 4, 5))).orientation is EVEN


@pytest.mark.parametrize("r,point", (
    (Fraction(0), (Fraction(1), Fraction(0))),
    (Fraction(1), (Fraction(0), Fraction(1))),
    (Fraction(1, 2), (Fraction(3, 5), Fraction(4, 5))),
    (Fraction(2, 3), (Fraction(5, 13), Fraction(12, 13))),
))
def test_circle_point_examples(r, point):
    assert circle_point(r) == point


@pytest.mark.parametrize("r", (Fraction(3, 2), Fraction(-1, 2), 0.5))
def test_circle_point_rejects_out_of_range(r):
    with pytest.raises(DomainError):
        circle_point(r)


@pytest.mark.parametrize("point,slope", (
    (CirclePoint(Fraction(3, 5), Fraction(4, 5)), Fraction(1, 2)),
    (CirclePoint(Fraction(1), Fraction(0)), Fraction(0)),
    (CirclePoint(Fraction(0), Fraction(1)), Fraction(1)),
))
def test_slope_of_point_examples(point, slope):
    assert slope_of_point(point) == slope


def test_slope_of_point_rejects_points_off_the_circle():
    with pytest.raises(DomainError):
        slope_of_point(CirclePoint(Fraction(1, 2), Fraction(1, 2)))


def test_circle_round_trip_for_all_slopes_with_small_denominator():
    for q in range(1, 101):
        for p in range(0, q + 1):
            if gcd(p, q) != 1:
                continue
            r = Fraction(p, q)
            point = circle_point(r)
            assert on_unit_circle(point)
            assert slope_of_point(point) == r


@pytest.mark.parametrize("p,q,expected", ((1, 1, (0, 1)), (1, 3, (1, 2)), (3, 5, (1, 4))))
def test_normalize_odd_odd_examples(p, q, expected):
    assert normalize_odd_odd(p, q) == expected


@pytest.mark.parametrize("p,q", ((2, 3), (3, 9), (5, 3)))
def test_normalize_odd_odd_rejects(p, q):
    with pytest.raises(DomainError):
        normalize_odd_odd(p, q)


def test_normalize_odd_odd_identities():
    for q in range(1, 200, 2):
        for p in range(1, q + 1, 2):
            if gcd(p, q) != 1:
                continue
            p2, q2 = normalize_odd_odd(p, q)
            assert cond_pq(p2, q2)
            assert p * q == q2 * q2 - p2 * p2
            assert q * q - p * p == 4 * p2 * q2
            assert p * p + q * q == 2 * (p2 * p2 + q2 * q2)
            assert expand_even_first(p2, q2) == (p, q)


def test_expand_even_first():
    assert expand_even_first(1, 2) == (1, 3)
    assert expand_even_first(0, 1) == (1, 1)
    with pytest.raises(DomainError):
        expand_even_first(1, 3)


def test_point_of_triple_and_scale_point():
    point = point_of_triple(Triple(6, 8, 10))
    assert point == (Fraction(3, 5), Fraction(4, 5))
    assert scale_point(point, 2) == (6, 8, 10)
    with pytest.raises(DomainError):
        point_of_triple(Triple(0, 0, 0))


def test_enumerate_primitive_up_to_25():
    assert enumerate_triples(25, primitive_only=True) == [(3, 4, 5), (5, 12, 13), (15, 8, 17), (7, 24, 25)]


def test_enumerate_with_degenerate_at_zero():
    assert enumerate_triples(0, include_degenerate=True) == [(0, 0, 0)]
    assert enumerate_triples(0) == []


def test_enumeration_matches_brute_force_up_to_500(brute_triples):
    listed = enumerate_triples(500, primitive_only=False, include_degenerate=True)
    assert len(listed) == len(set(listed))
    closed = set(listed) | {swap_legs(t) for t in listed}
    assert closed == {t for t in brute_triples if t[2] <= 500}


def test_primitive_enumeration_is_primitive():
    for a, b, c in enumerate_triples(500, primitive_only=True):
        assert gcd(gcd(a, b), c) == 1
        assert a % 2 == 1


@given(st.integers(min_value=1, max_value=300), st.integers(min_value=1, max_value=300))
def test_enumeration_ranges_split_cleanly(split, extra):
    upper = split + extra
    whole = enumerate_triples(upper)
    lower = enumerate_triples(split)
    higher = enumerate_triples(upper, c_min=split + 1)
    assert lower + higher == whole
