from math import isqrt

import pytest

BRUTE_FORCE_LIMIT = 1000


def brute_force_triples(limit: int) -> set:
    """Every ordered (a, b, c) with a² + b² = c² and c ≤ limit, by double loop."""
    found = set()
    for a in range(limit + 1):
        for b in range(a, limit + 1):
            c_sq = a * a + b * b
            if c_sq > limit * limit:
                break
            c = isqrt(c_sq)
            if c * c == c_sq:
                found.add((a, b, c))
                found.add((b, a, c))
    return found


@pytest.fixture(scope="session")
def brute_triples():
    return brute_force_triples(BRUTE_FORCE_LIMIT)
