"""
Property Suite Runner
---------------------
Seeded randomized checks of the coprimality lemmas and round-trip laws. Each
property draws from its own random.Random stream derived from the seed and
the property name, so the sampled cases do not depend on which other
properties run.
"""
import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from features.diophantus20 import uv_split
from features.numeric import (
    distinct_parity,
    gauss_divides,
    gcd,
    prop1_holds,
    prop2_holds,
    prop3_holds,
    prop4_decompose,
    rel_prime,
)
from features.pythagoras import (
    Orientation,
    Parametrization,
    circle_point,
    classify,
    generate,
    normalize_odd_odd,
    on_unit_circle,
    slope_of_point,
)
from utils import load_yaml_config

logger = logging.getLogger(__name__)

# A sampler draws one case and reports whether the property held on it.
Sampler = Callable[[random.Random, dict], Tuple[dict, bool]]


@dataclass
class PropertyResult:
    name: str
    trials: int
    seed: int
    failures: int = 0
    first_failure: Optional[dict] = field(default=None)

    def to_dict(self) -> dict:
        result = {
            "property": self.name,
            "trials": self.trials,
            "failures": self.failures,
            "seed": self.seed,
        }
        if self.first_failure is not None:
            result["first_failure"] = self.first_failure
        return result


def load_catalogue() -> Dict[str, dict]:
    """Property settings from properties.yaml, keyed by name."""
    return load_yaml_config(__file__, 'properties.yaml')['properties']


def _sample_prop1(rng: random.Random, cfg: dict) -> Tuple[dict, bool]:
    while True:
        m = rng.randint(1, cfg['max_value'])
        n = rng.randint(0, m - 1)
        if rel_prime(m, n) and distinct_parity(m, n):
            return {"m": m, "n": n}, prop1_holds(m, n)


def _sample_prop2(rng: random.Random, cfg: dict) -> Tuple[dict, bool]:
    while True:
        m = rng.randint(1, cfg['max_value'])
        n = rng.randint(0, m)
        if rel_prime(m, n):
            return {"m": m, "n": n}, prop2_holds(m, n)


def _sample_prop3(rng: random.Random, cfg: dict) -> Tuple[dict, bool]:
    while True:
        m = rng.randint(0, cfg['max_value'])
        n = rng.randint(0, cfg['max_value'])
        if rel_prime(m * m, n * n):
            return {"m": m, "n": n}, prop3_holds(m, n)


def _sample_prop4(rng: random.Random, cfg: dict) -> Tuple[dict, bool]:
    length = rng.randint(1, cfg['max_length'])
    roots: List[int] = []
    while len(roots) < length:
        candidate = rng.randint(1, cfg['max_value'])
        if all(rel_prime(candidate, r) for r in roots):
            roots.append(candidate)
    return {"roots": roots}, prop4_decompose([r * r for r in roots]) == roots


def _sample_gauss(rng: random.Random, cfg: dict) -> Tuple[dict, bool]:
    while True:
        a = rng.randint(1, cfg['max_value'])
        d = rng.randint(1, cfg['max_value'])
        if rel_prime(a, d):
            break
    b = d * rng.randint(0, cfg['max_value'])
    return {"d": d, "a": a, "b": b}, gauss_divides(d, a, b)


def _sample_uv_gcd(rng: random.Random, cfg: dict) -> Tuple[dict, bool]:
    while True:
        u = rng.randrange(3, cfg['max_value'] + 1, 2)
        v = rng.randrange(1, u, 2)
        if rel_prime(u, v):
            break
    s, w, _ = uv_split(u, v)
    holds = gcd(u + v, u - v) == 2 and rel_prime(s, w) and w % 2 == 1
    return {"u": u, "v": v}, holds


def _sample_circle(rng: random.Random, cfg: dict) -> Tuple[dict, bool]:
    q = rng.randint(1, cfg['max_value'])
    r = Fraction(rng.randint(0, q), q)
    pt = circle_point(r)
    return {"r": str(r)}, on_unit_circle(pt) and slope_of_point(pt) == r


def _sample_classify(rng: random.Random, cfg: dict) -> Tuple[dict, bool]:
    while True:
        q = rng.randint(1, cfg['max_value'])
        p = rng.randint(0, q)
        if rel_prime(p, q) and distinct_parity(p, q):
            break
    orientation = rng.choice([Orientation.ODD_FIRST, Orientation.EVEN_FIRST])
    param = Parametrization(m=rng.randint(1, cfg['max_m']), p=p, q=q, orientation=orientation)
    return param.to_dict(), classify(generate(param)) == param


def _sample_normalize(rng: random.Random, cfg: dict) -> Tuple[dict, bool]:
    while True:
        q = rng.randrange(1, cfg['max_value'] + 1, 2)
        p = rng.randrange(1, q + 1, 2)
        if rel_prime(p, q):
            break
    p2, q2 = normalize_odd_odd(p, q)
    old_hyp, new_hyp = p * p + q * q, p2 * p2 + q2 * q2
    holds = (
        rel_prime(p2, q2)
        and distinct_parity(p2, q2)
        and p2 <= q2
        and Fraction(q * q - p * p, old_hyp) == Fraction(2 * p2 * q2, new_hyp)
        and Fraction(2 * p * q, old_hyp) == Fraction(q2 * q2 - p2 * p2, new_hyp)
    )
    return {"p": p, "q": q}, holds


SAMPLERS: Dict[str, Sampler] = {
    'prop1': _sample_prop1,
    'prop2': _sample_prop2,
    'prop3': _sample_prop3,
    'prop4_round_trip': _sample_prop4,
    'gauss': _sample_gauss,
    'uv_gcd': _sample_uv_gcd,
    'circle_round_trip': _sample_circle,
    'classify_round_trip': _sample_classify,
    'normalize_identities': _sample_normalize,
}


def run_properties(trials: int, seed: int, names: Optional[Sequence[str]] = None) -> List[PropertyResult]:
    """
    Run each property on `trials` seeded random cases.

    Args:
        trials (int): Cases per property
        seed (int): Base seed; same seed, same cases, same verdicts
        names: Subset of property names, all when None

    Returns:
        List[PropertyResult]: One result per property, in catalogue order

    Raises:
        KeyError: unknown property name
    """
    catalogue = load_catalogue()
    selected = list(catalogue) if names is None else list(names)
    results = []
    for name in selected:
        cfg = catalogue[name]
        sampler = SAMPLERS[name]
        rng = random.Random(f"{seed}:{name}")
        result = PropertyResult(name=name, trials=trials, seed=seed)
        for _ in range(trials):
            try:
                case, holds = sampler(rng, cfg)
            except Exception as exc:
                case, holds = {"error": f"{type(exc).__name__}: {exc}"}, False
            if not holds:
                result.failures += 1
                if result.first_failure is None:
                    result.first_failure = case
                    logger.warning("property %s failed on %s", name, case)
        logger.info("property %s: %d/%d failures", name, result.failures, trials)
        results.append(result)
    return results
