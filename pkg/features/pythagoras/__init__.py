"""
Pythagoras Feature
------------------
Parametrization of Pythagorean triples in both directions.
"""
from .models import (
    Orientation,
    Triple,
    Parametrization,
    CirclePoint,
    ZERO_PARAMETRIZATION,
)
from .circle import (
    cond_pq,
    on_unit_circle,
    circle_point,
    slope_of_point,
    normalize_odd_odd,
    expand_even_first,
    point_of_triple,
    scale_point,
)
from .triples import (
    is_pytha,
    swap_legs,
    generate,
    classify,
    enumerate_triples,
)

__all__ = [
    # Models
    'Orientation',
    'Triple',
    'Parametrization',
    'CirclePoint',
    'ZERO_PARAMETRIZATION',
    # Unit circle
    'cond_pq',
    'on_unit_circle',
    'circle_point',
    'slope_of_point',
    'normalize_odd_odd',
    'expand_even_first',
    'point_of_triple',
    'scale_point',
    # Triples
    'is_pytha',
    'swap_legs',
    'generate',
    'classify',
    'enumerate_triples',
]
