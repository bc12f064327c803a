"""
Property Suite Feature
----------------------
Seeded randomized runs of the coprimality lemmas and round-trip laws.
"""
from .runner import (
    PropertyResult,
    SAMPLERS,
    load_catalogue,
    run_properties,
)

__all__ = [
    'PropertyResult',
    'SAMPLERS',
    'load_catalogue',
    'run_properties',
]
