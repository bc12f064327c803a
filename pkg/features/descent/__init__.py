"""
Descent Feature
---------------
Generic infinite-descent engine with measure-audited traces.
"""
from .engine import (
    Smaller,
    Refuted,
    StepOutcome,
    DescentTrace,
    run_descent,
    check_trace,
)

__all__ = [
    # Step outcomes and traces
    'Smaller',
    'Refuted',
    'StepOutcome',
    'DescentTrace',
    # Engine
    'run_descent',
    'check_trace',
]
