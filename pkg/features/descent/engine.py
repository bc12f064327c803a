"""
Infinite Descent Engine
-----------------------
Runs a step function from an initial state until it refutes, checking that
every transition strictly decreases a natural-number measure. Since no
strictly decreasing sequence of naturals is infinite, a run from a state of
measure k makes at most k + 1 calls to the step function.
"""
import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Generic, Mapping, Tuple, TypeVar, Union

from errors import MeasureViolation

logger = logging.getLogger(__name__)

S = TypeVar("S")


@dataclass(frozen=True)
class Smaller(Generic[S]):
    """The claim at the current state implies the claim at a smaller one."""
    next: S
    record: Any = None


@dataclass(frozen=True)
class Refuted:
    """The claim at the current state is false; reason says where it broke."""
    reason: Any
    record: Any = None


StepOutcome = Union[Smaller, Refuted]


@dataclass(frozen=True)
class DescentTrace(Generic[S]):
    """
    Audit trail of one descent: visited states, their measures, the final
    refutation and whatever record each step attached.
    """
    states: Tuple[S, ...]
    measures: Tuple[int, ...]
    terminal: Any
    records: Tuple[Any, ...] = field(default=())

    def __len__(self) -> int:
        return len(self.states)


def _measure_of(measure: Callable[[S], int], state: S) -> int:
    value = measure(state)
    if isinstance(value, bool) or not isinstance(value, int) or value < 0:
        raise MeasureViolation(f"measure of {state!r} is {value!r}, not a natural number")
    return value


def run_descent(
    initial: S,
    step: Callable[[S], StepOutcome],
    measure: Callable[[S], int],
) -> DescentTrace[S]:
    """
    Iterate step from initial until it returns Refuted.

    Args:
        initial: Starting state
        step: State -> Smaller(next) | Refuted(reason)
        measure: State -> natural number

    Returns:
        DescentTrace: states, measures, terminal reason and step records

    Raises:
        MeasureViolation: a Smaller transition did not decrease the measure
    """
    states = [initial]
    measures = [_measure_of(measure, initial)]
    records = []

    while True:
        outcome = step(states[-1])
        if not isinstance(outcome, (Smaller, Refuted)):
            raise TypeError(f"step returned {outcome!r}, expected Smaller or Refuted")
        records.append(outcome.record)

        if isinstance(outcome, Refuted):
            logger.debug("descent refuted after %d states: %s", len(states), outcome.reason)
            return DescentTrace(
                states=tuple(states),
                measures=tuple(measures),
                terminal=outcome.reason,
                records=tuple(records),
            )

        next_measure = _measure_of(measure, outcome.next)
        if next_measure >= measures[-1]:
            raise MeasureViolation(
                f"step from {states[-1]!r} (measure {measures[-1]}) "
                f"to {outcome.next!r} (measure {next_measure}) does not descend"
            )
        logger.debug("descent %s -> %s, measure %d -> %d",
                     states[-1], outcome.next, measures[-1], next_measure)
        states.append(outcome.next)
        measures.append(next_measure)


def check_trace(trace: Union[DescentTrace, Mapping[str, Any]]) -> bool:
    """
    Independent audit of a trace, live or deserialized.

    Args:
        trace: DescentTrace, or a mapping with "states" and "measures" lists

    Returns:
        bool: measures are naturals, strictly decreasing, one per state, and
        the length is at most measures[0] + 1
    """
    if isinstance(trace, Mapping):
        states, measures = trace.get("states"), trace.get("measures")
        if measures is None:
            return False
        if states is None:
            states = measures
    else:
        states, measures = trace.states, trace.measures

    if len(measures) == 0 or len(states) != len(measures):
        return False
    if any(isinstance(m, bool) or not isinstance(m, int) or m < 0 for m in measures):
        return False
    if any(later >= earlier for earlier, later in zip(measures, measures[1:])):
        return False
    return len(measures) <= measures[0] + 1
