"""
Diophantus 20 Descent Step
--------------------------
One step of Fermat's descent for "can pq(q² - p²) be a square?".

From a state (p, q) the step extracts the square roots the argument needs,
one at a time: q = m², p = n², p + q = u², q - p = v², then s and w from
whichever of u ± v is a multiple of 4, s = a², w = b², and finally the
smaller state (p', q') read off the triple (b², 2a², m). The first
extraction that fails refutes the state. Checks after the fourth one can
only fail if the coprimality lemmas are false; they are still executed and
reported as InternalAssertionFailed.
"""
import logging
from dataclasses import asdict, dataclass
from enum import Enum
from typing import NamedTuple, Optional, Tuple

from errors import DomainError, InternalLogicError, NumberTheoryError
from features.descent import DescentTrace, Refuted, Smaller, StepOutcome, run_descent
from features.numeric import gcd, is_square, rel_prime, require_nat
from features.pythagoras import Orientation, Triple, classify, cond_pq

logger = logging.getLogger(__name__)


class RefutationStage(str, Enum):
    Q_NOT_SQUARE = "QNotSquare"
    P_NOT_SQUARE = "PNotSquare"
    SUM_NOT_SQUARE = "SumNotSquare"
    DIFF_NOT_SQUARE = "DiffNotSquare"
    S_NOT_SQUARE = "SNotSquare"
    W_NOT_SQUARE = "WNotSquare"
    INTERNAL_ASSERTION_FAILED = "InternalAssertionFailed"


# Stages a valid state can actually stop at.
REACHABLE_STAGES = frozenset({
    RefutationStage.Q_NOT_SQUARE,
    RefutationStage.P_NOT_SQUARE,
    RefutationStage.SUM_NOT_SQUARE,
    RefutationStage.DIFF_NOT_SQUARE,
})


class Branch(str, Enum):
    DIFF_IS_MULTIPLE_OF_4 = "DiffIsMultipleOf4"
    SUM_IS_MULTIPLE_OF_4 = "SumIsMultipleOf4"


class DescentState(NamedTuple):
    """Claim under descent: pq(q² - p²) is a square."""
    p: int
    q: int

    def to_dict(self) -> dict:
        return {"p": self.p, "q": self.q}


@dataclass(frozen=True)
class Refutation:
    stage: RefutationStage
    detail: str = ""


@dataclass
class DescentStepRecord:
    """Intermediates of one step; a field stays None until its stage is reached."""
    m: Optional[int] = None
    n: Optional[int] = None
    u: Optional[int] = None
    v: Optional[int] = None
    branch: Optional[Branch] = None
    s: Optional[int] = None
    w: Optional[int] = None
    a: Optional[int] = None
    b: Optional[int] = None
    k_prime: Optional[int] = None
    p_prime: Optional[int] = None
    q_prime: Optional[int] = None

    def to_dict(self) -> dict:
        populated = {key: value for key, value in asdict(self).items() if value is not None}
        if self.branch is not None:
            populated["branch"] = self.branch.value
        return populated


def validate_state(st: DescentState) -> DescentState:
    """
    Check the state invariants: 1 ≤ p ≤ q, coprime, distinct parities.

    Raises:
        DomainError: an invariant fails
    """
    p, q = st
    require_nat(p=p, q=q)
    if p < 1:
        raise DomainError(f"descent state needs p >= 1, got p={p}")
    if not cond_pq(p, q):
        raise DomainError(f"descent state needs p <= q coprime with distinct parity; got ({p}, {q})")
    return DescentState(p, q)


def state_measure(st: DescentState) -> int:
    """p + q, which is m² + n² once q = m² and p = n²."""
    return st.p + st.q


def claim_holds(st: DescentState) -> bool:
    """True iff p·q·(q² - p²) is a perfect square."""
    p, q = validate_state(st)
    return is_square(p * q * (q * q - p * p)) is not None


def surface(k: int, p: int, q: int) -> int:
    """
    Area k²pq(q² - p²) of the right triangle generated by (k, p, q).

    Raises:
        DomainError: cond_pq fails
    """
    require_nat(k=k)
    if not cond_pq(p, q):
        raise DomainError(f"cond_pq fails for p={p}, q={q}")
    return k * k * p * q * (q * q - p * p)


def uv_split(u: int, v: int) -> Tuple[int, int, Branch]:
    """
    Split odd coprime u > v into (s, w) using the one of u ± v divisible by 4.

    Args:
        u (int): Odd, u > v
        v (int): Odd, v ≥ 1, coprime to u

    Returns:
        Tuple of (s, w, branch): u - v = 4s, u + v = 2w for DIFF_IS_MULTIPLE_OF_4,
        u + v = 4s, u - v = 2w for SUM_IS_MULTIPLE_OF_4

    Raises:
        DomainError: preconditions not met
    """
    require_nat(u=u, v=v)
    if not (u > v >= 1 and u % 2 == 1 and v % 2 == 1 and rel_prime(u, v)):
        raise DomainError(f"uv_split needs odd coprime u > v >= 1; got u={u}, v={v}")

    if (u - v) % 4 == 0:
        s, w, branch = (u - v) // 4, (u + v) // 2, Branch.DIFF_IS_MULTIPLE_OF_4
    else:
        s, w, branch = (u + v) // 4, (u - v) // 2, Branch.SUM_IS_MULTIPLE_OF_4

    if not (rel_prime(s, w) and w % 2 == 1):
        raise InternalLogicError(f"uv_split({u}, {v}) gave s={s}, w={w}: not coprime with w odd")
    return s, w, branch


def check_uv(u: int, v: int) -> None:
    """
    u and v odd and coprime with gcd(u + v, u - v) = 2.

    Raises:
        InternalLogicError: any of the three fails
    """
    if u % 2 == 0 or v % 2 == 0:
        raise InternalLogicError(f"u={u}, v={v} are not both odd")
    if not rel_prime(u, v):
        raise InternalLogicError(f"u={u}, v={v} are not coprime")
    if gcd(u + v, u - v) != 2:
        raise InternalLogicError(f"gcd(u+v, u-v) = {gcd(u + v, u - v)}, expected 2")


def check_quartic_relation(v: int, a: int, b: int, m: int, branch: Branch) -> None:
    """
    v = ±(b² - 2a²) according to the branch, and m² = b⁴ + 4a⁴.

    Raises:
        InternalLogicError: either identity fails
    """
    if branch is Branch.DIFF_IS_MULTIPLE_OF_4:
        expected_v = b * b - 2 * a * a
    else:
        expected_v = 2 * a * a - b * b
    if v != expected_v:
        raise InternalLogicError(f"v={v} but the {branch.value} branch gives {expected_v}")
    if m * m != b ** 4 + 4 * a ** 4:
        raise InternalLogicError(f"m²={m * m} differs from b⁴+4a⁴={b ** 4 + 4 * a ** 4}")


def descend_triple(a: int, b: int, m: int) -> Tuple[int, int, int]:
    """
    Parametrize (b², 2a², m) and return (k', p', q') with k' = 1,
    b² = q'² - p'² and a² = p'q'.

    Raises:
        InternalLogicError: the triple is not Pythagorean, k' ≠ 1, or the
            identities do not hold
    """
    triple = Triple(b * b, 2 * a * a, m)
    try:
        param = classify(triple)
    except NumberTheoryError as exc:
        raise InternalLogicError(f"({triple.a}, {triple.b}, {triple.c}) is not parametrizable: {exc}") from exc

    if param.m != 1 or param.orientation is not Orientation.ODD_FIRST:
        raise InternalLogicError(f"{tuple(triple)} classified as {param}, expected k'=1 odd first")
    if b * b != param.q ** 2 - param.p ** 2 or a * a != param.p * param.q:
        raise InternalLogicError(f"{param} does not give b²=q'²-p'² and a²=p'q'")
    return param.m, param.p, param.q


class _Stop(Exception):
    def __init__(self, stage: RefutationStage, detail: str = ""):
        super().__init__(detail)
        self.stage = stage
        self.detail = detail


def _root_or_stop(value: int, stage: RefutationStage, label: str) -> int:
    root = is_square(value)
    if root is None:
        raise _Stop(stage, f"{label}={value} is not a square")
    return root


def descent_step(st: DescentState) -> StepOutcome:
    """
    One descent step with a full intermediate record.

    Args:
        st (DescentState): Valid state with p ≥ 1

    Returns:
        Smaller(DescentState(p', q'), record) or Refuted(Refutation, record)

    Raises:
        DomainError: st violates the state invariants
    """
    p, q = validate_state(st)
    record = DescentStepRecord()

    try:
        record.m = _root_or_stop(q, RefutationStage.Q_NOT_SQUARE, "q")
        record.n = _root_or_stop(p, RefutationStage.P_NOT_SQUARE, "p")
        record.u = _root_or_stop(p + q, RefutationStage.SUM_NOT_SQUARE, "p+q")
        record.v = _root_or_stop(q - p, RefutationStage.DIFF_NOT_SQUARE, "q-p")

        check_uv(record.u, record.v)
        record.s, record.w, record.branch = uv_split(record.u, record.v)

        record.a = _root_or_stop(record.s, RefutationStage.S_NOT_SQUARE, "s")
        record.b = _root_or_stop(record.w, RefutationStage.W_NOT_SQUARE, "w")

        check_quartic_relation(record.v, record.a, record.b, record.m, record.branch)
        record.k_prime, record.p_prime, record.q_prime = descend_triple(record.a, record.b, record.m)

        # q' + p' ≤ b² < b² + 2a² = u ≤ u² = p + q
        b_sq = record.b * record.b
        if not (record.p_prime + record.q_prime <= b_sq < b_sq + 2 * record.a ** 2 == record.u <= p + q):
            raise InternalLogicError(f"measure chain fails for {record.to_dict()}")
        try:
            next_state = validate_state(DescentState(record.p_prime, record.q_prime))
        except DomainError as exc:
            raise InternalLogicError(f"descended state is invalid: {exc}") from exc
    except _Stop as stop:
        logger.debug("state (%d, %d) refuted at %s: %s", p, q, stop.stage.value, stop.detail)
        return Refuted(reason=Refutation(stop.stage, stop.detail), record=record)
    except (InternalLogicError, DomainError) as exc:
        logger.error("state (%d, %d): internal assertion failed: %s", p, q, exc)
        return Refuted(
            reason=Refutation(RefutationStage.INTERNAL_ASSERTION_FAILED, str(exc)),
            record=record,
        )

    logger.info("state (%d, %d) descended to (%d, %d)", p, q, *next_state)
    return Smaller(next=next_state, record=record)


def refute(st: DescentState) -> DescentTrace[DescentState]:
    """
    Run the descent from st to its refutation.

    Returns:
        DescentTrace: length at most p + q + 1, terminal is a Refutation
    """
    return run_descent(validate_state(st), descent_step, state_measure)
