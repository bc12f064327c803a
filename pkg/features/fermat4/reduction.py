"""
Fermat n=4 Reduction
--------------------
Reduces x⁴ + y⁴ = z⁴ to the coprime case and then to the non-squareness of
(z² + y²)(z² - y²), which the Diophantus 20 descent refutes.
"""
import logging
from dataclasses import dataclass
from typing import Optional, Tuple

from errors import DomainError
from features.descent import DescentTrace
from features.diophantus20 import DescentState, RefutationStage, refute
from features.numeric import distinct_parity, gcd, is_square, rel_prime, require_nat
from features.pythagoras import Triple, is_pytha

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Flt4Candidate:
    """x⁴ + y⁴ = z⁴ with x, y, z ≥ 1 if it is ever reported; never expected."""
    x: int
    y: int
    z: int

    def to_dict(self) -> dict:
        return {"x": self.x, "y": self.y, "z": self.z}


@dataclass(frozen=True)
class EquivRefutation:
    """Both refutation routes for one coprime distinct-parity pair (y, z)."""
    stage: RefutationStage
    trace: DescentTrace
    product: int
    product_root: Optional[int]

    @property
    def routes_agree(self) -> bool:
        return self.product_root is None


def coprime_reduce(y: int, z: int) -> Tuple[int, int, int]:
    """
    Divide out d = gcd(y, z).

    Args:
        y (int): Leg
        z (int): Hypotenuse

    Returns:
        Tuple of (d, y_r, z_r) with y = d·y_r, z = d·z_r, gcd(y_r, z_r) = 1

    Raises:
        DomainError: y = z = 0
    """
    require_nat(y=y, z=z)
    if y == 0 and z == 0:
        raise DomainError("coprime_reduce needs y and z not both zero")
    d = gcd(y, z)
    return d, y // d, z // d


def pytha_square_view(x: int, y: int, z: int) -> bool:
    """True iff (x², y², z²) is a Pythagorean triple, i.e. x⁴ + y⁴ = z⁴."""
    require_nat(x=x, y=y, z=z)
    return is_pytha(Triple(x * x, y * y, z * z))


def dio_equiv_refute(y: int, z: int) -> EquivRefutation:
    """
    Refute "(z² + y²)(z² - y²) is a square" along both routes: directly, and
    by running the descent on the state (p, q) = (y², z²).

    Args:
        y (int): y ≥ 1
        z (int): z ≥ y, coprime to y with the other parity

    Returns:
        EquivRefutation: descent stage, trace, and the direct square test

    Raises:
        DomainError: preconditions not met
    """
    require_nat(y=y, z=z)
    if not (1 <= y <= z and rel_prime(y, z) and distinct_parity(y, z)):
        raise DomainError(f"dio_equiv_refute needs 1 <= y <= z coprime with distinct parity; got ({y}, {z})")

    trace = refute(DescentState(p=y * y, q=z * z))
    product = (z * z + y * y) * (z * z - y * y)
    root = is_square(product)
    if root is not None:
        logger.error("(z²+y²)(z²-y²) = %d² for y=%d, z=%d", root, y, z)
    return EquivRefutation(
        stage=trace.terminal.stage,
        trace=trace,
        product=product,
        product_root=root,
    )
