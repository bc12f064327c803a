"""
Fermat n=4 Feature
------------------
Coprime reduction, the bridge to the Diophantus 20 descent, and an
exhaustive verifier for x⁴ + y⁴ = z⁴.
"""
from .reduction import (
    Flt4Candidate,
    EquivRefutation,
    coprime_reduce,
    pytha_square_view,
    dio_equiv_refute,
)
from .verifier import (
    fourth_root,
    scan_flt4,
    verify_flt4,
)

__all__ = [
    # Types
    'Flt4Candidate',
    'EquivRefutation',
    # Reduction
    'coprime_reduce',
    'pytha_square_view',
    'dio_equiv_refute',
    # Verifier
    'fourth_root',
    'scan_flt4',
    'verify_flt4',
]
