"""
Diophantus 20 Feature
---------------------
Descent step for pq(q² - p²) with full audit record, and exhaustive verifiers
for Diophantus' 20th problem and Fermat's right-triangle premise.
"""
from .step import (
    RefutationStage,
    REACHABLE_STAGES,
    Branch,
    DescentState,
    Refutation,
    DescentStepRecord,
    validate_state,
    state_measure,
    claim_holds,
    surface,
    uv_split,
    check_uv,
    check_quartic_relation,
    descend_triple,
    descent_step,
    refute,
)
from .verifier import (
    SearchWitness,
    ScanResult,
    scan_pq_square,
    verify_pq_square,
    scan_diophantus20,
    verify_diophantus20,
    scan_right_triangle_premise,
    verify_right_triangle_premise,
)

__all__ = [
    # Types
    'RefutationStage',
    'REACHABLE_STAGES',
    'Branch',
    'DescentState',
    'Refutation',
    'DescentStepRecord',
    # Descent step
    'validate_state',
    'state_measure',
    'claim_holds',
    'surface',
    'uv_split',
    'check_uv',
    'check_quartic_relation',
    'descend_triple',
    'descent_step',
    'refute',
    # Verifiers
    'SearchWitness',
    'ScanResult',
    'scan_pq_square',
    'verify_pq_square',
    'scan_diophantus20',
    'verify_diophantus20',
    'scan_right_triangle_premise',
    'verify_right_triangle_premise',
]
