from .checks import (
    CHECKS,
    BoundaryConditionCheck,
    ChiralMirrorCheck,
    ContactIndependenceCheck,
    ExchangeCheck,
    FormalShiftCheck,
    NormalizationCheck,
    PropertyCheck,
    build_checks,
    verify_boundary_conditions,
    verify_chiral_mirror,
    verify_contact_independence,
    verify_exchange,
    verify_formal_shift,
    verify_normalizations,
)
from .corpus import BoundCorpusState, CorpusState, TrapCorpusState, default_corpus
from .orchestrator import PropertySuiteOrchestrator, run_suite

__all__ = [
    'CHECKS',
    'BoundaryConditionCheck',
    'ChiralMirrorCheck',
    'ContactIndependenceCheck',
    'ExchangeCheck',
    'FormalShiftCheck',
    'NormalizationCheck',
    'PropertyCheck',
    'build_checks',
    'verify_boundary_conditions',
    'verify_chiral_mirror',
    'verify_contact_independence',
    'verify_exchange',
    'verify_formal_shift',
    'verify_normalizations',
    'BoundCorpusState',
    'CorpusState',
    'TrapCorpusState',
    'default_corpus',
    'PropertySuiteOrchestrator',
    'run_suite',
]
