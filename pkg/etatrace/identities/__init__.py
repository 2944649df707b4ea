"""
Trace terms, the series identities built from them, and the self-test matrix.
"""

from .reports import TWO_VARIABLE, IdentityReport, ThetaReport, WeightScalar, verify_theta_scalars
from .selftest import ACCEPTANCE, DEFAULT_TYPES, run_selftest, summarize
from .series import (
    DEFAULT_CUTOFFS,
    KOSTANT,
    MAIN,
    classical_terms,
    collect_terms,
    default_cutoff,
    kostant_product,
    lhs_series,
    rhs_series,
    two_variable_rhs,
    two_variable_series,
    verify_kostant_classical,
    verify_main_identity,
    verify_simply_laced_form,
)
from .terms import TraceTerm, quantum_trace_term

__all__ = [
    "TraceTerm",
    "quantum_trace_term",
    "IdentityReport",
    "ThetaReport",
    "WeightScalar",
    "verify_theta_scalars",
    "MAIN",
    "KOSTANT",
    "TWO_VARIABLE",
    "DEFAULT_CUTOFFS",
    "default_cutoff",
    "collect_terms",
    "lhs_series",
    "rhs_series",
    "verify_main_identity",
    "classical_terms",
    "kostant_product",
    "verify_kostant_classical",
    "two_variable_rhs",
    "two_variable_series",
    "verify_simply_laced_form",
    "ACCEPTANCE",
    "DEFAULT_TYPES",
    "run_selftest",
    "summarize",
]
