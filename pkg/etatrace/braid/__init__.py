"""
Quantum Weyl group operators on modules, Lusztig's automorphisms and the classical sign epsilon.
"""

from .classical import Epsilon, classical_coxeter_on_zero_space, epsilon_classical
from .lusztig import Generator, all_generators, lusztig_T_on_generator, verify_ts_conjugation
from .operators import (
    BraidOperator,
    compose,
    coxeter_closure,
    coxeter_operator,
    s_operator,
    s_operator_via_exponentials,
    s_squared_check,
    theta_operator,
    trace,
    verify_braid_relations,
    weight_shift_check,
)
from .strings import IString, istring_decompose, string_sizes

__all__ = [
    "IString",
    "istring_decompose",
    "string_sizes",
    "BraidOperator",
    "s_operator",
    "s_operator_via_exponentials",
    "compose",
    "coxeter_operator",
    "coxeter_closure",
    "theta_operator",
    "trace",
    "verify_braid_relations",
    "s_squared_check",
    "weight_shift_check",
    "Generator",
    "all_generators",
    "lusztig_T_on_generator",
    "verify_ts_conjugation",
    "Epsilon",
    "classical_coxeter_on_zero_space",
    "epsilon_classical",
]
