"""
Exact scalar and series arithmetic: Laurent polynomials, rational functions in q,
q-integers and truncated formal series.
"""

from .laurent import (
    FIELD,
    LaurentPoly,
    RatFunc,
    field_monomial,
    field_qfactorial,
    field_qnum,
    q_symbol,
    qbinomial,
    qfactorial,
    qnum,
    ratfunc_eval_at_one,
)
from .series import (
    Discrepancy,
    QSeries,
    TwoVariableSeries,
    euler_phi,
    euler_phi_two_variable,
    jacobi_cube_series,
    partition_numbers,
    partition_series,
    pentagonal_series,
    series_eq_to_cutoff,
    series_inverse,
    series_mul,
    series_pow,
    series_product,
    series_sub,
)

__all__ = [
    # Scalars
    "FIELD",
    "LaurentPoly",
    "RatFunc",
    "q_symbol",
    "qnum",
    "qfactorial",
    "qbinomial",
    "ratfunc_eval_at_one",
    "field_monomial",
    "field_qnum",
    "field_qfactorial",
    # Series
    "QSeries",
    "TwoVariableSeries",
    "Discrepancy",
    "euler_phi",
    "euler_phi_two_variable",
    "pentagonal_series",
    "jacobi_cube_series",
    "partition_numbers",
    "partition_series",
    "series_mul",
    "series_sub",
    "series_pow",
    "series_inverse",
    "series_product",
    "series_eq_to_cutoff",
]
