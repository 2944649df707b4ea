"""
Both sides of the eta-function identities as truncated series, and their comparison.
"""

from __future__ import annotations

import logging
import time
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import Dict, List, Optional, Tuple, Union

from ..braid import epsilon_classical
from ..checks import CheckReport
from ..converters import parse_fraction
from ..qmodule import ModuleRegistry, default_registry
from ..qseries import (
    QSeries,
    TwoVariableSeries,
    euler_phi,
    euler_phi_two_variable,
    series_pow,
    series_product,
)
from ..rootdata import (
    RootDatum,
    Weight,
    c_lambda,
    coxeter_exponent,
    enumerate_contributing_weights,
    in_root_lattice,
    weyl_dim,
)
from .reports import TWO_VARIABLE, IdentityReport
from .terms import TraceTerm, quantum_trace_term

logger = logging.getLogger(__name__)

Rational = Union[int, Fraction, str]

MAIN = "main"
KOSTANT = "kostant"

#: Cutoffs keeping every contributing module within the default size limit.
DEFAULT_CUTOFFS: Dict[str, Fraction] = {
    "A1": Fraction(40),
    "A2": Fraction(8),
    "A3": Fraction(5),
    "B2": Fraction(6),
    "G2": Fraction(5),
}


def default_cutoff(datum: RootDatum) -> Fraction:
    """Tabulated cutoff for the type, or 3 for types without one."""
    return DEFAULT_CUTOFFS.get(datum.lie_type.name, Fraction(3))


def _cutoff(value: Rational) -> Fraction:
    cut = parse_fraction(value)
    if cut <= 0:
        raise ValueError(f"cutoff must be positive, got {cut}")
    return cut


def _sorted(terms: List[TraceTerm]) -> List[TraceTerm]:
    return sorted(terms, key=lambda t: (t.exponent, t.lam.coords))


def collect_terms(
    datum: RootDatum,
    cutoff: Rational,
    registry: Optional[ModuleRegistry] = None,
    threads: int = 1,
    check_classical: bool = True,
) -> List[TraceTerm]:
    """
    Trace terms for every dominant lambda with (lambda, lambda + 2 rho)/h below the cutoff.

    With ``threads > 1`` the weights are processed on a thread pool; the result
    is sorted by (exponent, lambda) either way.
    """
    weights = enumerate_contributing_weights(datum, _cutoff(cutoff))
    reg = registry if registry is not None else default_registry
    logger.info("%s: %d dominant weights below %s", datum.lie_type, len(weights), cutoff)

    def one(w: Weight) -> TraceTerm:
        return quantum_trace_term(datum, w, reg, check_classical)

    if threads > 1 and len(weights) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            terms = list(pool.map(one, weights))
    else:
        terms = [one(w) for w in weights]
    return _sorted(terms)


def series_from_terms(terms: List[TraceTerm], cutoff: Rational) -> QSeries:
    """sum of epsilon * dim * x^exponent."""
    coeffs: Dict[Fraction, Fraction] = {}
    for t in terms:
        if t.epsilon:
            coeffs[t.exponent] = coeffs.get(t.exponent, Fraction(0)) + t.coefficient
    return QSeries(coeffs, _cutoff(cutoff))


def lhs_series(
    datum: RootDatum,
    cutoff: Rational,
    registry: Optional[ModuleRegistry] = None,
    threads: int = 1,
) -> QSeries:
    """
    sum over dominant lambda of epsilon(lambda) dim V(lambda) x^((lambda, lambda + 2 rho)/h).

    Example:
        >>> from etatrace.rootdata import build_root_datum
        >>> str(lhs_series(build_root_datum("A1"), 3))
        '1 - 3x^2'
    """
    return series_from_terms(collect_terms(datum, cutoff, registry, threads), cutoff)


def rhs_series(datum: RootDatum, cutoff: Rational) -> QSeries:
    """
    (prod_i phi(x^(alpha_i, alpha_i)))^(h + 1), truncated.

    Example:
        >>> from etatrace.rootdata import build_root_datum
        >>> str(rhs_series(build_root_datum("A1"), 3))
        '1 - 3x^2'
    """
    cut = _cutoff(cutoff)
    product = series_product(euler_phi(2 * d, cut) for d in datum.symmetrizers)
    return series_pow(product, datum.coxeter_number + 1)


def _elapsed_ms(start: float) -> int:
    return int(round((time.perf_counter() - start) * 1000))


def _compare(
    identity: str,
    datum: RootDatum,
    cutoff: Fraction,
    lhs: QSeries,
    rhs: QSeries,
    terms: List[TraceTerm],
    start: float,
) -> IdentityReport:
    gap = lhs.first_discrepancy(rhs)
    report = IdentityReport(
        identity=identity,
        type_name=datum.lie_type.name,
        cutoff=cutoff,
        lhs=lhs,
        rhs=rhs,
        terms=terms,
        first_discrepancy=None if gap is None else gap.to_dict(),
        wall_time_ms=_elapsed_ms(start),
    )
    log = logger.info if report.match else logger.warning
    log("%s identity for %s below %s: match=%s", identity, datum.lie_type, cutoff, report.match)
    return report


def verify_main_identity(
    datum: RootDatum,
    cutoff: Rational,
    registry: Optional[ModuleRegistry] = None,
    threads: int = 1,
) -> IdentityReport:
    """
    Compare the Coxeter trace series with (prod_i phi(q^(alpha_i, alpha_i)))^(h+1) below the cutoff.

    Args:
        datum: Root datum
        cutoff: Exponents strictly below this are compared
        registry: Module source (default: the process-wide registry)
        threads: Worker threads for the per-weight traces

    Returns:
        IdentityReport with the first differing exponent if the series disagree

    Raises:
        SizeLimitExceeded: If a contributing module is above the size limit
    """
    start = time.perf_counter()
    cut = _cutoff(cutoff)
    terms = collect_terms(datum, cut, registry, threads)
    lhs = series_from_terms(terms, cut)
    return _compare(MAIN, datum, cut, lhs, rhs_series(datum, cut), terms, start)


def classical_terms(
    datum: RootDatum, cutoff: Rational, registry: Optional[ModuleRegistry] = None
) -> List[TraceTerm]:
    """Terms with c(lambda) below the cutoff, signs from classical modules only."""
    cut = _cutoff(cutoff)
    scaled = cut * datum.killing_constant / datum.coxeter_number
    terms = []
    for w in enumerate_contributing_weights(datum, scaled):
        eps = epsilon_classical(datum, w, registry) if in_root_lattice(datum, w) else 0
        terms.append(
            TraceTerm(w, weyl_dim(datum, w), eps, coxeter_exponent(datum, w), c_lambda(datum, w))
        )
    return _sorted(terms)


def kostant_product(datum: RootDatum, cutoff: Rational) -> QSeries:
    """(prod_i phi(x^(h Phi(alpha_i, alpha_i))))^(h+1) with Phi = (., .)/k."""
    cut = _cutoff(cutoff)
    h, k = datum.coxeter_number, datum.killing_constant
    product = series_product(euler_phi(Fraction(2 * d * h) / k, cut) for d in datum.symmetrizers)
    return series_pow(product, h + 1)


def verify_kostant_classical(
    datum: RootDatum, cutoff: Rational, registry: Optional[ModuleRegistry] = None
) -> IdentityReport:
    """
    Kostant's identity: the product side against sum epsilon(lambda) dim V_1(lambda) x^c(lambda).

    Uses classical modules only, so epsilon is checked end to end without the
    quantum construction.

    Example:
        >>> from etatrace.rootdata import build_root_datum
        >>> verify_kostant_classical(build_root_datum("A1"), 10).match
        True
    """
    start = time.perf_counter()
    cut = _cutoff(cutoff)
    terms = classical_terms(datum, cut, registry)
    coeffs: Dict[Fraction, Fraction] = {}
    for t in terms:
        if t.epsilon:
            coeffs[t.c_lambda] = coeffs.get(t.c_lambda, Fraction(0)) + t.coefficient
    rhs = QSeries(coeffs, cut)
    return _compare(KOSTANT, datum, cut, kostant_product(datum, cut), rhs, terms, start)


def two_variable_rhs(datum: RootDatum, cutoff_t: Rational) -> TwoVariableSeries:
    """(prod_i phi((q^k t^h)^Phi(alpha_i, alpha_i)))^(h+1), truncated in t."""
    cut = _cutoff(cutoff_t)
    h, k = datum.coxeter_number, datum.killing_constant
    product = TwoVariableSeries.one(cut)
    for d in datum.symmetrizers:
        product = product * euler_phi_two_variable(Fraction(2 * d * h) / k, 2 * d, cut)
    return product ** (h + 1)


def two_variable_series(
    datum: RootDatum,
    cutoff_t: Rational,
    registry: Optional[ModuleRegistry] = None,
    threads: int = 1,
) -> IdentityReport:
    """
    Two-variable identity: sum Tr(Pi, V(lambda)) dim V(lambda) t^c(lambda) against the product side.

    The left side needs every lambda with c(lambda) below the t-cutoff, i.e.
    (lambda, lambda + 2 rho)/h below cutoff_t * k / h.
    """
    start = time.perf_counter()
    cut = _cutoff(cutoff_t)
    terms = collect_terms(
        datum, cut * datum.killing_constant / datum.coxeter_number, registry, threads
    )
    lhs_terms: Dict[Tuple[Fraction, Fraction], Fraction] = {}
    for t in terms:
        if t.epsilon:
            key = (t.c_lambda, t.exponent)
            lhs_terms[key] = lhs_terms.get(key, Fraction(0)) + t.coefficient
    lhs = TwoVariableSeries(lhs_terms, cut)
    rhs = two_variable_rhs(datum, cut)
    gap = lhs.first_discrepancy(rhs)
    discrepancy = None
    if gap is not None:
        (t_exp, q_exp), a, b = gap
        discrepancy = {
            "t_exponent": str(t_exp),
            "q_exponent": str(q_exp),
            "lhs": str(a),
            "rhs": str(b),
        }
    report = IdentityReport(
        identity=TWO_VARIABLE,
        type_name=datum.lie_type.name,
        cutoff=cut,
        lhs=lhs,
        rhs=rhs,
        terms=terms,
        first_discrepancy=discrepancy,
        wall_time_ms=_elapsed_ms(start),
    )
    logger.info("two-variable identity for %s: match=%s", datum.lie_type, report.match)
    return report


def verify_simply_laced_form(datum: RootDatum, cutoff: Rational) -> CheckReport:
    """
    For simply laced types the product side collapses to phi(x^2)^(dim g).

    Raises:
        ValueError: If the type is not simply laced
    """
    if not datum.lie_type.is_simply_laced:
        raise ValueError(f"{datum.lie_type} is not simply laced")
    cut = _cutoff(cutoff)
    report = CheckReport(f"simply laced form for {datum.lie_type}")
    expected = series_pow(euler_phi(2, cut), datum.dim_g)
    report.add(
        f"rhs = phi(x^2)^{datum.dim_g} below {cut}",
        rhs_series(datum, cut).equals_to_cutoff(expected),
    )
    return report
