"""
Built-in acceptance matrix: every structural check on a fixed set of small modules.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from ..braid import (
    coxeter_operator,
    s_operator,
    s_operator_via_exponentials,
    s_squared_check,
    trace,
    verify_braid_relations,
    verify_ts_conjugation,
    weight_shift_check,
)
from ..checks import CheckReport
from ..errors import TraceShapeError
from ..qmodule import (
    ModuleRegistry,
    default_registry,
    verify_classical_relations,
    verify_module_relations,
)
from ..rootdata import Weight, build_root_datum, coxeter_action_on_weights
from .reports import verify_theta_scalars
from .series import (
    DEFAULT_CUTOFFS,
    two_variable_series,
    verify_kostant_classical,
    verify_main_identity,
    verify_simply_laced_form,
)
from .terms import quantum_trace_term

logger = logging.getLogger(__name__)

Case = Tuple[int, ...]

#: Highest weights checked per type, with the cutoffs used for the identities.
#: Main cutoffs are the tabulated defaults.
ACCEPTANCE: Dict[str, Tuple[List[Case], Fraction, Fraction, Fraction]] = {
    # type: (weights, main cutoff, kostant cutoff, two-variable t-cutoff)
    "A1": ([(0,), (1,), (2,), (3,)], DEFAULT_CUTOFFS["A1"], Fraction(20), Fraction(4)),
    "A2": ([(0, 0), (1, 0), (0, 1), (1, 1)], DEFAULT_CUTOFFS["A2"], Fraction(4), Fraction(4)),
    "A3": (
        [(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 0, 1)],
        DEFAULT_CUTOFFS["A3"],
        Fraction(2),
        Fraction(1),
    ),
    "B2": ([(1, 0), (0, 1), (0, 2)], DEFAULT_CUTOFFS["B2"], Fraction(3), Fraction(2)),
    "G2": ([(1, 0), (0, 1)], DEFAULT_CUTOFFS["G2"], Fraction(2), Fraction(1)),
}

#: A3 runs only on request.
DEFAULT_TYPES: Tuple[str, ...] = ("A1", "A2", "B2", "G2")


def module_checks(type_name: str, lam: Case, registry: ModuleRegistry) -> CheckReport:
    """Relations, braid structure and theta scalars on one module."""
    datum = build_root_datum(type_name)
    m = registry.quantum(datum, lam)
    label = f"{type_name} V({Weight(lam)}) "
    report = CheckReport(f"{type_name} {lam}")
    report.extend(verify_module_relations(m), label)
    report.extend(verify_classical_relations(registry.classical(datum, lam)), label)
    report.extend(verify_braid_relations(m), label)
    for i in range(datum.rank):
        s = s_operator(m, i)
        report.add(
            f"{label}S{i + 1} closed form = q-exponential product",
            s == s_operator_via_exponentials(m, i),
        )
        report.extend(weight_shift_check(s), label)
        report.extend(s_squared_check(m, i), label)
        report.extend(verify_ts_conjugation(m, i, s), label)

    pi = coxeter_operator(m)
    zero = Weight.zero(datum.rank)
    if m.has_weight(zero):
        report.add(
            f"{label}Tr(Pi, V) = Tr(Pi, V_0)",
            trace(pi) == trace(pi, zero),
        )
    else:
        report.add(f"{label}Tr(Pi, V) = 0 without a zero weight", trace(pi).is_zero())
    moved = all(
        coxeter_action_on_weights(datum, mu) != mu for mu in m.weights() if not mu.is_zero()
    )
    report.add(f"{label}Pi fixes no nonzero weight", moved)

    theta = verify_theta_scalars(datum, lam, registry)
    report.extend(theta.checks, label)
    name = f"{label}Tr(Pi, V_0) = epsilon q^((lambda, lambda + 2 rho)/h)"
    try:
        term = quantum_trace_term(datum, lam, registry)
    except TraceShapeError as exc:
        report.add(name, False, str(exc))
    else:
        report.add(name, True, f"epsilon={term.epsilon}, exponent={term.exponent}")
    return report


def identity_checks(type_name: str, registry: ModuleRegistry) -> CheckReport:
    datum = build_root_datum(type_name)
    _, main_cut, kostant_cut, t_cut = ACCEPTANCE[type_name]
    report = CheckReport(f"{type_name} identities")
    for result in (
        verify_main_identity(datum, main_cut, registry),
        verify_kostant_classical(datum, kostant_cut, registry),
        two_variable_series(datum, t_cut, registry),
    ):
        detail = "" if result.match else str(result.first_discrepancy)
        name = f"{type_name} {result.identity} identity below {result.cutoff}"
        report.add(name, result.match, detail)
    if datum.lie_type.is_simply_laced:
        report.extend(verify_simply_laced_form(datum, main_cut))
    return report


def run_selftest(
    types: Optional[Sequence[str]] = None,
    registry: Optional[ModuleRegistry] = None,
) -> CheckReport:
    """
    Run the acceptance matrix for the given types (default: A1, A2, B2, G2).

    Structural failures are recorded, never raised; errors such as a
    size-limit abort propagate.

    Example:
        >>> run_selftest(["A1"]).passed
        True
    """
    reg = registry if registry is not None else default_registry
    names = [build_root_datum(t).lie_type.name for t in (types or DEFAULT_TYPES)]
    report = CheckReport("etatrace self-test")
    for name in names:
        if name not in ACCEPTANCE:
            raise ValueError(f"no acceptance cases for {name}; choose from {sorted(ACCEPTANCE)}")
        weights = ACCEPTANCE[name][0]
        for lam in weights:
            logger.info("self-test %s %s", name, lam)
            report.extend(module_checks(name, lam, reg))
        report.extend(identity_checks(name, reg))
    logger.info("self-test: %d checks, %d failures", len(report), len(report.failures()))
    return report


def summarize(report: CheckReport) -> str:
    """One line: the check count and the first failure, if any."""
    first = report.first_failure
    if first is None:
        return f"all {len(report)} checks passed"
    return f"{len(report.failures())} of {len(report)} checks failed; first: {first.name}"

