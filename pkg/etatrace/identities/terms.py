"""
Per-weight trace terms: Tr(Pi, V(lambda)) = epsilon(lambda) q^((lambda, lambda + 2 rho) / h).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Optional

from ..braid import coxeter_operator, epsilon_classical, trace
from ..errors import TraceShapeError
from ..qmodule import IrrModule, ModuleRegistry, default_registry
from ..qseries import RatFunc
from ..rootdata import (
    RootDatum,
    Weight,
    WeightLike,
    c_lambda,
    coxeter_exponent,
    in_root_lattice,
    weyl_dim,
)
from ..rootdata.weights import _dominant

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TraceTerm:
    """
    One summand of the series identities.

    Attributes:
        lam: Dominant highest weight
        dim: dim V(lambda)
        epsilon: Sign of the Coxeter trace, 0 off the root lattice
        exponent: (lambda, lambda + 2 rho) / h
        c_lambda: (lambda, lambda + 2 rho) / k
        trace: Exact Tr(Pi, V(lambda)_0) when it was computed
    """

    lam: Weight
    dim: int
    epsilon: int
    exponent: Fraction
    c_lambda: Fraction
    trace: Optional[RatFunc] = field(default=None, compare=False)

    @property
    def coefficient(self) -> int:
        return self.epsilon * self.dim

    def to_dict(self) -> Dict[str, Any]:
        return {
            "lambda": list(self.lam.coords),
            "dim": self.dim,
            "epsilon": self.epsilon,
            "exponent": str(self.exponent),
            "c_lambda": str(self.c_lambda),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "TraceTerm":
        return cls(
            lam=Weight(tuple(data["lambda"])),
            dim=int(data["dim"]),
            epsilon=int(data["epsilon"]),
            exponent=Fraction(data["exponent"]),
            c_lambda=Fraction(data["c_lambda"]),
        )


def zero_weight(datum: RootDatum) -> Weight:
    return Weight.zero(datum.rank)


def quantum_trace_term(
    datum: RootDatum,
    lam: WeightLike,
    registry: Optional[ModuleRegistry] = None,
    check_classical: bool = True,
    full_trace: bool = False,
) -> TraceTerm:
    """
    Compute Tr(Pi, V(lambda)) exactly and read off epsilon(lambda).

    Only the zero weight space is traced. Pi maps V_mu onto V_(c mu), and the
    Coxeter element c fixes no nonzero weight, so Tr(Pi, V(lambda)) equals
    Tr(Pi, V(lambda)_0). Weights off the root lattice have no zero weight and
    give epsilon = 0 without building a module. With ``full_trace`` the module
    is always built and the trace over all of V(lambda) is compared as well.

    Args:
        datum: Root datum
        lam: Dominant highest weight
        registry: Module source (default: the process-wide registry)
        check_classical: Also compute epsilon from the classical module and compare
        full_trace: Also trace Pi on the whole module and compare

    Returns:
        TraceTerm carrying the exact trace

    Raises:
        TraceShapeError: If the trace is not +-q^e with e = (lambda, lambda + 2 rho)/h,
            the quantum and classical signs differ, or the full trace disagrees
        SizeLimitExceeded: If V(lambda) is above the registry's size limit

    Example:
        >>> from etatrace.rootdata import build_root_datum
        >>> term = quantum_trace_term(build_root_datum("A2"), (1, 1))
        >>> term.epsilon, term.dim, term.exponent
        (-1, 8, Fraction(2, 1))
    """
    w = _dominant(datum, lam)
    dim = weyl_dim(datum, w)
    exponent = coxeter_exponent(datum, w)
    c = c_lambda(datum, w)
    reg = registry if registry is not None else default_registry
    if not in_root_lattice(datum, w):
        if full_trace:
            _compare_full_trace(datum, reg.quantum(datum, w), RatFunc(0))
        return TraceTerm(w, dim, 0, exponent, c, RatFunc(0))

    m = reg.quantum(datum, w)
    zero = zero_weight(datum)
    value = trace(coxeter_operator(m, [zero]), zero)
    if full_trace:
        _compare_full_trace(datum, m, value)
    if value.is_zero():
        epsilon = 0
    else:
        shape = value.monomial_exponent()
        if shape is None or shape[0] not in (1, -1) or Fraction(shape[1]) != exponent:
            raise TraceShapeError(
                f"Tr(Pi, V({w})) of {datum.lie_type} is {value}, "
                f"expected +-q^{exponent} or 0"
            )
        epsilon = int(shape[0])
    if check_classical:
        classical = epsilon_classical(datum, w, reg)
        if classical != epsilon:
            raise TraceShapeError(
                f"V({w}) of {datum.lie_type}: quantum sign {epsilon} "
                f"differs from classical sign {classical}"
            )
    logger.info("lambda=(%s): dim %d, epsilon %d, exponent %s", w, dim, epsilon, exponent)
    return TraceTerm(w, dim, epsilon, exponent, c, value)


def _compare_full_trace(datum: RootDatum, m: IrrModule, expected: RatFunc) -> None:
    full = trace(coxeter_operator(m))
    if full != expected:
        raise TraceShapeError(
            f"Tr(Pi, V({m.lam})) of {datum.lie_type} is {full}, "
            f"but the zero weight space gives {expected}"
        )
