"""
The classical Coxeter element on zero weight spaces and the sign epsilon(lambda).
"""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import Any, List, Optional

from sympy import QQ
from sympy.polys.matrices.sdm import SDM

from .. import linalg
from ..errors import NonInvariantSubspaceError, TraceShapeError
from ..linalg import Vector
from ..qmodule import ClassicalModule, ModuleRegistry, default_registry
from ..rootdata import RootDatum, WeightLike, as_weight, in_root_lattice

logger = logging.getLogger(__name__)

#: The trace of the Coxeter element on a zero weight space: -1, 0 or 1.
Epsilon = int


def exp_apply(x: SDM, vec: Vector) -> Vector:
    """exp(x) vec = sum_k x^k vec / k! for nilpotent x, over QQ."""
    total = dict(vec)
    term = dict(vec)
    k = 1
    while True:
        term = linalg.apply(x, term)
        if not term:
            return total
        term = linalg.vec_scale(term, QQ(1, k))
        total = linalg.vec_add(total, term)
        k += 1


def reflection_apply(m: ClassicalModule, i: int, vec: Vector) -> Vector:
    """s_i vec with s_i = exp(e_i) exp(-f_i) exp(e_i)."""
    minus_f = m.f[i].mul(QQ(-1))
    return exp_apply(m.e[i], exp_apply(minus_f, exp_apply(m.e[i], vec)))


def reflection_on_zero_space(m: ClassicalModule, i: int) -> SDM:
    """The block of s_i on V_1(lambda)_0, in local coordinates."""
    idx = m.weight_space_indices(as_weight((0,) * m.rank))
    position = {g: r for r, g in enumerate(idx)}
    columns: List[Vector] = []
    for g in idx:
        image = reflection_apply(m, i, {g: QQ(1)})
        if any(r not in position for r in image):
            raise NonInvariantSubspaceError(
                f"s_{i + 1} moves a zero-weight vector of V_1({m.lam}) out of the zero space"
            )
        columns.append({position[r]: v for r, v in image.items()})
    return linalg.from_columns(columns, len(idx), QQ)


def classical_coxeter_on_zero_space(
    datum: RootDatum,
    lam: WeightLike,
    registry: Optional[ModuleRegistry] = None,
) -> SDM:
    """
    Matrix of c = s_1 ... s_l on the zero weight space of V_1(lambda).

    Args:
        datum: Root datum
        lam: Dominant highest weight
        registry: Where to get the classical module (default: the process-wide registry)

    Returns:
        Square matrix over QQ; 0x0 when lambda is not in the root lattice
    """
    reg = registry if registry is not None else default_registry
    m = reg.classical(datum, lam)
    n = len(m.weight_space_indices(as_weight((0,) * m.rank)))
    result = linalg.identity(n, QQ)
    for i in range(datum.rank):
        result = result.matmul(reflection_on_zero_space(m, i))
    return result


def _to_fraction(value: Any) -> Fraction:
    return Fraction(int(value.numerator), int(value.denominator))


def epsilon_classical(
    datum: RootDatum,
    lam: WeightLike,
    registry: Optional[ModuleRegistry] = None,
) -> Epsilon:
    """
    epsilon(lambda) = Tr(c, V_1(lambda)_0).

    Zero without building anything when lambda is not in the root lattice.

    Raises:
        TraceShapeError: If the trace is not -1, 0 or 1

    Example:
        >>> from etatrace.rootdata import build_root_datum
        >>> epsilon_classical(build_root_datum("A1"), (2,))
        -1
        >>> epsilon_classical(build_root_datum("A1"), (1,))
        0
    """
    if not in_root_lattice(datum, lam):
        return 0
    block = classical_coxeter_on_zero_space(datum, lam, registry)
    value = _to_fraction(linalg.trace(block))
    if value not in (-1, 0, 1):
        raise TraceShapeError(
            f"classical Coxeter trace on V_1({as_weight(lam)})_0 of {datum.lie_type} is {value}"
        )
    logger.debug("epsilon(%s) = %s for %s", as_weight(lam), value, datum.lie_type)
    return int(value)
