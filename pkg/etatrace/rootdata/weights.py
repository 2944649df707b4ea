"""
Weight diagrams of irreducible modules and the dominant weights entering the
trace identities.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import Dict, List, Union

from ..errors import InvalidWeightError
from .datum import (
    RootDatum,
    Weight,
    WeightLike,
    _check_len,
    as_weight,
    inner,
    iter_weights_in_box,
)

logger = logging.getLogger(__name__)

Rational = Union[int, Fraction, str]


def _dominant(datum: RootDatum, lam: WeightLike) -> Weight:
    w = as_weight(lam)
    _check_len(datum, w)
    if not w.is_dominant():
        raise InvalidWeightError(f"weight ({w}) is not dominant")
    return w


def weyl_dim(datum: RootDatum, lam: WeightLike) -> int:
    """
    Weyl dimension formula prod_{beta>0} (lambda+rho, beta) / (rho, beta).

    Example:
        >>> from etatrace.rootdata import build_root_datum
        >>> weyl_dim(build_root_datum("A2"), Weight((1, 1)))
        8
    """
    w = _dominant(datum, lam)
    shifted = w + datum.rho
    value = Fraction(1)
    for beta in datum.positive_roots:
        value *= inner(datum, shifted, beta) / inner(datum, datum.rho, beta)
    assert value.denominator == 1
    return int(value)


def freudenthal_multiplicities(datum: RootDatum, lam: WeightLike) -> Dict[Weight, int]:
    """
    Full weight diagram of V(lambda) by Freudenthal's recursion.

    Weights are produced level by level below lambda (level = height of
    lambda - mu); within a level they appear in discovery order, which is the
    order used by the module builder.

    Args:
        datum: Root datum
        lam: Dominant highest weight

    Returns:
        Ordered mapping weight -> multiplicity (all multiplicities positive)

    Example:
        >>> from etatrace.rootdata import build_root_datum
        >>> mults = freudenthal_multiplicities(build_root_datum("A2"), Weight((1, 1)))
        >>> mults[Weight((0, 0))], sum(mults.values())
        (2, 8)
    """
    w = _dominant(datum, lam)
    rank = datum.rank
    top = inner(datum, w + datum.rho, w + datum.rho)
    root_weights = [datum.root_to_weight(beta) for beta in datum.positive_roots]
    mults: Dict[Weight, int] = {w: 1}
    layer = [w]
    while layer:
        candidates: List[Weight] = []
        seen = set()
        for mu in layer:
            for i in range(rank):
                nu = mu - datum.simple_root_weight(i)
                if nu not in seen:
                    seen.add(nu)
                    candidates.append(nu)
        nxt: List[Weight] = []
        for nu in candidates:
            denom = top - inner(datum, nu + datum.rho, nu + datum.rho)
            if denom <= 0:
                continue
            numer = Fraction(0)
            for beta, beta_w in zip(datum.positive_roots, root_weights):
                shifted = nu + beta_w
                while shifted in mults:
                    numer += mults[shifted] * inner(datum, shifted, beta)
                    shifted = shifted + beta_w
            m = 2 * numer / denom
            if m:
                assert m.denominator == 1 and m > 0, f"bad multiplicity {m} at {nu}"
                mults[nu] = int(m)
                nxt.append(nu)
        layer = nxt
    logger.debug("weight diagram of (%s): %d weights", w, len(mults))
    return mults


def casimir_exponent(datum: RootDatum, lam: WeightLike) -> Fraction:
    """(lambda, lambda + 2 rho)."""
    w = as_weight(lam)
    return inner(datum, w, w + datum.rho.scale(2))


def coxeter_exponent(datum: RootDatum, lam: WeightLike) -> Fraction:
    """(lambda, lambda + 2 rho) / h, the q-exponent of the Coxeter trace on V(lambda)."""
    return casimir_exponent(datum, lam) / datum.coxeter_number


def c_lambda(datum: RootDatum, lam: WeightLike) -> Fraction:
    """c(lambda) = (lambda, lambda + 2 rho) / k."""
    return casimir_exponent(datum, lam) / datum.killing_constant


def enumerate_contributing_weights(datum: RootDatum, cutoff: Rational) -> List[Weight]:
    """
    Dominant weights with (lambda, lambda + 2 rho) / h below the cutoff.

    All entries of the weight Gram matrix are positive, so each coordinate is
    bounded by its own diagonal contribution; the box is scanned and filtered.

    Returns:
        Weights sorted by exponent, then by coordinates

    Example:
        >>> from etatrace.rootdata import build_root_datum
        >>> [w.coords for w in enumerate_contributing_weights(build_root_datum("A1"), 3)]
        [(0,), (1,), (2,)]
    """
    cut = Fraction(cutoff)
    if cut <= 0:
        raise ValueError(f"cutoff must be positive, got {cut}")
    bound_value = cut * datum.coxeter_number
    g = datum.weight_gram
    bounds = []
    for i in range(datum.rank):
        linear = 2 * sum(g[i])
        n = 0
        while (n + 1) ** 2 * g[i][i] + (n + 1) * linear < bound_value:
            n += 1
        bounds.append(n)
    found = []
    for w in iter_weights_in_box(bounds):
        e = coxeter_exponent(datum, w)
        if e < cut:
            found.append((e, w.coords, w))
    found.sort()
    return [w for _, _, w in found]


def _multiple(rank: int, i: int, n: int) -> Weight:
    return Weight(tuple(n if j == i else 0 for j in range(rank)))


def dominant_weights_up_to_dim(datum: RootDatum, max_dim: int) -> List[Weight]:
    """
    Dominant weights lambda with dim V(lambda) <= max_dim.

    The dimension grows strictly in every coordinate, so each coordinate is
    bounded by the first multiple of its fundamental weight above max_dim.

    Returns:
        Weights sorted by dimension, then by coordinates

    Example:
        >>> from etatrace.rootdata import build_root_datum
        >>> [w.coords for w in dominant_weights_up_to_dim(build_root_datum("G2"), 14)]
        [(0, 0), (1, 0), (0, 1)]
    """
    if max_dim < 1:
        raise ValueError(f"max_dim must be positive, got {max_dim}")
    bounds = []
    for i in range(datum.rank):
        n = 0
        while weyl_dim(datum, _multiple(datum.rank, i, n + 1)) <= max_dim:
            n += 1
        bounds.append(n)
    found = []
    for w in iter_weights_in_box(bounds):
        d = weyl_dim(datum, w)
        if d <= max_dim:
            found.append((d, w.coords, w))
    found.sort()
    return [w for _, _, w in found]
