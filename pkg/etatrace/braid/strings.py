"""
Decomposition of a module into irreducible strings for one simple root.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, List, Optional, Set, Tuple

from .. import linalg
from ..errors import StringDecompositionError
from ..linalg import Vector
from ..qmodule import IrrModule
from ..qseries.laurent import FIELD, field_qnum
from ..rootdata import Weight

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IString:
    """
    One irreducible U_{q_i}(sl2)-summand w_0, ..., w_n of a module.

    ``vectors[k]`` holds the module coordinates of w_k = F_i^(k) w_0 with the
    divided power F_i^(k) = F_i^k / [k]_{q_i}!. The vectors need not be basis
    vectors; w_0 is killed by E_i and K_i acts on w_k by q_i^(n - 2k).
    """

    i: int
    n: int
    vectors: Tuple[Vector, ...]
    weights: Tuple[Weight, ...]

    def __len__(self) -> int:
        return self.n + 1

    @property
    def top_weight(self) -> Weight:
        return self.weights[0]


def top_vectors(m: IrrModule, i: int, mu: Weight) -> List[Vector]:
    """Basis of ker(E_i) inside the mu weight space, in module coordinates."""
    cols = m.weight_space_indices(mu)
    if not cols:
        return []
    up = m.weight_space_indices(mu + m.datum.simple_root_weight(i))
    if not up:
        return [{c: FIELD.one} for c in cols]
    block = linalg.extract(m.E[i], up, cols)
    return [{cols[j]: v for j, v in vec.items()} for vec in linalg.nullspace_vectors(block)]


def istring_decompose(
    m: IrrModule, i: int, through: Optional[Iterable[Weight]] = None
) -> List[IString]:
    """
    Split the module into i-strings.

    Top vectors are the pivoted null-space basis of E_i on each weight space
    with nonnegative i-th coordinate; each string descends from its top by the
    divided powers of F_i.

    Args:
        m: Quantum module
        i: Generator index (0-based)
        through: If given, only strings meeting one of these weights are built

    Returns:
        Strings ordered by top weight in construction order

    Raises:
        StringDecompositionError: If a string length disagrees with the K_i
            eigenvalue of its top vector, or the strings do not fill the module
    """
    alpha = m.datum.simple_root_weight(i)
    d = m.datum.symmetrizers[i]
    wanted: Optional[Set[Weight]] = set(through) if through is not None else None
    strings: List[IString] = []
    for mu in m.weights():
        n = mu[i]
        if n < 0:
            continue
        span = [mu - alpha.scale(k) for k in range(n + 1)]
        if wanted is not None and wanted.isdisjoint(span):
            continue
        for w0 in top_vectors(m, i, mu):
            vectors = [w0]
            for k in range(1, n + 1):
                nxt = linalg.apply(m.F[i], vectors[-1])
                vectors.append(linalg.vec_scale(nxt, FIELD.one / field_qnum(k, d)))
                if not vectors[-1]:
                    raise StringDecompositionError(
                        f"F_{i + 1}^{k} kills a top vector of weight ({mu}) in V({m.lam}); "
                        f"expected a string of length {n + 1}"
                    )
            if linalg.apply(m.F[i], vectors[-1]):
                raise StringDecompositionError(
                    f"string from weight ({mu}) in V({m.lam}) is longer than {n + 1}"
                )
            strings.append(IString(i=i, n=n, vectors=tuple(vectors), weights=tuple(span)))
    if wanted is None:
        total = sum(len(s) for s in strings)
        if total != m.dim:
            raise StringDecompositionError(
                f"{i + 1}-strings of V({m.lam}) cover {total} of {m.dim} dimensions"
            )
    logger.debug("V(%s): %d strings for generator %d", m.lam, len(strings), i + 1)
    return strings


def string_sizes(m: IrrModule, i: int) -> List[int]:
    """Sorted (descending) sizes of the i-strings."""
    return sorted((len(s) for s in istring_decompose(m, i)), reverse=True)
