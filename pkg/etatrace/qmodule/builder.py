"""
Construction of the irreducible highest-weight module V(lambda).

The module is built weight space by weight space, descending from lambda. At a
weight mu the spanning set is {F_i b : b a basis vector at mu + alpha_i},
ordered by the generator word of F_i b. The action of every E_j on these
candidates follows from the commutation relation

    E_j F_i b = F_i E_j b + delta_ij [<mu + alpha_i, alpha_i^vee>]_{q_i} b,

using only actions already known on higher weight spaces. Below the highest
weight a vector of V(lambda) vanishes exactly when all E_j kill it, so the
candidates whose E-images form the lexicographically first maximal independent
subset are a basis of the weight space; the row-reduced E-image matrix then
expresses every F_i b in that basis. The same procedure runs over QQ with
[e_i, f_i] = h_i for the classical module.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Tuple

from sympy import QQ

from ..errors import ModuleConstructionError, SizeLimitExceeded
from ..linalg import Vector, rank_and_pivots, vec_add
from ..qseries.laurent import FIELD, field_qnum
from ..rootdata import RootDatum, Weight, freudenthal_multiplicities, weyl_dim
from ..rootdata.weights import _dominant

logger = logging.getLogger(__name__)

#: Default maximum module dimension.
DEFAULT_SIZE_LIMIT = 600

Word = Tuple[int, ...]
Bracket = Callable[[int, int], Any]


@dataclass
class Construction:
    """Raw output of the builder: basis data and generator columns."""

    basis_weights: List[Weight]
    words: List[Word]
    e_columns: List[List[Vector]]
    f_columns: List[List[Vector]]


def quantum_bracket(datum: RootDatum) -> Bracket:
    """[E_i, F_i] on a vector with i-th coordinate n: [n]_{q_i} in QQ(q)."""
    d = datum.symmetrizers
    return lambda i, n: field_qnum(n, d[i])


def classical_bracket(datum: RootDatum) -> Bracket:
    """[e_i, f_i] = h_i on a vector with i-th coordinate n: the integer n."""
    return lambda i, n: QQ(n)


def check_size(datum: RootDatum, lam: Weight, size_limit: int) -> int:
    """
    Weyl dimension of V(lambda), refusing modules above the size limit.

    Raises:
        SizeLimitExceeded: If the dimension is larger than size_limit
    """
    dim = weyl_dim(datum, lam)
    if dim > size_limit:
        raise SizeLimitExceeded(datum.lie_type.name, lam.coords, dim, size_limit)
    return dim


def construct(
    datum: RootDatum,
    lam: Weight,
    domain: Any,
    bracket: Bracket,
    size_limit: int = DEFAULT_SIZE_LIMIT,
) -> Construction:
    """
    Run the weight-by-weight construction over ``domain``.

    Args:
        datum: Root datum
        lam: Dominant highest weight
        domain: sympy domain of the matrix entries (QQ(q) or QQ)
        bracket: Scalar of [E_i, F_i] on a vector with i-th coordinate n
        size_limit: Maximum allowed dimension

    Returns:
        Construction with generator columns indexed [generator][basis index]

    Raises:
        SizeLimitExceeded: If dim V(lambda) exceeds size_limit
        ModuleConstructionError: If a weight space comes out with the wrong dimension
    """
    lam = _dominant(datum, lam)
    dim = check_size(datum, lam, size_limit)
    rank = datum.rank
    mults = freudenthal_multiplicities(datum, lam)
    alphas = [datum.simple_root_weight(i) for i in range(rank)]

    basis_weights: List[Weight] = [lam]
    words: List[Word] = [()]
    e_cols: List[List[Vector]] = [[{}] for _ in range(rank)]
    f_cols: List[List[Vector]] = [[{}] for _ in range(rank)]
    by_weight: Dict[Weight, List[int]] = {lam: [0]}

    for mu in mults:
        if mu == lam:
            continue
        candidates: List[Tuple[Word, int, int]] = []
        for i in range(rank):
            for b in by_weight.get(mu + alphas[i], ()):
                candidates.append(((i,) + words[b], i, b))
        candidates.sort()

        # E-images, each E_j block placed at row offset j * dim
        images: List[Vector] = []
        per_generator: List[List[Vector]] = []
        for _, i, b in candidates:
            blocks: List[Vector] = []
            for j in range(rank):
                upper = e_cols[j][b]
                vec: Vector = {}
                for w, coef in upper.items():
                    vec = vec_add(vec, f_cols[i][w], coef)
                if i == j:
                    vec = vec_add(vec, {b: bracket(i, basis_weights[b][i])})
                blocks.append(vec)
            per_generator.append(blocks)
            images.append({j * dim + w: c for j, blk in enumerate(blocks) for w, c in blk.items()})

        reduced, pivots = rank_and_pivots(images, rank * dim, domain)
        if len(pivots) != mults[mu]:
            raise ModuleConstructionError(
                f"weight ({mu}) of V({lam}) in {datum.lie_type}: rank {len(pivots)} "
                f"differs from multiplicity {mults[mu]}"
            )

        new_indices: List[int] = []
        for p in pivots:
            word, _, _ = candidates[p]
            idx = len(basis_weights)
            basis_weights.append(mu)
            words.append(word)
            for j in range(rank):
                e_cols[j].append(per_generator[p][j])
                f_cols[j].append({})
            new_indices.append(idx)
        by_weight[mu] = new_indices

        for c, (_, i, b) in enumerate(candidates):
            col: Vector = {}
            for r, idx in enumerate(new_indices):
                v = reduced.get(r, {}).get(c)
                if v:
                    col[idx] = v
            f_cols[i][b] = col

    if len(basis_weights) != dim:
        raise ModuleConstructionError(
            f"V({lam}) in {datum.lie_type}: built {len(basis_weights)} vectors, expected {dim}"
        )
    logger.debug("constructed V(%s) of %s, dimension %d", lam, datum.lie_type, dim)
    return Construction(basis_weights, words, e_cols, f_cols)


def construct_quantum(
    datum: RootDatum, lam: Weight, size_limit: int = DEFAULT_SIZE_LIMIT
) -> Construction:
    return construct(datum, lam, FIELD, quantum_bracket(datum), size_limit)


def construct_classical(
    datum: RootDatum, lam: Weight, size_limit: int = DEFAULT_SIZE_LIMIT
) -> Construction:
    return construct(datum, lam, QQ, classical_bracket(datum), size_limit)
