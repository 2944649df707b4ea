"""
Quantum Weyl group operators S_i, their composites and traces.

A braid word is a tuple of signed 1-based generator letters: ``(1, 2)`` is
S_1 S_2 (S_2 acts first) and ``-1`` stands for S_1^-1. Operators may be
restricted to a set of source weights; such an operator only knows its
columns on those weight spaces and is zero elsewhere.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any, Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

from sympy.polys.matrices.sdm import SDM

from .. import linalg
from ..checks import CheckReport
from ..converters import matrix_to_json
from ..errors import NonInvariantSubspaceError, StringDecompositionError
from ..linalg import Vector
from ..qmodule import IrrModule
from ..qseries.laurent import FIELD, RatFunc, field_monomial, field_qfactorial
from ..rootdata import (
    Weight,
    WeightLike,
    as_weight,
    braid_exponent,
    coxeter_action_on_weights,
    simple_reflection,
)
from .strings import istring_decompose

logger = logging.getLogger(__name__)

BraidWord = Tuple[int, ...]


def _letter_index(letter: int) -> int:
    return abs(letter) - 1


@dataclass(frozen=True, eq=False)
class BraidOperator:
    """
    Matrix of a braid group element acting on an IrrModule.

    Example:
        >>> from etatrace.qmodule import default_registry
        >>> m = default_registry.quantum("A1", (2,))
        >>> S = s_operator(m, 0)
        >>> print(trace(S, (0,)))
        -q^2
    """

    module: IrrModule
    word: BraidWord
    matrix: SDM
    source_weights: Optional[FrozenSet[Weight]] = None

    __hash__ = None  # type: ignore[assignment]

    @classmethod
    def identity(
        cls, module: IrrModule, source_weights: Optional[Iterable[Weight]] = None
    ) -> "BraidOperator":
        if source_weights is None:
            return cls(module, (), module.identity())
        sources = frozenset(source_weights)
        idx = [k for mu in sources for k in module.weight_space_indices(mu)]
        matrix = linalg.from_entries([(k, k, FIELD.one) for k in idx], (module.dim,) * 2, FIELD)
        return cls(module, (), matrix, sources)

    @property
    def is_restricted(self) -> bool:
        return self.source_weights is not None

    def sources(self) -> List[Weight]:
        """Weights on which the operator is defined."""
        if self.source_weights is None:
            return self.module.weights()
        return [mu for mu in self.module.weights() if mu in self.source_weights]

    def weight_image(self, mu: WeightLike) -> Weight:
        """Image of mu under the Weyl group element underlying the word."""
        w = as_weight(mu)
        for letter in reversed(self.word):
            w = simple_reflection(self.module.datum, w, _letter_index(letter))
        return w

    def image_weights(self) -> Set[Weight]:
        return {self.weight_image(mu) for mu in self.sources()}

    def compose(self, other: "BraidOperator") -> "BraidOperator":
        """self * other, with other acting first."""
        if other.module is not self.module:
            raise ValueError("cannot compose operators on different modules")
        if self.source_weights is not None and not other.image_weights() <= self.source_weights:
            raise ValueError(
                f"operator {self.word} is not defined on the image of operator {other.word}"
            )
        return BraidOperator(
            self.module,
            self.word + other.word,
            self.matrix.matmul(other.matrix),
            other.source_weights,
        )

    def __matmul__(self, other: "BraidOperator") -> "BraidOperator":
        return self.compose(other)

    def inverse(self) -> "BraidOperator":
        """Exact inverse, computed block by block on weight spaces."""
        m = self.module
        triples: List[Tuple[int, int, Any]] = []
        for mu in self.sources():
            cols = m.weight_space_indices(mu)
            rows = m.weight_space_indices(self.weight_image(mu))
            block = linalg.inverse(linalg.extract(self.matrix, rows, cols))
            for r, c, v in linalg.entries(block):
                triples.append((cols[r], rows[c], v))
        sources = None if self.source_weights is None else frozenset(self.image_weights())
        word = tuple(-a for a in reversed(self.word))
        matrix = linalg.from_entries(triples, self.matrix.shape, FIELD)
        return BraidOperator(m, word, matrix, sources)

    def power(self, n: int) -> "BraidOperator":
        """
        n-th power by repeated squaring; negative n inverts first.

        Raises:
            ValueError: If a restricted operator does not preserve its source weights
        """
        if n < 0:
            return self.inverse().power(-n)
        if n == 0:
            return BraidOperator.identity(self.module, self.source_weights)
        if self.source_weights is not None and self.image_weights() != set(self.source_weights):
            raise ValueError(f"operator {self.word} does not preserve its source weights")
        return BraidOperator(
            self.module, self.word * n, linalg.power(self.matrix, n), self.source_weights
        )

    def restrict(self, mu: WeightLike) -> SDM:
        """
        The block of the operator on the mu weight space, in local coordinates.

        Raises:
            NonInvariantSubspaceError: If the operator does not map V_mu into itself
        """
        w = as_weight(mu)
        if self.source_weights is not None and w not in self.source_weights:
            raise NonInvariantSubspaceError(f"operator {self.word} is not defined on ({w})")
        if self.weight_image(w) != w:
            raise NonInvariantSubspaceError(
                f"operator {self.word} maps weight ({w}) to ({self.weight_image(w)})"
            )
        idx = self.module.weight_space_indices(w)
        inside = set(idx)
        for k in idx:
            if any(r not in inside for r in linalg.column(self.matrix, k)):
                raise NonInvariantSubspaceError(
                    f"operator {self.word} moves vectors out of weight ({w})"
                )
        return linalg.extract(self.matrix, idx, idx)

    def to_dict(self) -> Dict[str, Any]:
        sources = (
            None
            if self.source_weights is None
            else [list(mu.coords) for mu in sorted(self.source_weights)]
        )
        return {
            "type": self.module.type_name,
            "lambda": list(self.module.lam.coords),
            "word": list(self.word),
            "source_weights": sources,
            "matrix": matrix_to_json(self.matrix),
        }

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BraidOperator):
            return NotImplemented
        return (
            other.module is self.module
            and other.source_weights == self.source_weights
            and linalg.equal(self.matrix, other.matrix)
        )

    def __repr__(self) -> str:
        where = "" if self.source_weights is None else f", on {len(self.source_weights)} weights"
        return f"BraidOperator(word={self.word}, {self.module!r}{where})"


def _local(vec: Vector, position: Dict[int, int]) -> Vector:
    return {position[g]: v for g, v in vec.items()}


def s_operator(
    m: IrrModule, i: int, source_weights: Optional[Iterable[Weight]] = None
) -> BraidOperator:
    """
    S_i from its action on i-strings: S_i w_k = (-1)^(n-k) q_i^((n-k)(k+1)) w_(n-k).

    On each weight space mu the string vectors through mu form a basis, so the
    block V_mu -> V_(s_i mu) is (images) * (string vectors)^-1.

    Args:
        m: Quantum module
        i: Generator index (0-based)
        source_weights: Restrict the operator to these weight spaces

    Returns:
        BraidOperator with word (i + 1,)

    Example:
        >>> from etatrace.qmodule import default_registry
        >>> S = s_operator(default_registry.quantum("A1", (1,)), 0)
        >>> linalg.entries(S.matrix)
        [(0, 1, 1), (1, 0, -q)]
    """
    datum = m.datum
    d = datum.symmetrizers[i]
    wanted = None if source_weights is None else set(source_weights)
    src: Dict[Weight, List[Vector]] = {}
    img: Dict[Weight, List[Vector]] = {}
    for s in istring_decompose(m, i, through=wanted):
        n = s.n
        for k, wk in enumerate(s.vectors):
            mu = s.weights[k]
            if wanted is not None and mu not in wanted:
                continue
            scalar = field_monomial(d * (n - k) * (k + 1))
            if (n - k) % 2:
                scalar = -scalar
            src.setdefault(mu, []).append(wk)
            img.setdefault(mu, []).append(linalg.vec_scale(s.vectors[n - k], scalar))

    triples: List[Tuple[int, int, Any]] = []
    for mu, vectors in src.items():
        cols = m.weight_space_indices(mu)
        rows = m.weight_space_indices(simple_reflection(datum, mu, i))
        if len(vectors) != len(cols) or len(rows) != len(cols):
            raise StringDecompositionError(
                f"{i + 1}-strings through ({mu}) in V({m.lam}) span {len(vectors)} "
                f"of {len(cols)} dimensions"
            )
        col_pos = {g: r for r, g in enumerate(cols)}
        row_pos = {g: r for r, g in enumerate(rows)}
        n = len(cols)
        basis = linalg.from_columns([_local(v, col_pos) for v in vectors], n, FIELD)
        images = linalg.from_columns([_local(v, row_pos) for v in img[mu]], n, FIELD)
        block = images.matmul(linalg.inverse(basis))
        for r, c, v in linalg.entries(block):
            triples.append((rows[r], cols[c], v))

    sources = None if wanted is None else frozenset(wanted & set(m.weights()))
    matrix = linalg.from_entries(triples, (m.dim, m.dim), FIELD)
    return BraidOperator(m, (i + 1,), matrix, sources)


def q_exponential(x: SDM, d: int) -> SDM:
    """
    exp_{q_i^-1}(x) = sum_k q_i^(-k(k-1)/2) x^k / [k]_{q_i}! for nilpotent x, q_i = q^d.

    The sum stops at the first vanishing power of x.
    """
    total = linalg.identity(x.shape[0], FIELD)
    term = x
    k = 1
    while not linalg.is_zero(term):
        coef = field_monomial(-d * k * (k - 1) // 2) / field_qfactorial(k, d)
        total = total.add(term.mul(coef))
        term = term.matmul(x)
        k += 1
    return total


def s_operator_via_exponentials(m: IrrModule, i: int) -> BraidOperator:
    """
    S_i as the product of three q-exponentials and a diagonal factor.

    S_i = exp(q_i^-1 E_i K_i^-1) exp(-F_i) exp(q_i E_i K_i) q_i^(H_i(H_i+1)/2),
    all exponentials in base q_i^-1, the last factor acting by q_i^(m(m+1)/2)
    on the K_i-eigenspace of eigenvalue q_i^m. Independent of the string
    decomposition, so it cross-checks :func:`s_operator`.
    """
    d = m.datum.symmetrizers[i]
    E, F, K = m.E[i], m.F[i], m.K[i]
    x1 = E.matmul(m.K_inverse(i)).mul(field_monomial(-d))
    x2 = F.mul(-FIELD.one)
    x3 = E.matmul(K).mul(field_monomial(d))
    diag = linalg.diagonal(
        [field_monomial(d * w[i] * (w[i] + 1) // 2) for w in m.basis_weights], FIELD
    )
    matrix = (
        q_exponential(x1, d).matmul(q_exponential(x2, d)).matmul(q_exponential(x3, d)).matmul(diag)
    )
    return BraidOperator(m, (i + 1,), matrix)


def compose(ops: Sequence[BraidOperator]) -> BraidOperator:
    """
    Product in the written order; the rightmost operator acts first.

    Raises:
        ValueError: If the list is empty or the operators act on different modules
    """
    if not ops:
        raise ValueError("compose needs at least one operator")
    result = ops[-1]
    for op in reversed(ops[:-1]):
        result = op.compose(result)
    return result


def coxeter_operator(
    m: IrrModule, source_weights: Optional[Iterable[Weight]] = None
) -> BraidOperator:
    """
    Pi = S_1 S_2 ... S_l.

    With ``source_weights`` each factor is built only on the weight spaces the
    chain actually visits.
    """
    datum = m.datum
    current = None if source_weights is None else {as_weight(mu) for mu in source_weights}
    factors: List[BraidOperator] = []
    for i in reversed(range(datum.rank)):
        factors.append(s_operator(m, i, current))
        if current is not None:
            current = {simple_reflection(datum, mu, i) for mu in current}
    return compose(factors[::-1])


def coxeter_closure(m: IrrModule, weights: Iterable[WeightLike]) -> Set[Weight]:
    """Smallest set containing the weights and stable under the Coxeter element."""
    out: Set[Weight] = set()
    for mu in weights:
        w = as_weight(mu)
        while w not in out:
            out.add(w)
            w = coxeter_action_on_weights(m.datum, w)
    return out


def theta_operator(
    m: IrrModule, source_weights: Optional[Iterable[WeightLike]] = None
) -> BraidOperator:
    """
    theta = Pi^h, the square of the lift of the longest Weyl group element.

    Args:
        m: Quantum module
        source_weights: If given, theta is built only on the Coxeter orbits of these weights

    Example:
        >>> from etatrace.qmodule import default_registry
        >>> theta = theta_operator(default_registry.quantum("A1", (2,)))
        >>> [v for _, _, v in linalg.entries(theta.matrix)]
        [q**2, q**4, q**2]
    """
    sources = None if source_weights is None else coxeter_closure(m, source_weights)
    pi = coxeter_operator(m, sources)
    return pi.power(m.datum.coxeter_number)


def trace(op: BraidOperator, subspace: Optional[WeightLike] = None) -> RatFunc:
    """
    Exact trace on the whole module, or on one weight space.

    Raises:
        NonInvariantSubspaceError: If op does not preserve the weight space, or
            a restricted operator is traced over the whole module
    """
    if subspace is None:
        if op.source_weights is not None:
            raise NonInvariantSubspaceError(
                f"operator {op.word} is restricted; name a weight space to trace over"
            )
        return RatFunc.from_field(linalg.trace(op.matrix))
    return RatFunc.from_field(linalg.trace(op.restrict(subspace)))


def _alternating(i: int, j: int, length: int) -> List[int]:
    return [i if r % 2 == 0 else j for r in range(length)]


def verify_braid_relations(m: IrrModule) -> CheckReport:
    """
    Check S_i S_j S_i ... = S_j S_i S_j ... (m_ij factors per side) for every pair i < j.

    A rank-one module has no relation to check and passes vacuously.
    """
    datum = m.datum
    report = CheckReport(f"braid relations on V({m.lam}) of {m.type_name}")
    ops = [s_operator(m, i) for i in range(datum.rank)]
    for i in range(datum.rank):
        for j in range(i + 1, datum.rank):
            mij = braid_exponent(datum, i, j)
            lhs = compose([ops[r] for r in _alternating(i, j, mij)])
            rhs = compose([ops[r] for r in _alternating(j, i, mij)])
            report.add(
                f"S{i + 1} S{j + 1} ... = S{j + 1} S{i + 1} ... ({mij} factors)",
                linalg.equal(lhs.matrix, rhs.matrix),
            )
    return report


def s_squared_check(m: IrrModule, i: int) -> CheckReport:
    """
    S_i^2 acts on w_k of an i-string of length n + 1 by (-1)^n q_i^(n + 2k(n-k)).
    """
    d = m.datum.symmetrizers[i]
    s = s_operator(m, i).matrix
    square = s.matmul(s)
    report = CheckReport(f"S{i + 1}^2 on V({m.lam}) of {m.type_name}")
    for string in istring_decompose(m, i):
        n = string.n
        ok = True
        for k, wk in enumerate(string.vectors):
            scalar = field_monomial(d * (n + 2 * k * (n - k)))
            if n % 2:
                scalar = -scalar
            diff = linalg.vec_add(linalg.apply(square, wk), wk, -scalar)
            ok = ok and not diff
        report.add(f"string from ({string.top_weight}), length {n + 1}", ok)
    return report


def weight_shift_check(op: BraidOperator) -> CheckReport:
    """The operator maps each V_mu isomorphically onto V_(w mu)."""
    m = op.module
    report = CheckReport(f"weight shift of {op.word} on V({m.lam})")
    for mu in op.sources():
        target = op.weight_image(mu)
        cols = m.weight_space_indices(mu)
        rows = m.weight_space_indices(target)
        inside = set(rows)
        lands = all(r in inside for k in cols for r in linalg.column(op.matrix, k))
        block = linalg.extract(op.matrix, rows, cols) if rows else None
        iso = block is not None and len(rows) == len(cols) and linalg.rank(block) == len(cols)
        report.add(f"({mu}) -> ({target})", lands and iso)
    return report
