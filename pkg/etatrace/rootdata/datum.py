"""
Root data: Cartan matrix, symmetrizers, positive roots, the invariant form and
the Weyl group action on weights.

Weights are written in the fundamental-weight basis, roots in the simple-root
basis. The pairing convention is ``<varpi_i, alpha_j^vee> = delta_ij``, which
together with ``(alpha_i, alpha_j) = d_i c_ij`` gives ``(varpi_i, alpha_j) = d_j delta_ij``.
"""

from __future__ import annotations

import logging
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Any, Dict, Iterable, Iterator, List, Sequence, Set, Tuple, Union

from sympy import Matrix as SympyMatrix

from ..errors import InvalidWeightError
from .lie_types import LieType, Matrix, cartan_matrix, symmetrizers

logger = logging.getLogger(__name__)

RootVector = Tuple[int, ...]


@dataclass(frozen=True, order=True)
class Weight:
    """
    Integral weight sum n_i varpi_i, stored by its coordinates.

    Example:
        >>> w = Weight.parse("1,1")
        >>> (w + w).coords, w.is_dominant()
        ((2, 2), True)
    """

    coords: Tuple[int, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.coords, tuple):
            object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))

    @classmethod
    def parse(cls, text: str) -> "Weight":
        """Parse comma-separated coordinates such as "1,0,2"."""
        try:
            return cls(tuple(int(part) for part in text.replace(" ", "").split(",")))
        except ValueError:
            raise InvalidWeightError(f"cannot parse weight '{text}'") from None

    @classmethod
    def zero(cls, rank: int) -> "Weight":
        return cls((0,) * rank)

    @property
    def rank(self) -> int:
        return len(self.coords)

    def __getitem__(self, i: int) -> int:
        return self.coords[i]

    def __iter__(self) -> Iterator[int]:
        return iter(self.coords)

    def __len__(self) -> int:
        return len(self.coords)

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Weight":
        return Weight(tuple(-a for a in self.coords))

    def scale(self, n: int) -> "Weight":
        return Weight(tuple(n * a for a in self.coords))

    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self.coords)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __str__(self) -> str:
        return ",".join(str(c) for c in self.coords)


WeightLike = Union[Weight, Sequence[int]]


def as_weight(value: WeightLike) -> Weight:
    return value if isinstance(value, Weight) else Weight(tuple(value))


def _to_fraction(value: Any) -> Fraction:
    return Fraction(int(value.p), int(value.q))


@dataclass(frozen=True)
class RootDatum:
    """
    Complete combinatorial data of a simple Lie type.

    Build it with :func:`build_root_datum`; the constructor does no validation.
    """

    lie_type: LieType
    cartan: Matrix
    symmetrizers: Tuple[int, ...]
    symmetrized: Matrix
    positive_roots: Tuple[RootVector, ...]
    rho: Weight
    coxeter_number: int
    killing_constant: Fraction
    rg: Fraction
    cartan_inverse: Tuple[Tuple[Fraction, ...], ...] = field(repr=False)
    weight_gram: Tuple[Tuple[Fraction, ...], ...] = field(repr=False)

    @property
    def rank(self) -> int:
        return self.lie_type.rank

    @property
    def h(self) -> int:
        return self.coxeter_number

    @property
    def k(self) -> Fraction:
        return self.killing_constant

    @property
    def dim_g(self) -> int:
        return 2 * len(self.positive_roots) + self.rank

    @property
    def highest_root(self) -> RootVector:
        return max(self.positive_roots, key=lambda r: (sum(r), r))

    def simple_root(self, i: int) -> RootVector:
        return tuple(int(j == i) for j in range(self.rank))

    def simple_root_weight(self, i: int) -> Weight:
        """alpha_i in the fundamental-weight basis (column i of C)."""
        return Weight(tuple(self.cartan[r][i] for r in range(self.rank)))

    def root_to_weight(self, root: RootVector) -> Weight:
        rank = self.rank
        return Weight(
            tuple(sum(self.cartan[r][k] * root[k] for k in range(rank)) for r in range(rank))
        )

    def weight_to_root(self, mu: WeightLike) -> Tuple[Fraction, ...]:
        """Coordinates of mu in the simple-root basis (rational in general)."""
        w = as_weight(mu)
        return tuple(
            sum((self.cartan_inverse[r][k] * w[k] for k in range(self.rank)), Fraction(0))
            for r in range(self.rank)
        )

    def pairing(self, mu: WeightLike, i: int) -> int:
        """<mu, alpha_i^vee>, i.e. the i-th coordinate."""
        return as_weight(mu)[i]

    def to_dict(self) -> Dict[str, Any]:
        """JSON-ready summary; rationals are fraction strings."""
        return {
            "type": self.lie_type.name,
            "rank": self.rank,
            "cartan": [list(row) for row in self.cartan],
            "symmetrizers": list(self.symmetrizers),
            "positive_roots": [list(r) for r in self.positive_roots],
            "highest_root": list(self.highest_root),
            "rho": list(self.rho.coords),
            "dim_g": self.dim_g,
            "h": self.coxeter_number,
            "k": str(self.killing_constant),
            "rg": str(self.rg),
        }

    def __repr__(self) -> str:
        return f"RootDatum({self.lie_type.name}, N={len(self.positive_roots)})"


def _positive_roots(cartan: Matrix) -> Tuple[RootVector, ...]:
    rank = len(cartan)
    simple = [tuple(int(j == i) for j in range(rank)) for i in range(rank)]
    roots: Set[RootVector] = set(simple)
    ordered: List[RootVector] = list(simple)
    layer = list(simple)
    while layer:
        nxt: List[RootVector] = []
        for beta in layer:
            for i in range(rank):
                if beta == simple[i]:
                    continue
                pair = sum(beta[k] * cartan[i][k] for k in range(rank))
                # length of the alpha_i-string below beta
                down = 0
                below = list(beta)
                while True:
                    below[i] -= 1
                    if tuple(below) in roots:
                        down += 1
                    else:
                        break
                if down - pair > 0:
                    cand = tuple(b + int(k == i) for k, b in enumerate(beta))
                    if cand not in roots:
                        roots.add(cand)
                        ordered.append(cand)
                        nxt.append(cand)
        layer = nxt
    return tuple(sorted(ordered, key=lambda r: (sum(r), tuple(-x for x in r))))


@lru_cache(maxsize=None)
def build_root_datum(t: Union[LieType, str]) -> RootDatum:
    """
    Build the root datum of a simple Lie type.

    Positive roots come from a breadth-first closure over simple roots; h, k and
    r_g come from the built-in table. The Coxeter number is re-derived from the
    highest root as a consistency check, and a table constant k disagreeing with
    the Killing form computed from the roots is reported through ``warnings``.

    Args:
        t: LieType or a type string such as "A2"

    Returns:
        The frozen RootDatum

    Raises:
        InvalidLieTypeError: For an invalid family/rank combination

    Example:
        >>> d = build_root_datum("A2")
        >>> d.positive_roots
        ((1, 0), (0, 1), (1, 1))
    """
    lie_type = LieType.parse(t) if isinstance(t, str) else t
    cartan = cartan_matrix(lie_type)
    d = symmetrizers(lie_type)
    rank = lie_type.rank
    symmetrized = tuple(tuple(d[i] * cartan[i][j] for j in range(rank)) for i in range(rank))
    inverse = SympyMatrix(cartan).inv()
    cartan_inverse = tuple(
        tuple(_to_fraction(inverse[i, j]) for j in range(rank)) for i in range(rank)
    )
    weight_gram = tuple(
        tuple(d[i] * cartan_inverse[i][j] for j in range(rank)) for i in range(rank)
    )
    roots = _positive_roots(cartan)
    h = lie_type.coxeter_number
    highest = max(roots, key=sum)
    if 1 + sum(highest) != h:
        raise ValueError(
            f"{lie_type}: tabulated Coxeter number {h} differs from 1 + height of the "
            f"highest root ({1 + sum(highest)})"
        )
    k = Fraction(lie_type.killing_constant)
    datum = RootDatum(
        lie_type=lie_type,
        cartan=cartan,
        symmetrizers=d,
        symmetrized=symmetrized,
        positive_roots=roots,
        rho=Weight((1,) * rank),
        coxeter_number=h,
        killing_constant=k,
        rg=k / h,
        cartan_inverse=cartan_inverse,
        weight_gram=weight_gram,
    )
    from_roots = killing_constant_from_roots(datum)
    if from_roots != k:
        warnings.warn(
            f"{lie_type}: tabulated constant k = {k} differs from the value {from_roots} "
            f"computed from the roots; the table value is used"
        )
    logger.debug("built root datum %s with %d positive roots", lie_type, len(roots))
    return datum


def _check_len(datum: RootDatum, *vectors: Sequence[Any]) -> None:
    for v in vectors:
        if len(v) != datum.rank:
            raise InvalidWeightError(
                f"vector {tuple(v)} has length {len(v)}, expected rank {datum.rank}"
            )


def inner(
    datum: RootDatum, x: Union[Weight, RootVector], y: Union[Weight, RootVector]
) -> Fraction:
    """
    The invariant form (x, y) normalised by (alpha_i, alpha_j) = d_i c_ij.

    A :class:`Weight` argument is read in the fundamental-weight basis, a plain
    tuple in the simple-root basis.

    Raises:
        InvalidWeightError: On a length mismatch

    Example:
        >>> g2 = build_root_datum("G2")
        >>> inner(g2, (0, 1), (0, 1))
        Fraction(6, 1)
    """
    _check_len(datum, x, y)
    rank = datum.rank
    x_is_w, y_is_w = isinstance(x, Weight), isinstance(y, Weight)
    if x_is_w and y_is_w:
        g = datum.weight_gram
        return sum(
            (g[i][j] * x[i] * y[j] for i in range(rank) for j in range(rank) if x[i] and y[j]),
            Fraction(0),
        )
    if x_is_w or y_is_w:
        w, r = (x, y) if x_is_w else (y, x)
        return Fraction(sum(w[i] * datum.symmetrizers[i] * r[i] for i in range(rank)))
    a = datum.symmetrized
    return Fraction(sum(a[i][j] * x[i] * y[j] for i in range(rank) for j in range(rank)))


def in_root_lattice(datum: RootDatum, mu: WeightLike) -> bool:
    """
    True when mu lies in the root lattice Q.

    Example:
        >>> in_root_lattice(build_root_datum("A1"), Weight((1,)))
        False
    """
    w = as_weight(mu)
    _check_len(datum, w)
    return all(c.denominator == 1 for c in datum.weight_to_root(w))


def simple_reflection(datum: RootDatum, mu: WeightLike, i: int) -> Weight:
    """s_i(mu) = mu - <mu, alpha_i^vee> alpha_i."""
    w = as_weight(mu)
    n = w[i]
    if not n:
        return w
    return Weight(tuple(w[r] - n * datum.cartan[r][i] for r in range(datum.rank)))


def coxeter_action_on_weights(datum: RootDatum, mu: WeightLike) -> Weight:
    """
    Apply c = s_1 s_2 ... s_l, with s_l acting first.

    Example:
        >>> coxeter_action_on_weights(build_root_datum("A1"), Weight((2,)))
        Weight(coords=(-2,))
    """
    w = as_weight(mu)
    _check_len(datum, w)
    for i in reversed(range(datum.rank)):
        w = simple_reflection(datum, w, i)
    return w


def weyl_orbit(datum: RootDatum, mu: WeightLike) -> List[Weight]:
    """Orbit of mu under the Weyl group, generated by simple reflections."""
    start = as_weight(mu)
    seen = {start}
    order = [start]
    frontier = [start]
    while frontier:
        nxt = []
        for w in frontier:
            for i in range(datum.rank):
                image = simple_reflection(datum, w, i)
                if image not in seen:
                    seen.add(image)
                    order.append(image)
                    nxt.append(image)
        frontier = nxt
    return order


def exponents(datum: RootDatum) -> List[int]:
    """Exponents of the Weyl group, read off the height distribution of positive roots."""
    counts: Dict[int, int] = {}
    for r in datum.positive_roots:
        counts[sum(r)] = counts.get(sum(r), 0) + 1
    out: List[int] = []
    for height in sorted(counts):
        out.extend([height] * (counts[height] - counts.get(height + 1, 0)))
    return out


def weyl_group_order(datum: RootDatum) -> int:
    """|W| as the product of (e + 1) over the exponents e."""
    order = 1
    for e in exponents(datum):
        order *= e + 1
    return order


def braid_exponent(datum: RootDatum, i: int, j: int) -> int:
    """m_ij, the order of s_i s_j."""
    if i == j:
        return 1
    return {0: 2, 1: 3, 2: 4, 3: 6}[datum.cartan[i][j] * datum.cartan[j][i]]


def killing_constant_from_roots(datum: RootDatum) -> Fraction:
    """
    k with (x, y) = k * Phi(x, y), Phi the form dual to the Killing form.

    Evaluated on alpha_1 as sum over all roots of (beta, alpha_1)^2 / (alpha_1, alpha_1).
    """
    a1 = datum.simple_root(0)
    total = sum((inner(datum, beta, a1) ** 2 for beta in datum.positive_roots), Fraction(0))
    return 2 * total / inner(datum, a1, a1)


def iter_weights_in_box(bounds: Iterable[int]) -> Iterator[Weight]:
    """All dominant weights with 0 <= n_i <= bounds[i]."""
    for coords in product(*(range(b + 1) for b in bounds)):
        yield Weight(tuple(coords))
