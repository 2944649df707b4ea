"""
Concrete modules: the quantum V(lambda) over QQ(q) and the classical V_1(lambda) over QQ.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

from sympy import QQ
from sympy.polys.matrices.sdm import SDM

from .. import linalg
from ..converters import matrix_from_json, matrix_to_json
from ..qseries.laurent import FIELD, field_monomial
from ..rootdata import RootDatum, Weight, WeightLike, as_weight
from .builder import DEFAULT_SIZE_LIMIT, Construction, construct_classical, construct_quantum

Word = Tuple[int, ...]


@dataclass(frozen=True, eq=False)
class WeightModule:
    """
    Basis bookkeeping shared by quantum and classical modules.

    Basis vector 0 is the highest-weight vector; every other basis vector is an
    F-monomial applied to it, recorded by its generator word (leftmost acts last).
    """

    datum: RootDatum
    lam: Weight
    basis_weights: Tuple[Weight, ...]
    words: Tuple[Word, ...]
    _index: Dict[Weight, List[int]] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        index: Dict[Weight, List[int]] = {}
        for k, w in enumerate(self.basis_weights):
            index.setdefault(w, []).append(k)
        object.__setattr__(self, "_index", index)

    @property
    def dim(self) -> int:
        return len(self.basis_weights)

    @property
    def rank(self) -> int:
        return self.datum.rank

    @property
    def highest_weight_index(self) -> int:
        return 0

    def weights(self) -> List[Weight]:
        """Distinct weights in construction order."""
        return list(self._index)

    def weight_multiplicities(self) -> Dict[Weight, int]:
        return {w: len(ix) for w, ix in self._index.items()}

    def weight_space_indices(self, mu: WeightLike) -> List[int]:
        """Basis indices of weight mu; empty if mu is not a weight."""
        return list(self._index.get(as_weight(mu), ()))

    def has_weight(self, mu: WeightLike) -> bool:
        return as_weight(mu) in self._index

    @property
    def type_name(self) -> str:
        return self.datum.lie_type.name


@dataclass(frozen=True, eq=False)
class IrrModule(WeightModule):
    """
    V(lambda) with sparse matrices for E_i, F_i and diagonal K_i over QQ(q).

    Example:
        >>> from etatrace.rootdata import build_root_datum, Weight
        >>> m = build_module(build_root_datum("A2"), Weight((1, 1)))
        >>> m.dim, len(m.weight_space_indices(Weight((0, 0))))
        (8, 2)
    """

    E: Tuple[SDM, ...] = ()
    F: Tuple[SDM, ...] = ()
    K: Tuple[SDM, ...] = ()

    @property
    def domain(self) -> Any:
        return FIELD

    def K_exponent(self, i: int, k: int) -> int:
        """Exponent e with K_i v_k = q^e v_k."""
        return self.datum.symmetrizers[i] * self.basis_weights[k][i]

    def K_inverse(self, i: int) -> SDM:
        return linalg.diagonal(
            [field_monomial(-self.K_exponent(i, k)) for k in range(self.dim)], FIELD
        )

    def identity(self) -> SDM:
        return linalg.identity(self.dim, FIELD)

    def to_dict(self) -> Dict[str, Any]:
        """JSON form: ambient data, basis and the E and F matrices (K is diagonal and implied)."""
        return {
            **_basis_dict(self),
            "kind": "quantum",
            "E": [matrix_to_json(x) for x in self.E],
            "F": [matrix_to_json(x) for x in self.F],
        }

    def __repr__(self) -> str:
        return f"IrrModule({self.type_name}, lambda=({self.lam}), dim={self.dim})"


@dataclass(frozen=True, eq=False)
class ClassicalModule(WeightModule):
    """V_1(lambda) over QQ with Chevalley generators e_i, f_i, h_i."""

    e: Tuple[SDM, ...] = ()
    f: Tuple[SDM, ...] = ()
    h: Tuple[SDM, ...] = ()

    @property
    def domain(self) -> Any:
        return QQ

    def identity(self) -> SDM:
        return linalg.identity(self.dim, QQ)

    def to_dict(self) -> Dict[str, Any]:
        return {
            **_basis_dict(self),
            "kind": "classical",
            "e": [matrix_to_json(x) for x in self.e],
            "f": [matrix_to_json(x) for x in self.f],
        }

    def __repr__(self) -> str:
        return f"ClassicalModule({self.type_name}, lambda=({self.lam}), dim={self.dim})"


def _matrices(
    columns: Sequence[Sequence[linalg.Vector]], dim: int, domain: Any
) -> Tuple[SDM, ...]:
    return tuple(linalg.from_columns(cols, dim, domain) for cols in columns)


def _basis_dict(m: WeightModule) -> Dict[str, Any]:
    return {
        "type": m.type_name,
        "lambda": list(m.lam.coords),
        "dim": m.dim,
        "basis_weights": [list(w.coords) for w in m.basis_weights],
        "words": [[i + 1 for i in word] for word in m.words],
    }


def _quantum_K(datum: RootDatum, weights: Sequence[Weight]) -> Tuple[SDM, ...]:
    d = datum.symmetrizers
    return tuple(
        linalg.diagonal([field_monomial(d[i] * w[i]) for w in weights], FIELD)
        for i in range(datum.rank)
    )


def _classical_h(datum: RootDatum, weights: Sequence[Weight]) -> Tuple[SDM, ...]:
    return tuple(linalg.diagonal([QQ(w[i]) for w in weights], QQ) for i in range(datum.rank))


def module_from_construction(
    datum: RootDatum, lam: Weight, built: Construction
) -> IrrModule:
    dim = len(built.basis_weights)
    return IrrModule(
        datum=datum,
        lam=lam,
        basis_weights=tuple(built.basis_weights),
        words=tuple(built.words),
        E=_matrices(built.e_columns, dim, FIELD),
        F=_matrices(built.f_columns, dim, FIELD),
        K=_quantum_K(datum, built.basis_weights),
    )


def module_from_dict(datum: RootDatum, data: Dict[str, Any]) -> WeightModule:
    """
    Rebuild a module from :meth:`IrrModule.to_dict` or :meth:`ClassicalModule.to_dict` output.

    Raises:
        ValueError: If the document belongs to another type or is malformed
    """
    if data.get("type") != datum.lie_type.name:
        raise ValueError(f"module of type {data.get('type')!r} loaded for {datum.lie_type}")
    weights = tuple(Weight(tuple(w)) for w in data["basis_weights"])
    words = tuple(tuple(i - 1 for i in word) for word in data["words"])
    lam = Weight(tuple(data["lambda"]))
    if data.get("kind") == "classical":
        return ClassicalModule(
            datum=datum,
            lam=lam,
            basis_weights=weights,
            words=words,
            e=tuple(matrix_from_json(x, QQ) for x in data["e"]),
            f=tuple(matrix_from_json(x, QQ) for x in data["f"]),
            h=_classical_h(datum, weights),
        )
    return IrrModule(
        datum=datum,
        lam=lam,
        basis_weights=weights,
        words=words,
        E=tuple(matrix_from_json(x, FIELD) for x in data["E"]),
        F=tuple(matrix_from_json(x, FIELD) for x in data["F"]),
        K=_quantum_K(datum, weights),
    )


def build_module(
    datum: RootDatum, lam: WeightLike, size_limit: Optional[int] = None
) -> IrrModule:
    """
    Build the type-1 irreducible U_q(g)-module of highest weight lambda.

    Args:
        datum: Root datum
        lam: Dominant highest weight
        size_limit: Maximum allowed dimension (default 600)

    Returns:
        The module with E, F and K matrices over QQ(q)

    Raises:
        InvalidWeightError: If lambda is not dominant or has the wrong length
        SizeLimitExceeded: If dim V(lambda) is above the size limit
    """
    w = as_weight(lam)
    built = construct_quantum(datum, w, size_limit or DEFAULT_SIZE_LIMIT)
    return module_from_construction(datum, w, built)


def build_classical_module(
    datum: RootDatum, lam: WeightLike, size_limit: Optional[int] = None
) -> ClassicalModule:
    """
    Build V_1(lambda) for U(g) over the rationals.

    The construction runs independently over QQ; nothing is obtained by
    specialising the quantum matrices at q = 1.
    """
    w = as_weight(lam)
    built = construct_classical(datum, w, size_limit or DEFAULT_SIZE_LIMIT)
    dim = len(built.basis_weights)
    h = _classical_h(datum, built.basis_weights)
    return ClassicalModule(
        datum=datum,
        lam=w,
        basis_weights=tuple(built.basis_weights),
        words=tuple(built.words),
        e=_matrices(built.e_columns, dim, QQ),
        f=_matrices(built.f_columns, dim, QQ),
        h=h,
    )


def weight_space_indices(m: WeightModule, mu: WeightLike) -> List[int]:
    """
    Basis indices of the mu weight space.

    Example:
        >>> from etatrace.rootdata import build_root_datum, Weight
        >>> weight_space_indices(build_module(build_root_datum("A1"), (2,)), (0,))
        [1]
    """
    return m.weight_space_indices(mu)
