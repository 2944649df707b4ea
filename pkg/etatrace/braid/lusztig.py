"""
Lusztig's automorphisms T_i evaluated on generators, and their realization as conjugation by S_i.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional

from sympy.polys.matrices.sdm import SDM

from .. import linalg
from ..checks import CheckReport
from ..qmodule import IrrModule
from ..qseries.laurent import FIELD, field_monomial, field_qfactorial
from .operators import BraidOperator, s_operator

GENERATOR_KINDS = ("E", "F", "K", "K_inv")


@dataclass(frozen=True)
class Generator:
    """
    A Chevalley generator of U_q(g): E_j, F_j, K_j or K_j^-1 (j 0-based).

    Example:
        >>> Generator("E", 1)
        Generator(kind='E', j=1)
        >>> str(Generator("K_inv", 0))
        'K1^-1'
    """

    kind: str
    j: int

    def __post_init__(self) -> None:
        if self.kind not in GENERATOR_KINDS:
            raise ValueError(
                f"unknown generator kind {self.kind!r}; expected one of {GENERATOR_KINDS}"
            )
        if self.j < 0:
            raise ValueError(f"generator index must be nonnegative, got {self.j}")

    def matrix(self, m: IrrModule) -> SDM:
        if self.j >= m.rank:
            raise ValueError(f"generator {self} does not exist in rank {m.rank}")
        if self.kind == "E":
            return m.E[self.j]
        if self.kind == "F":
            return m.F[self.j]
        if self.kind == "K":
            return m.K[self.j]
        return m.K_inverse(self.j)

    def __str__(self) -> str:
        if self.kind == "K_inv":
            return f"K{self.j + 1}^-1"
        return f"{self.kind}{self.j + 1}"


def all_generators(rank: int) -> List[Generator]:
    return [Generator(kind, j) for j in range(rank) for kind in GENERATOR_KINDS]


def _k_power(m: IrrModule, i: int, n: int) -> SDM:
    return linalg.power(m.K[i], n) if n >= 0 else linalg.power(m.K_inverse(i), -n)


def _divided(x: SDM, k: int, d: int) -> SDM:
    return linalg.power(x, k).mul(FIELD.one / field_qfactorial(k, d))


def lusztig_T_on_generator(m: IrrModule, i: int, g: Generator) -> SDM:
    """
    Matrix of T_i(g) on m.

    T_i(E_i) = -F_i K_i, T_i(F_i) = -K_i^-1 E_i, T_i(K_j) = K_j K_i^(-c_ij) and,
    with a = -c_ij for j != i,

        T_i(E_j) = sum_k (-1)^k q_i^-k E_i^(a-k) E_j E_i^(k)
        T_i(F_j) = sum_k (-1)^k q_i^k F_i^(k) F_j F_i^(a-k)

    where X^(k) = X^k / [k]_{q_i}! are divided powers.
    """
    datum = m.datum
    j = g.j
    c = datum.cartan[i][j]
    d = datum.symmetrizers[i]
    if g.kind == "K":
        return m.K[j].matmul(_k_power(m, i, -c))
    if g.kind == "K_inv":
        return m.K_inverse(j).matmul(_k_power(m, i, c))
    if j == i:
        if g.kind == "E":
            return m.F[i].matmul(m.K[i]).mul(-FIELD.one)
        return m.K_inverse(i).matmul(m.E[i]).mul(-FIELD.one)
    a = -c
    total = linalg.zeros(m.dim, m.dim, FIELD)
    for k in range(a + 1):
        sign = -FIELD.one if k % 2 else FIELD.one
        if g.kind == "E":
            coef = sign * field_monomial(-d * k)
            term = _divided(m.E[i], a - k, d).matmul(m.E[j]).matmul(_divided(m.E[i], k, d))
        else:
            coef = sign * field_monomial(d * k)
            term = _divided(m.F[i], k, d).matmul(m.F[j]).matmul(_divided(m.F[i], a - k, d))
        total = total.add(term.mul(coef))
    return total


def verify_ts_conjugation(
    m: IrrModule, i: int, s_i: Optional[BraidOperator] = None
) -> CheckReport:
    """
    Check T_i(g) = S_i g S_i^-1 on every generator g in {E_j, F_j, K_j, K_j^-1}.

    Args:
        m: Quantum module
        i: Generator index (0-based)
        s_i: Precomputed S_i, built when omitted

    Returns:
        CheckReport with one entry per generator
    """
    op = s_i if s_i is not None else s_operator(m, i)
    s, s_inv = op.matrix, op.inverse().matrix
    report = CheckReport(f"T{i + 1} = Ad S{i + 1} on V({m.lam}) of {m.type_name}")
    for g in all_generators(m.rank):
        conjugated = s.matmul(g.matrix(m)).matmul(s_inv)
        report.add(
            f"T{i + 1}({g})",
            linalg.equal(lusztig_T_on_generator(m, i, g), conjugated),
        )
    return report
