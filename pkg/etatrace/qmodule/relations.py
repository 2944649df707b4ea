"""
Verification of the defining relations of U_q(g) and U(g) on constructed modules.
"""

from __future__ import annotations

import logging
from math import comb
from typing import List

from sympy import QQ
from sympy.polys.matrices.sdm import SDM

from .. import linalg
from ..checks import CheckReport
from ..qseries.laurent import FIELD, field_monomial, qbinomial
from ..rootdata import freudenthal_multiplicities, weyl_dim
from .module import ClassicalModule, IrrModule, WeightModule

logger = logging.getLogger(__name__)


def quantum_serre(m: IrrModule, gens: List[SDM], i: int, j: int) -> SDM:
    """sum_r (-1)^r [1 - c_ij choose r]_{q_i} X_i^(1 - c_ij - r) X_j X_i^r."""
    c = m.datum.cartan[i][j]
    d = m.datum.symmetrizers[i]
    top = 1 - c
    total = linalg.zeros(m.dim, m.dim, FIELD)
    for r in range(top + 1):
        coef = qbinomial(top, r, d).to_field()
        if r % 2:
            coef = -coef
        term = linalg.power(gens[i], top - r).matmul(gens[j]).matmul(linalg.power(gens[i], r))
        total = total.add(term.mul(coef))
    return total


def classical_serre(m: ClassicalModule, gens: List[SDM], i: int, j: int) -> SDM:
    """sum_r (-1)^r binom(1 - c_ij, r) x_i^(1 - c_ij - r) x_j x_i^r, i.e. ad(x_i)^(1-c_ij) x_j."""
    top = 1 - m.datum.cartan[i][j]
    total = linalg.zeros(m.dim, m.dim, QQ)
    for r in range(top + 1):
        coef = QQ((-1) ** r * comb(top, r))
        term = linalg.power(gens[i], top - r).matmul(gens[j]).matmul(linalg.power(gens[i], r))
        total = total.add(term.mul(coef))
    return total


def _structure_checks(m: WeightModule, report: CheckReport, raising: List[SDM]) -> None:
    expected = freudenthal_multiplicities(m.datum, m.lam)
    report.add(
        "dimension equals Weyl dimension",
        m.dim == weyl_dim(m.datum, m.lam),
        f"dim {m.dim}",
    )
    report.add(
        "weight multiplicities match Freudenthal",
        m.weight_multiplicities() == dict(expected),
    )
    report.add(
        "highest-weight vector killed by all raising operators",
        all(not linalg.column(x, 0) for x in raising),
    )
    # ker(E_1) cap ... cap ker(E_l) is the highest-weight line
    stacked = SDM.vstack(*raising) if raising else None
    if stacked is not None and m.dim:
        kernel = linalg.nullspace_vectors(stacked)
        report.add(
            "only singular vector is the highest-weight vector",
            len(kernel) == 1 and set(kernel[0]) == {0},
            f"kernel dimension {len(kernel)}",
        )


def verify_module_relations(m: IrrModule) -> CheckReport:
    """
    Check every defining relation of U_q(g) on m as an exact matrix identity.

    Covered: K_i K_j = K_j K_i, K_i K_i^-1 = 1, the K-conjugation of E_j and
    F_j, [E_i, F_j] = delta_ij (K_i - K_i^-1)/(q_i - q_i^-1), both Serre
    families, and the highest-weight structure (dimensions, singular vectors).

    Returns:
        CheckReport listing each relation with pass/fail

    Example:
        >>> from etatrace.rootdata import build_root_datum
        >>> from etatrace.qmodule import build_module
        >>> verify_module_relations(build_module(build_root_datum("A2"), (1, 0))).passed
        True
    """
    datum = m.datum
    rank = datum.rank
    d = datum.symmetrizers
    report = CheckReport(f"U_q relations on V({m.lam}) of {m.type_name}")
    one = m.identity()
    K_inv = [m.K_inverse(i) for i in range(rank)]
    for i in range(rank):
        report.add(f"K{i + 1} K{i + 1}^-1 = 1", linalg.equal(m.K[i].matmul(K_inv[i]), one))
        for j in range(rank):
            if j > i:
                report.add(
                    f"K{i + 1} K{j + 1} = K{j + 1} K{i + 1}",
                    linalg.is_zero(linalg.commutator(m.K[i], m.K[j])),
                )
            shift = d[i] * datum.cartan[i][j]
            conj_e = m.K[i].matmul(m.E[j]).matmul(K_inv[i])
            report.add(
                f"K{i + 1} E{j + 1} K{i + 1}^-1 = q^{shift} E{j + 1}",
                linalg.equal(conj_e, m.E[j].mul(field_monomial(shift))),
            )
            conj_f = m.K[i].matmul(m.F[j]).matmul(K_inv[i])
            report.add(
                f"K{i + 1} F{j + 1} K{i + 1}^-1 = q^{-shift} F{j + 1}",
                linalg.equal(conj_f, m.F[j].mul(field_monomial(-shift))),
            )
            bracket = linalg.commutator(m.E[i], m.F[j])
            if i == j:
                denom = field_monomial(d[i]) - field_monomial(-d[i])
                expected = m.K[i].sub(K_inv[i]).mul(FIELD.one / denom)
                report.add(
                    f"[E{i + 1}, F{i + 1}] = (K{i + 1} - K{i + 1}^-1)/(q_{i + 1} - q_{i + 1}^-1)",
                    linalg.equal(bracket, expected),
                )
            else:
                report.add(f"[E{i + 1}, F{j + 1}] = 0", linalg.is_zero(bracket))
                report.add(
                    f"Serre E{i + 1}, E{j + 1}",
                    linalg.is_zero(quantum_serre(m, list(m.E), i, j)),
                )
                report.add(
                    f"Serre F{i + 1}, F{j + 1}",
                    linalg.is_zero(quantum_serre(m, list(m.F), i, j)),
                )
    report.add(
        "K acts on the highest-weight vector by q^(alpha_i, lambda)",
        all(
            linalg.column(m.K[i], 0) == {0: field_monomial(d[i] * m.lam[i])}
            for i in range(rank)
        ),
    )
    _structure_checks(m, report, list(m.E))
    logger.debug("%s", report.title)
    return report


def verify_classical_relations(m: ClassicalModule) -> CheckReport:
    """
    Check the Chevalley-Serre relations of U(g) on a classical module.

    [h_i, h_j] = 0, [h_i, e_j] = c_ij e_j, [h_i, f_j] = -c_ij f_j,
    [e_i, f_j] = delta_ij h_i and ad(e_i)^(1-c_ij) e_j = ad(f_i)^(1-c_ij) f_j = 0.
    """
    datum = m.datum
    rank = datum.rank
    report = CheckReport(f"U relations on V_1({m.lam}) of {m.type_name}")
    for i in range(rank):
        for j in range(rank):
            c = datum.cartan[i][j]
            if j > i:
                report.add(
                    f"[h{i + 1}, h{j + 1}] = 0",
                    linalg.is_zero(linalg.commutator(m.h[i], m.h[j])),
                )
            report.add(
                f"[h{i + 1}, e{j + 1}] = {c} e{j + 1}",
                linalg.equal(linalg.commutator(m.h[i], m.e[j]), m.e[j].mul(QQ(c))),
            )
            report.add(
                f"[h{i + 1}, f{j + 1}] = {-c} f{j + 1}",
                linalg.equal(linalg.commutator(m.h[i], m.f[j]), m.f[j].mul(QQ(-c))),
            )
            bracket = linalg.commutator(m.e[i], m.f[j])
            if i == j:
                report.add(f"[e{i + 1}, f{i + 1}] = h{i + 1}", linalg.equal(bracket, m.h[i]))
            else:
                report.add(f"[e{i + 1}, f{j + 1}] = 0", linalg.is_zero(bracket))
                report.add(
                    f"Serre e{i + 1}, e{j + 1}",
                    linalg.is_zero(classical_serre(m, list(m.e), i, j)),
                )
                report.add(
                    f"Serre f{i + 1}, f{j + 1}",
                    linalg.is_zero(classical_serre(m, list(m.f), i, j)),
                )
    _structure_checks(m, report, list(m.e))
    return report

