"""
Report objects for the identities and the theta scalar checks.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Union

from .. import linalg
from ..braid import theta_operator
from ..checks import CheckReport
from ..converters import canonical_dumps
from ..qmodule import ModuleRegistry, default_registry
from ..qseries import QSeries, RatFunc, TwoVariableSeries
from ..rootdata import RootDatum, Weight, WeightLike, casimir_exponent, inner
from ..rootdata.weights import _dominant
from .terms import TraceTerm

Series = Union[QSeries, TwoVariableSeries]

TWO_VARIABLE = "two-var"


@dataclass
class IdentityReport:
    """
    Outcome of comparing the two sides of an identity below a cutoff.

    ``match`` holds exactly when ``first_discrepancy`` is None.
    """

    identity: str
    type_name: str
    cutoff: Fraction
    lhs: Series
    rhs: Series
    terms: List[TraceTerm] = field(default_factory=list)
    first_discrepancy: Optional[Dict[str, str]] = None
    wall_time_ms: int = 0

    @property
    def match(self) -> bool:
        return self.first_discrepancy is None

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "identity": self.identity,
            "type": self.type_name,
            "cutoff": str(self.cutoff),
            "match": self.match,
            "lhs": self.lhs.to_dict(),
            "rhs": self.rhs.to_dict(),
            "terms": [t.to_dict() for t in self.terms],
            "wall_time_ms": self.wall_time_ms,
        }
        if self.first_discrepancy is not None:
            data["first_discrepancy"] = dict(self.first_discrepancy)
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "IdentityReport":
        series_type = TwoVariableSeries if data["identity"] == TWO_VARIABLE else QSeries
        report = cls(
            identity=data["identity"],
            type_name=data["type"],
            cutoff=Fraction(data["cutoff"]),
            lhs=series_type.from_dict(data["lhs"]),
            rhs=series_type.from_dict(data["rhs"]),
            terms=[TraceTerm.from_dict(t) for t in data["terms"]],
            first_discrepancy=data.get("first_discrepancy"),
            wall_time_ms=int(data.get("wall_time_ms", 0)),
        )
        if report.match != bool(data.get("match", report.match)):
            raise ValueError("report 'match' flag disagrees with its first_discrepancy")
        return report

    def to_json(self, pretty: bool = False) -> str:
        return canonical_dumps(self.to_dict(), pretty=pretty)

    def __str__(self) -> str:
        status = "MATCH" if self.match else "MISMATCH"
        lines = [
            f"{self.identity} identity for {self.type_name} below {self.cutoff}: {status}",
            f"  lhs = {self.lhs}",
            f"  rhs = {self.rhs}",
        ]
        if self.first_discrepancy is not None:
            parts = ", ".join(f"{k}={v}" for k, v in sorted(self.first_discrepancy.items()))
            lines.append(f"  first discrepancy: {parts}")
        if self.terms:
            lines.append(f"  {len(self.terms)} weights, {self.wall_time_ms} ms")
        return "\n".join(lines)


@dataclass
class WeightScalar:
    """Action of theta on one weight space."""

    weight: Weight
    dim: int
    scalar: Optional[RatFunc]
    expected_exponent: Fraction

    @property
    def exponent_matches(self) -> bool:
        if self.scalar is None:
            return False
        shape = self.scalar.monomial_exponent()
        return shape is not None and Fraction(shape[1]) == self.expected_exponent

    def to_dict(self) -> Dict[str, Any]:
        return {
            "weight": list(self.weight.coords),
            "dim": self.dim,
            "scalar": None if self.scalar is None else str(self.scalar),
            "expected_exponent": str(self.expected_exponent),
        }


@dataclass
class ThetaReport:
    """
    theta = Pi^h on V(lambda): the signs c1 (highest weight) and c2 (zero weight).

    ``weight_scalars`` records theta on every weight space, with the exponent
    (lambda, lambda + 2 rho) - (mu, mu) it is compared against, and
    ``eigenvalues`` the resulting multiset.
    """

    type_name: str
    lam: Weight
    dim: int
    c1: Optional[int]
    highest_exponent: Fraction
    c2: Optional[int]
    zero_exponent: Fraction
    checks: CheckReport
    weight_scalars: List[WeightScalar] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.checks.passed

    @property
    def eigenvalues(self) -> Dict[str, int]:
        counts: Counter = Counter()
        for ws in self.weight_scalars:
            counts[str(ws.scalar) if ws.scalar is not None else "non-scalar"] += ws.dim
        return dict(sorted(counts.items()))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "type": self.type_name,
            "lambda": list(self.lam.coords),
            "dim": self.dim,
            "c1": self.c1,
            "highest_exponent": str(self.highest_exponent),
            "c2": self.c2,
            "zero_exponent": str(self.zero_exponent),
            "passed": self.passed,
            "eigenvalues": self.eigenvalues,
            "weights": [ws.to_dict() for ws in self.weight_scalars],
            "checks": self.checks.to_dict(),
        }

    def to_json(self, pretty: bool = False) -> str:
        return canonical_dumps(self.to_dict(), pretty=pretty)

    def __str__(self) -> str:
        lines = [
            f"theta on V({self.lam}) of {self.type_name}, dim {self.dim}: "
            f"{'PASS' if self.passed else 'FAIL'}",
            f"  highest weight: c1={self.c1}, q^{self.highest_exponent}",
        ]
        if self.c2 is not None:
            lines.append(f"  zero weight: c2={self.c2}, q^{self.zero_exponent}")
        for value, count in self.eigenvalues.items():
            lines.append(f"  eigenvalue {value} with multiplicity {count}")
        return "\n".join(lines)


def _scalar_of_block(block: Any) -> Optional[RatFunc]:
    """The scalar s when block = s * identity, else None."""
    n = block.shape[0]
    if n == 0:
        return None
    s = block.get(0, {}).get(0)
    if not s:
        return None
    expected = linalg.identity(n, block.domain).mul(s)
    return RatFunc.from_field(s) if linalg.equal(block, expected) else None


def _sign(value: Optional[RatFunc], exponent: Fraction) -> Optional[int]:
    if value is None:
        return None
    shape = value.monomial_exponent()
    if shape is None or shape[0] not in (1, -1) or Fraction(shape[1]) != exponent:
        return None
    return int(shape[0])


def verify_theta_scalars(
    datum: RootDatum, lam: WeightLike, registry: Optional[ModuleRegistry] = None
) -> ThetaReport:
    """
    Check the scalars of theta on the highest and the zero weight spaces.

    theta v_lambda = c1 q^(lambda, 2 rho) v_lambda and theta|V_0 = c2 q^(lambda, lambda + 2 rho),
    with c1 and c2 both +-1 and equal. The scalar of theta on every other
    weight space is recorded for inspection.

    Example:
        >>> from etatrace.rootdata import build_root_datum
        >>> report = verify_theta_scalars(build_root_datum("A2"), (1, 1))
        >>> report.eigenvalues
        {'q^4': 6, 'q^6': 2}
    """
    w = _dominant(datum, lam)
    reg = registry if registry is not None else default_registry
    m = reg.quantum(datum, w)
    theta = theta_operator(m)
    casimir = casimir_exponent(datum, w)
    highest = inner(datum, w, datum.rho.scale(2))
    checks = CheckReport(f"theta scalars on V({w}) of {datum.lie_type}")

    column = linalg.column(theta.matrix, m.highest_weight_index)
    top = RatFunc.from_field(column[0]) if set(column) == {0} else None
    c1 = _sign(top, highest)
    checks.add(
        "theta v_lambda = c1 q^(lambda, 2 rho) v_lambda, c1 = +-1",
        c1 is not None,
        f"scalar {top}",
    )

    scalars: List[WeightScalar] = []
    for mu in m.weights():
        block = theta.restrict(mu)
        scalars.append(
            WeightScalar(
                weight=mu,
                dim=block.shape[0],
                scalar=_scalar_of_block(block),
                expected_exponent=casimir - inner(datum, mu, mu),
            )
        )

    c2: Optional[int] = None
    zero = Weight.zero(datum.rank)
    if m.has_weight(zero):
        zero_scalar = next(ws.scalar for ws in scalars if ws.weight == zero)
        c2 = _sign(zero_scalar, casimir)
        checks.add(
            "theta on V_0 = c2 q^(lambda, lambda + 2 rho), c2 = +-1",
            c2 is not None,
            f"scalar {zero_scalar}",
        )
        checks.add("c1 = c2", c1 is not None and c1 == c2, f"c1={c1}, c2={c2}")

    return ThetaReport(
        type_name=datum.lie_type.name,
        lam=w,
        dim=m.dim,
        c1=c1,
        highest_exponent=highest,
        c2=c2,
        zero_exponent=casimir,
        checks=checks,
        weight_scalars=scalars,
    )
