"""
Truncated formal power series with exact rational exponents.

A :class:`QSeries` knows only the coefficients strictly below its ``cutoff``.
Binary operations take the smaller cutoff of the two operands, so precision
loss is explicit and composes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Mapping, Optional, Tuple, Union

from ..errors import SeriesInversionError
from .laurent import LaurentPoly, _format_term, _join_terms, _power

Rational = Union[int, Fraction, str]


def _frac(value: Rational) -> Fraction:
    return value if isinstance(value, Fraction) else Fraction(value)


@dataclass(frozen=True)
class Discrepancy:
    """First exponent at which two series disagree."""

    exponent: Fraction
    lhs: Fraction
    rhs: Fraction

    def to_dict(self) -> Dict[str, str]:
        return {"exponent": str(self.exponent), "lhs": str(self.lhs), "rhs": str(self.rhs)}


class QSeries:
    """
    Sparse truncated series sum c_e x^e, exponents rational and nonnegative.

    Args:
        terms: Mapping exponent -> coefficient; terms at or above the cutoff are dropped
        cutoff: Truncation order, a positive rational

    Example:
        >>> s = QSeries({0: 1, 1: -1}, cutoff=3)
        >>> str(s * s)
        '1 - 2x + x^2'
    """

    __slots__ = ("_terms", "_cutoff")

    def __init__(
        self, terms: Optional[Mapping[Rational, Rational]] = None, cutoff: Rational = 1
    ) -> None:
        cut = _frac(cutoff)
        if cut <= 0:
            raise ValueError(f"cutoff must be positive, got {cut}")
        clean: Dict[Fraction, Fraction] = {}
        for exp, coef in (terms or {}).items():
            e, c = _frac(exp), _frac(coef)
            if e < 0:
                raise ValueError(f"negative exponent {e} in a QSeries")
            if c and e < cut:
                clean[e] = clean.get(e, Fraction(0)) + c
        self._terms = {e: c for e, c in sorted(clean.items()) if c}
        self._cutoff = cut

    # -- constructors -------------------------------------------------------

    @classmethod
    def one(cls, cutoff: Rational) -> "QSeries":
        return cls({0: 1}, cutoff)

    @classmethod
    def zero(cls, cutoff: Rational) -> "QSeries":
        return cls({}, cutoff)

    @classmethod
    def monomial(cls, exp: Rational, coef: Rational, cutoff: Rational) -> "QSeries":
        return cls({exp: coef}, cutoff)

    # -- inspection ---------------------------------------------------------

    @property
    def cutoff(self) -> Fraction:
        return self._cutoff

    @property
    def terms(self) -> Dict[Fraction, Fraction]:
        """Copy of the stored exponent -> coefficient map, ascending."""
        return dict(self._terms)

    def items(self) -> List[Tuple[Fraction, Fraction]]:
        return list(self._terms.items())

    def coefficient(self, exp: Rational) -> Fraction:
        """
        Coefficient of x^exp.

        Raises:
            ValueError: If exp is at or beyond the cutoff (the value is unknown)
        """
        e = _frac(exp)
        if e >= self._cutoff:
            raise ValueError(f"coefficient of x^{e} is unknown below cutoff {self._cutoff}")
        return self._terms.get(e, Fraction(0))

    def constant_term(self) -> Fraction:
        return self._terms.get(Fraction(0), Fraction(0))

    def valuation(self) -> Optional[Fraction]:
        return next(iter(self._terms), None)

    def __len__(self) -> int:
        return len(self._terms)

    # -- truncation and substitution ----------------------------------------

    def truncate(self, cutoff: Rational) -> "QSeries":
        """Same series with a cutoff no larger than the given one."""
        return QSeries(self._terms, min(self._cutoff, _frac(cutoff)))

    def substitute(self, scale: Rational) -> "QSeries":
        """Image under x -> x^scale; the cutoff scales with the exponents."""
        s = _frac(scale)
        if s <= 0:
            raise ValueError(f"scale must be positive, got {s}")
        return QSeries({e * s: c for e, c in self._terms.items()}, self._cutoff * s)

    # -- arithmetic ---------------------------------------------------------

    def _lift(self, other: Any) -> Optional["QSeries"]:
        if isinstance(other, QSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return QSeries({0: other}, self._cutoff)
        return None

    def __add__(self, other: Any) -> "QSeries":
        rhs = self._lift(other)
        if rhs is None:
            return NotImplemented
        out = dict(self._terms)
        for e, c in rhs._terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        return QSeries(out, min(self._cutoff, rhs._cutoff))

    __radd__ = __add__

    def __neg__(self) -> "QSeries":
        return QSeries({e: -c for e, c in self._terms.items()}, self._cutoff)

    def __sub__(self, other: Any) -> "QSeries":
        rhs = self._lift(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: Any) -> "QSeries":
        lhs = self._lift(other)
        if lhs is None:
            return NotImplemented
        return lhs - self

    def __mul__(self, other: Any) -> "QSeries":
        rhs = self._lift(other)
        if rhs is None:
            return NotImplemented
        cut = min(self._cutoff, rhs._cutoff)
        out: Dict[Fraction, Fraction] = {}
        right = list(rhs._terms.items())
        for e1, c1 in self._terms.items():
            if e1 >= cut:
                break
            for e2, c2 in right:
                e = e1 + e2
                if e >= cut:
                    break
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return QSeries(out, cut)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "QSeries":
        if n < 0:
            return self.inverse() ** (-n)
        result = QSeries.one(self._cutoff)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def inverse(self) -> "QSeries":
        """
        Multiplicative inverse up to the cutoff.

        Raises:
            SeriesInversionError: If the constant term is zero
        """
        c0 = self.constant_term()
        if not c0:
            raise SeriesInversionError(f"series {self} has no invertible constant term")
        tail = QSeries({e: -c / c0 for e, c in self._terms.items() if e}, self._cutoff)
        result = QSeries.one(self._cutoff)
        power = QSeries.one(self._cutoff)
        while True:
            power = power * tail
            if not power._terms:
                break
            result = result + power
        return result / c0 if c0 != 1 else result

    def __truediv__(self, other: Any) -> "QSeries":
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("QSeries division by zero")
            return QSeries({e: c / other for e, c in self._terms.items()}, self._cutoff)
        if isinstance(other, QSeries):
            return self * other.inverse()
        return NotImplemented

    def times_one_minus_monomial(self, exp: Rational, coef: Rational = 1) -> "QSeries":
        """Product with (1 - coef * x^exp), without a general multiplication."""
        a, k = _frac(exp), _frac(coef)
        out = dict(self._terms)
        for e, c in self._terms.items():
            if e + a >= self._cutoff:
                break
            out[e + a] = out.get(e + a, Fraction(0)) - k * c
        return QSeries(out, self._cutoff)

    # -- comparison ---------------------------------------------------------

    def first_discrepancy(self, other: "QSeries") -> Optional[Discrepancy]:
        """Smallest exponent below the common cutoff where the two series differ."""
        cut = min(self._cutoff, other._cutoff)
        for e in sorted(set(self._terms) | set(other._terms)):
            if e >= cut:
                break
            lhs = self._terms.get(e, Fraction(0))
            rhs = other._terms.get(e, Fraction(0))
            if lhs != rhs:
                return Discrepancy(e, lhs, rhs)
        return None

    def equals_to_cutoff(self, other: "QSeries") -> bool:
        return self.first_discrepancy(other) is None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        return self._cutoff == other._cutoff and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self._cutoff, tuple(self._terms.items())))

    # -- serialization and display ------------------------------------------

    def to_dict(self) -> Dict[str, Any]:
        """JSON-ready dict with fraction strings and ascending terms."""
        return {
            "cutoff": str(self._cutoff),
            "terms": [[str(e), str(c)] for e, c in self._terms.items()],
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "QSeries":
        return cls({Fraction(e): Fraction(c) for e, c in data["terms"]}, Fraction(data["cutoff"]))

    def format(self, variable: str = "x") -> str:
        if not self._terms:
            return "0"
        pieces = [_format_term(c, _power(variable, e)) for e, c in self._terms.items()]
        text = _join_terms(pieces)
        return text.replace("*", "")

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"QSeries({self.format()}, cutoff={self._cutoff})"


def euler_phi(scale: Rational, cutoff: Rational) -> QSeries:
    """
    Truncated Euler product prod_{n>=1} (1 - x^(n*scale)).

    Factors whose exponent n*scale reaches the cutoff contribute nothing.

    Example:
        >>> str(euler_phi(1, 6))
        '1 - x - x^2 + x^5'
    """
    s = _frac(scale)
    if s <= 0:
        raise ValueError(f"scale must be positive, got {s}")
    result = QSeries.one(cutoff)
    n = 1
    while n * s < result.cutoff:
        result = result.times_one_minus_monomial(n * s)
        n += 1
    return result


def pentagonal_series(cutoff: Rational) -> QSeries:
    """Sum of (-1)^n x^((3n^2 - n)/2) over all integers n, truncated."""
    cut = _frac(cutoff)
    terms: Dict[Fraction, Fraction] = {}
    n = 0
    while True:
        exps = {(3 * m * m - m) // 2: m for m in (n, -n)}
        below = {e: m for e, m in exps.items() if e < cut}
        if not below:
            break
        for e, m in below.items():
            terms[Fraction(e)] = Fraction((-1) ** abs(m))
        n += 1
    return QSeries(terms, cut)


def jacobi_cube_series(cutoff: Rational) -> QSeries:
    """Sum of (-1)^n (2n+1) x^(n(n+1)/2) over n >= 0, truncated."""
    cut = _frac(cutoff)
    terms: Dict[Fraction, Fraction] = {}
    n = 0
    while n * (n + 1) // 2 < cut:
        terms[Fraction(n * (n + 1) // 2)] = Fraction((-1) ** n * (2 * n + 1))
        n += 1
    return QSeries(terms, cut)


def partition_numbers(count: int) -> List[int]:
    """p(0), ..., p(count-1) by the coin-change recurrence over part sizes."""
    table = [1] + [0] * max(count - 1, 0)
    for part in range(1, count):
        for n in range(part, count):
            table[n] += table[n - part]
    return table[:count]


def partition_series(cutoff: Rational) -> QSeries:
    """
    Generating series sum p(n) x^n of integer partitions, truncated.

    Example:
        >>> str(partition_series(5))
        '1 + x + 2x^2 + 3x^3 + 5x^4'
    """
    cut = _frac(cutoff)
    count = -(-cut.numerator // cut.denominator)
    return QSeries(dict(enumerate(partition_numbers(count))), cut)


def series_mul(a: QSeries, b: Union[QSeries, int, Fraction]) -> QSeries:
    return a * b


def series_sub(a: QSeries, b: Union[QSeries, int, Fraction]) -> QSeries:
    return a - b


def series_pow(a: QSeries, n: int) -> QSeries:
    """a**n; negative n needs an invertible constant term."""
    return a**n


def series_inverse(a: QSeries) -> QSeries:
    return a.inverse()


def series_eq_to_cutoff(a: QSeries, b: QSeries) -> bool:
    """True when a and b agree on every exponent below min(a.cutoff, b.cutoff)."""
    return a.equals_to_cutoff(b)


def series_product(factors: Iterable[QSeries]) -> QSeries:
    result: Optional[QSeries] = None
    for factor in factors:
        result = factor if result is None else result * factor
    if result is None:
        raise ValueError("empty product of series")
    return result


TwoVarKey = Tuple[Fraction, Fraction]


class TwoVariableSeries:
    """
    Series sum c x t^a q^b truncated in t only.

    t-exponents are nonnegative rationals below ``cutoff_t``. Each t-coefficient is
    a finite sum of exact rational multiples of q^b, and b may be any rational:
    these are generalized polynomials in q, not Laurent polynomials.

    Example:
        >>> s = TwoVariableSeries({(1, 2): -3}, cutoff_t=4)
        >>> s.coefficient_in_q(1)
        {Fraction(2, 1): Fraction(-3, 1)}
    """

    __slots__ = ("_terms", "_cutoff_t")

    def __init__(
        self,
        terms: Optional[Mapping[Tuple[Rational, Rational], Rational]] = None,
        cutoff_t: Rational = 1,
    ) -> None:
        cut = _frac(cutoff_t)
        if cut <= 0:
            raise ValueError(f"cutoff_t must be positive, got {cut}")
        clean: Dict[TwoVarKey, Fraction] = {}
        for (a, b), c in (terms or {}).items():
            key = (_frac(a), _frac(b))
            if key[0] < 0:
                raise ValueError(f"negative t-exponent {key[0]}")
            if key[0] < cut:
                clean[key] = clean.get(key, Fraction(0)) + _frac(c)
        self._terms = {k: v for k, v in sorted(clean.items()) if v}
        self._cutoff_t = cut

    @classmethod
    def one(cls, cutoff_t: Rational) -> "TwoVariableSeries":
        return cls({(0, 0): 1}, cutoff_t)

    @property
    def cutoff_t(self) -> Fraction:
        return self._cutoff_t

    @property
    def terms(self) -> Dict[TwoVarKey, Fraction]:
        return dict(self._terms)

    def coefficient_in_q(self, t_exp: Rational) -> Dict[Fraction, Fraction]:
        """q-exponent -> coefficient map of the t^t_exp coefficient."""
        a = _frac(t_exp)
        return {b: c for (e, b), c in self._terms.items() if e == a}

    def laurent_coefficient(self, t_exp: Rational) -> LaurentPoly:
        """The t^t_exp coefficient as a Laurent polynomial; q-exponents must be integers."""
        coeffs = self.coefficient_in_q(t_exp)
        if any(b.denominator != 1 for b in coeffs):
            raise ValueError(f"t^{t_exp} coefficient has non-integral q-exponents")
        return LaurentPoly({int(b): c for b, c in coeffs.items()})

    def __add__(self, other: "TwoVariableSeries") -> "TwoVariableSeries":
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, Fraction(0)) + c
        return TwoVariableSeries(out, min(self._cutoff_t, other._cutoff_t))

    def __mul__(self, other: "TwoVariableSeries") -> "TwoVariableSeries":
        cut = min(self._cutoff_t, other._cutoff_t)
        out: Dict[TwoVarKey, Fraction] = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                if a1 + a2 < cut:
                    key = (a1 + a2, b1 + b2)
                    out[key] = out.get(key, Fraction(0)) + c1 * c2
        return TwoVariableSeries(out, cut)

    def __pow__(self, n: int) -> "TwoVariableSeries":
        if n < 0:
            raise ValueError("negative powers of two-variable series are not supported")
        result = TwoVariableSeries.one(self._cutoff_t)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def times_one_minus_monomial(self, t_exp: Fraction, q_exp: Fraction) -> "TwoVariableSeries":
        """Product with (1 - t^t_exp q^q_exp)."""
        out = dict(self._terms)
        for (a, b), c in self._terms.items():
            if a + t_exp < self._cutoff_t:
                key = (a + t_exp, b + q_exp)
                out[key] = out.get(key, Fraction(0)) - c
        return TwoVariableSeries(out, self._cutoff_t)

    def first_discrepancy(
        self, other: "TwoVariableSeries"
    ) -> Optional[Tuple[TwoVarKey, Fraction, Fraction]]:
        """Smallest (t, q) exponent pair below the common t-cutoff where the series differ."""
        cut = min(self._cutoff_t, other._cutoff_t)
        for key in sorted(set(self._terms) | set(other._terms)):
            if key[0] >= cut:
                break
            lhs = self._terms.get(key, Fraction(0))
            rhs = other._terms.get(key, Fraction(0))
            if lhs != rhs:
                return key, lhs, rhs
        return None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TwoVariableSeries):
            return NotImplemented
        return self._cutoff_t == other._cutoff_t and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self._cutoff_t, tuple(self._terms.items())))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "cutoff": str(self._cutoff_t),
            "terms": [[str(a), str(b), str(c)] for (a, b), c in self._terms.items()],
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "TwoVariableSeries":
        return cls(
            {(Fraction(a), Fraction(b)): Fraction(c) for a, b, c in data["terms"]},
            Fraction(data["cutoff"]),
        )

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for (a, b), c in self._terms.items():
            power = " ".join(p for p in (_power("q", b), _power("t", a)) if p)
            pieces.append(_format_term(c, power))
        return _join_terms(pieces).replace("*", "")

    def __repr__(self) -> str:
        return f"TwoVariableSeries({self}, cutoff_t={self._cutoff_t})"


def euler_phi_two_variable(
    t_scale: Rational, q_scale: Rational, cutoff_t: Rational
) -> TwoVariableSeries:
    """prod_{n>=1} (1 - t^(n*t_scale) q^(n*q_scale)), truncated in t."""
    ts, qs = _frac(t_scale), _frac(q_scale)
    if ts <= 0:
        raise ValueError(f"t_scale must be positive, got {ts}")
    result = TwoVariableSeries.one(cutoff_t)
    n = 1
    while n * ts < result.cutoff_t:
        result = result.times_one_minus_monomial(n * ts, n * qs)
        n += 1
    return result
