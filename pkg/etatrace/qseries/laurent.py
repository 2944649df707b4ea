"""
Laurent polynomials and rational functions in the quantum parameter q.

``LaurentPoly`` is a small immutable value type with exact rational coefficients.
``RatFunc`` wraps an element of the sympy fraction field QQ(q); the same field
elements are stored directly inside module matrices, and ``RatFunc`` is the
user-facing view with a canonical numerator/denominator pair.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Any, Dict, Mapping, Optional, Tuple, Union

from sympy import QQ, Symbol

from ..errors import PoleError

Rational = Union[int, Fraction]

#: The quantum parameter.
q_symbol = Symbol("q")

#: Fraction field QQ(q); entries of quantum module matrices are its elements.
FIELD = QQ.frac_field(q_symbol)


def _ground(value: Fraction) -> Any:
    return QQ(value.numerator, value.denominator)


def _to_fraction(value: Any) -> Fraction:
    return Fraction(int(value.numerator), int(value.denominator))


class LaurentPoly:
    """
    Finite sum of c_e q^e with integer exponents e and rational coefficients c_e.

    Zero coefficients are never stored, so two polynomials are equal exactly when
    their term tuples are equal.

    Example:
        >>> p = LaurentPoly({1: 1, -1: 1})
        >>> str(p * p)
        'q^2 + 2 + q^-2'
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, coefficients: Optional[Mapping[int, Rational]] = None) -> None:
        terms: Dict[int, Fraction] = {}
        for exp, coef in (coefficients or {}).items():
            value = Fraction(coef)
            if value:
                terms[int(exp)] = value
        self._terms: Tuple[Tuple[int, Fraction], ...] = tuple(sorted(terms.items()))
        self._hash = hash(self._terms)

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def constant(cls, value: Rational) -> "LaurentPoly":
        return cls({0: value})

    @classmethod
    def monomial(cls, exp: int, coef: Rational = 1) -> "LaurentPoly":
        return cls({exp: coef})

    # -- inspection ---------------------------------------------------------

    @property
    def coefficients(self) -> Dict[int, Fraction]:
        """Copy of the exponent -> coefficient map."""
        return dict(self._terms)

    def terms(self) -> Tuple[Tuple[int, Fraction], ...]:
        """Terms sorted by ascending exponent."""
        return self._terms

    def coefficient(self, exp: int) -> Fraction:
        return dict(self._terms).get(exp, Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and self._terms[0][0] == 0)

    def valuation(self) -> int:
        """Lowest exponent present."""
        if not self._terms:
            raise ValueError("the zero Laurent polynomial has no valuation")
        return self._terms[0][0]

    def degree(self) -> int:
        """Highest exponent present."""
        if not self._terms:
            raise ValueError("the zero Laurent polynomial has no degree")
        return self._terms[-1][0]

    def evaluate(self, x: Rational) -> Fraction:
        """Exact value at q = x."""
        x = Fraction(x)
        if x == 0 and self._terms and self._terms[0][0] < 0:
            raise PoleError(f"{self} has a pole at q = 0")
        return sum((c * x**e for e, c in self._terms), Fraction(0))

    # -- substitutions ------------------------------------------------------

    def bar(self) -> "LaurentPoly":
        """Image under q -> q^-1."""
        return LaurentPoly({-e: c for e, c in self._terms})

    def scale_exponents(self, d: int) -> "LaurentPoly":
        """Image under q -> q^d."""
        return LaurentPoly({d * e: c for e, c in self._terms})

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(other: Any) -> Optional["LaurentPoly"]:
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly.constant(other)
        return None

    def __add__(self, other: Any) -> "LaurentPoly":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        out = dict(self._terms)
        for e, c in rhs._terms:
            out[e] = out.get(e, Fraction(0)) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self._terms})

    def __sub__(self, other: Any) -> "LaurentPoly":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: Any) -> "LaurentPoly":
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs - self

    def __mul__(self, other: Any) -> "LaurentPoly":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        out: Dict[int, Fraction] = {}
        for e1, c1 in self._terms:
            for e2, c2 in rhs._terms:
                out[e1 + e2] = out.get(e1 + e2, Fraction(0)) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            if not self.is_monomial():
                raise ValueError(f"only monomials have Laurent inverses, got {self}")
            (e, c), = self._terms
            return LaurentPoly({e * n: c**n})
        result = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divide_exact(self, other: "LaurentPoly") -> "LaurentPoly":
        """
        Exact quotient self / other.

        Raises:
            ZeroDivisionError: If other is zero
            ValueError: If the division leaves a remainder
        """
        if not other:
            raise ZeroDivisionError("division by the zero Laurent polynomial")
        if not self:
            return LaurentPoly.zero()
        shift = self.valuation() - other.valuation()
        num = [c for _, c in _dense(self)]
        den = [c for _, c in _dense(other)]
        quotient = [Fraction(0)] * max(len(num) - len(den) + 1, 0)
        for k in range(len(quotient) - 1, -1, -1):
            factor = num[k + len(den) - 1] / den[-1]
            quotient[k] = factor
            if factor:
                for j, c in enumerate(den):
                    num[k + j] -= factor * c
        if any(num):
            raise ValueError(f"{self} is not divisible by {other}")
        return LaurentPoly({shift + k: c for k, c in enumerate(quotient)})

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self._terms == rhs._terms

    def __hash__(self) -> int:
        return self._hash

    # -- field bridge -------------------------------------------------------

    def to_field(self) -> Any:
        """The same value as an element of :data:`FIELD`."""
        ring = FIELD.field.ring
        shift = min(0, self._terms[0][0]) if self._terms else 0
        numer = ring.from_dict({(e - shift,): _ground(c) for e, c in self._terms})
        denom = ring.from_dict({(-shift,): QQ(1)})
        return FIELD.field.new(numer, denom)

    # -- display ------------------------------------------------------------

    def format(self, variable: str = "q") -> str:
        if not self._terms:
            return "0"
        pieces = []
        for e, c in reversed(self._terms):
            pieces.append(_format_term(c, _power(variable, e)))
        return _join_terms(pieces)

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        body = ", ".join(f"{e}: {c}" for e, c in self._terms)
        return f"LaurentPoly({{{body}}})"


def _dense(p: LaurentPoly) -> Tuple[Tuple[int, Fraction], ...]:
    lo, hi = p.valuation(), p.degree()
    coeffs = p.coefficients
    return tuple((e, coeffs.get(e, Fraction(0))) for e in range(lo, hi + 1))


def _power(variable: str, exp: Any) -> str:
    if exp == 0:
        return ""
    if exp == 1:
        return variable
    if isinstance(exp, Fraction) and exp.denominator != 1:
        return f"{variable}^({exp})"
    return f"{variable}^{exp}"


def _format_term(coef: Fraction, power: str) -> str:
    sign = "-" if coef < 0 else "+"
    mag = abs(coef)
    if not power:
        return f"{sign}{mag}"
    if mag == 1:
        return f"{sign}{power}"
    return f"{sign}{mag}*{power}"


def _join_terms(pieces: list) -> str:
    text = pieces[0][1:] if pieces[0][0] == "+" else pieces[0]
    for piece in pieces[1:]:
        text += f" {piece[0]} {piece[1:]}"
    return text


class RatFunc:
    """
    Exact element of QQ(q), stored as a sympy fraction-field element.

    The canonical view has a denominator that is an ordinary polynomial with
    constant term 1 and no common factor with the numerator; any power of q is
    carried by the numerator.

    Example:
        >>> f = RatFunc(qnum(2, 1), LaurentPoly({1: 1, -1: -1}))
        >>> f.denominator == 1
        False
    """

    __slots__ = ("_value", "_canonical")

    def __init__(
        self,
        numerator: Union[LaurentPoly, Rational] = 0,
        denominator: Union[LaurentPoly, Rational] = 1,
    ) -> None:
        num = LaurentPoly._coerce(numerator)
        den = LaurentPoly._coerce(denominator)
        if num is None or den is None:
            raise TypeError("RatFunc parts must be LaurentPoly or rational numbers")
        if not den:
            raise ZeroDivisionError("RatFunc with zero denominator")
        self._value = num.to_field() / den.to_field()
        self._canonical: Optional[Tuple[LaurentPoly, LaurentPoly]] = None

    @classmethod
    def from_field(cls, value: Any) -> "RatFunc":
        """Wrap an element of :data:`FIELD` (or anything it converts)."""
        obj = cls.__new__(cls)
        obj._value = FIELD.convert(value) if not FIELD.of_type(value) else value
        obj._canonical = None
        return obj

    def to_field(self) -> Any:
        return self._value

    def _parts(self) -> Tuple[LaurentPoly, LaurentPoly]:
        if self._canonical is None:
            num = {m[0]: _to_fraction(c) for m, c in self._value.numer.items()}
            den = {m[0]: _to_fraction(c) for m, c in self._value.denom.items()}
            low = min(den)
            lead = den[low]
            self._canonical = (
                LaurentPoly({e - low: c / lead for e, c in num.items()}),
                LaurentPoly({e - low: c / lead for e, c in den.items()}),
            )
        return self._canonical

    @property
    def numerator(self) -> LaurentPoly:
        return self._parts()[0]

    @property
    def denominator(self) -> LaurentPoly:
        return self._parts()[1]

    def is_zero(self) -> bool:
        return not self._value

    def __bool__(self) -> bool:
        return bool(self._value)

    def as_laurent(self) -> Optional[LaurentPoly]:
        """The value as a Laurent polynomial, or None if it has a non-trivial denominator."""
        num, den = self._parts()
        return num if den == 1 else None

    def monomial_exponent(self) -> Optional[Tuple[Fraction, int]]:
        """(c, e) when the value is c*q^e, otherwise None."""
        poly = self.as_laurent()
        if poly is None or not poly.is_monomial():
            return None
        (e, c), = poly.terms()
        return c, e

    def evaluate_at_one(self) -> Fraction:
        return ratfunc_eval_at_one(self)

    @staticmethod
    def _coerce(other: Any) -> Any:
        if isinstance(other, RatFunc):
            return other._value
        if isinstance(other, LaurentPoly):
            return other.to_field()
        if isinstance(other, (int, Fraction)):
            return LaurentPoly.constant(other).to_field()
        return None

    def __add__(self, other: Any) -> "RatFunc":
        rhs = self._coerce(other)
        return NotImplemented if rhs is None else RatFunc.from_field(self._value + rhs)

    __radd__ = __add__

    def __sub__(self, other: Any) -> "RatFunc":
        rhs = self._coerce(other)
        return NotImplemented if rhs is None else RatFunc.from_field(self._value - rhs)

    def __rsub__(self, other: Any) -> "RatFunc":
        lhs = self._coerce(other)
        return NotImplemented if lhs is None else RatFunc.from_field(lhs - self._value)

    def __mul__(self, other: Any) -> "RatFunc":
        rhs = self._coerce(other)
        return NotImplemented if rhs is None else RatFunc.from_field(self._value * rhs)

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> "RatFunc":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        if not rhs:
            raise ZeroDivisionError("RatFunc division by zero")
        return RatFunc.from_field(self._value / rhs)

    def __rtruediv__(self, other: Any) -> "RatFunc":
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        if not self._value:
            raise ZeroDivisionError("RatFunc division by zero")
        return RatFunc.from_field(lhs / self._value)

    def __neg__(self) -> "RatFunc":
        return RatFunc.from_field(-self._value)

    def __pow__(self, n: int) -> "RatFunc":
        if n < 0:
            if not self._value:
                raise ZeroDivisionError("zero raised to a negative power")
            return RatFunc.from_field(FIELD.one / self._value ** (-n))
        return RatFunc.from_field(self._value**n)

    def __eq__(self, other: object) -> bool:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return bool(self._value == rhs)

    def __hash__(self) -> int:
        return hash(self._parts())

    def __str__(self) -> str:
        num, den = self._parts()
        if den == 1:
            return str(num)
        return f"({num})/({den})"

    def __repr__(self) -> str:
        return f"RatFunc({self})"


def ratfunc_eval_at_one(f: RatFunc) -> Fraction:
    """
    Exact value of f at q = 1.

    The stored value is already reduced, so common (q - 1) factors are cancelled
    before evaluation.

    Raises:
        PoleError: If the reduced denominator vanishes at q = 1

    Example:
        >>> ratfunc_eval_at_one(RatFunc(qnum(5, 1)))
        Fraction(5, 1)
    """
    den = f.denominator.evaluate(1)
    if den == 0:
        raise PoleError(f"{f} has a pole at q = 1")
    return f.numerator.evaluate(1) / den


@lru_cache(maxsize=None)
def qnum(n: int, d: int = 1) -> LaurentPoly:
    """
    Quantum integer [n] evaluated at q^d: (q^(dn) - q^(-dn)) / (q^d - q^(-d)).

    Example:
        >>> str(qnum(3, 2))
        'q^4 + 1 + q^-4'
    """
    if d <= 0:
        raise ValueError(f"d must be a positive integer, got {d}")
    if n == 0:
        return LaurentPoly.zero()
    sign = 1 if n > 0 else -1
    m = abs(n)
    return LaurentPoly({d * (m - 1 - 2 * j): sign for j in range(m)})


@lru_cache(maxsize=None)
def qfactorial(n: int, d: int = 1) -> LaurentPoly:
    """[n]! at q^d; the empty product is 1."""
    if n < 0:
        raise ValueError(f"quantum factorial needs n >= 0, got {n}")
    result = LaurentPoly.one()
    for i in range(1, n + 1):
        result = result * qnum(i, d)
    return result


@lru_cache(maxsize=None)
def qbinomial(n: int, k: int, d: int = 1) -> LaurentPoly:
    """
    Quantum binomial [n]! / ([k]! [n-k]!) at q^d, computed by exact division.

    Raises:
        ValueError: Unless 0 <= k <= n
    """
    if k < 0 or k > n:
        raise ValueError(f"quantum binomial needs 0 <= k <= n, got n={n}, k={k}")
    return qfactorial(n, d).divide_exact(qfactorial(k, d) * qfactorial(n - k, d))


@lru_cache(maxsize=None)
def field_monomial(exp: int) -> Any:
    """q^exp as an element of :data:`FIELD`."""
    return LaurentPoly.monomial(exp).to_field()


@lru_cache(maxsize=None)
def field_qnum(n: int, d: int = 1) -> Any:
    """[n] at q^d as an element of :data:`FIELD`."""
    return qnum(n, d).to_field()


@lru_cache(maxsize=None)
def field_qfactorial(n: int, d: int = 1) -> Any:
    """[n]! at q^d as an element of :data:`FIELD`."""
    return qfactorial(n, d).to_field()
