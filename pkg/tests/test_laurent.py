"""
Tests for Laurent polynomials, rational functions and q-integers.
"""

from fractions import Fraction

import pytest

from etatrace.errors import PoleError
from etatrace.qseries import (
    LaurentPoly,
    RatFunc,
    qbinomial,
    qfactorial,
    qnum,
    ratfunc_eval_at_one,
)


class TestLaurentPolyArithmetic:
    """Test ring operations on Laurent polynomials."""

    def test_square_of_q_plus_inverse(self) -> None:
        """Test (q + q^-1)^2 = q^2 + 2 + q^-2."""
        p = LaurentPoly({1: 1, -1: 1})
        assert str(p * p) == "q^2 + 2 + q^-2"
        assert p**2 == LaurentPoly({2: 1, 0: 2, -2: 1})

    def test_zero_coefficients_are_dropped(self) -> None:
        """Test that cancelling terms leave no zero entries."""
        p = LaurentPoly({1: 1, 0: 0}) - LaurentPoly.monomial(1)
        assert p.is_zero()
        assert str(p) == "0"

    def test_compares_with_integers(self) -> None:
        """Test that constants compare equal to plain integers."""
        assert LaurentPoly.one() == 1
        assert LaurentPoly.constant(Fraction(1, 2)) * 2 == 1

    def test_valuation_and_degree(self) -> None:
        """Test lowest and highest exponents."""
        p = LaurentPoly({-3: 2, 5: 1})
        assert p.valuation() == -3
        assert p.degree() == 5

    def test_zero_has_no_valuation(self) -> None:
        """Test that the zero polynomial has no valuation."""
        with pytest.raises(ValueError):
            LaurentPoly.zero().valuation()

    def test_evaluate(self) -> None:
        """Test exact evaluation at a rational point."""
        p = LaurentPoly({1: 1, -1: 1})
        assert p.evaluate(2) == Fraction(5, 2)

    def test_evaluate_pole_at_zero(self) -> None:
        """Test that negative powers have a pole at q = 0."""
        with pytest.raises(PoleError):
            LaurentPoly({-1: 1}).evaluate(0)

    def test_bar_inverts_exponents(self) -> None:
        """Test the involution q -> q^-1."""
        assert LaurentPoly({2: 1, -1: 3}).bar() == LaurentPoly({-2: 1, 1: 3})

    def test_scale_exponents(self) -> None:
        """Test q -> q^d on a quantum integer."""
        assert qnum(2).scale_exponents(3) == qnum(2, 3)


class TestLaurentPolyDivision:
    """Test exact division."""

    def test_exact_quotient(self) -> None:
        """Test (q^2 - q^-2) / (q - q^-1) = q + q^-1."""
        num = LaurentPoly({2: 1, -2: -1})
        den = LaurentPoly({1: 1, -1: -1})
        assert num.divide_exact(den) == LaurentPoly({1: 1, -1: 1})

    def test_remainder_raises(self) -> None:
        """Test that a non-zero remainder is rejected."""
        with pytest.raises(ValueError):
            LaurentPoly({2: 1, 0: 1}).divide_exact(LaurentPoly({1: 1, 0: 1}))

    def test_division_by_zero(self) -> None:
        """Test division by the zero polynomial."""
        with pytest.raises(ZeroDivisionError):
            LaurentPoly.one().divide_exact(LaurentPoly.zero())


class TestQuantumIntegers:
    """Test q-integers, q-factorials and q-binomials."""

    def test_qnum_symmetric(self) -> None:
        """Test [3] = q^2 + 1 + q^-2."""
        assert str(qnum(3)) == "q^2 + 1 + q^-2"

    def test_qnum_at_power_of_q(self) -> None:
        """Test [3] at q^2."""
        assert str(qnum(3, 2)) == "q^4 + 1 + q^-4"

    def test_qnum_zero_and_negative(self) -> None:
        """Test [0] = 0 and [-n] = -[n]."""
        assert qnum(0).is_zero()
        assert qnum(-2) == -qnum(2)

    def test_qnum_rejects_bad_d(self) -> None:
        """Test that d must be positive."""
        with pytest.raises(ValueError):
            qnum(2, 0)

    def test_qfactorial_at_one(self) -> None:
        """Test that [4]! specializes to 4! at q = 1."""
        assert qfactorial(4).evaluate(1) == 24

    def test_qbinomial(self) -> None:
        """Test [4 choose 2] = q^4 + q^2 + 2 + q^-2 + q^-4."""
        assert qbinomial(4, 2) == LaurentPoly({4: 1, 2: 1, 0: 2, -2: 1, -4: 1})

    def test_qbinomial_out_of_range(self) -> None:
        """Test that k > n is rejected."""
        with pytest.raises(ValueError):
            qbinomial(2, 3)


class TestRatFunc:
    """Test rational functions in q."""

    def test_inverse_product_is_one(self) -> None:
        """Test [2] * (1/[2]) = 1."""
        f = RatFunc(qnum(2))
        assert f * RatFunc(1, qnum(2)) == 1

    def test_laurent_quotient_reduces(self) -> None:
        """Test that [4]/[2] reduces to q^2 + q^-2."""
        f = RatFunc(qnum(4), qnum(2))
        assert f.as_laurent() == LaurentPoly({2: 1, -2: 1})

    def test_proper_fraction_has_denominator(self) -> None:
        """Test that 1/[2] keeps a non-trivial denominator."""
        assert RatFunc(1, qnum(2)).as_laurent() is None

    def test_monomial_exponent(self) -> None:
        """Test recognising -q^3."""
        f = RatFunc(LaurentPoly.monomial(3, -1))
        assert f.monomial_exponent() == (-1, 3)
        assert str(f) == "-q^3"

    def test_not_a_monomial(self) -> None:
        """Test that q + 1 is not a monomial."""
        assert RatFunc(LaurentPoly({1: 1, 0: 1})).monomial_exponent() is None

    def test_negative_power(self) -> None:
        """Test q^-2 as a negative power of q."""
        q = RatFunc(LaurentPoly.monomial(1))
        assert q**-2 == LaurentPoly.monomial(-2)

    def test_zero_denominator(self) -> None:
        """Test that a zero denominator is rejected."""
        with pytest.raises(ZeroDivisionError):
            RatFunc(1, 0)

    def test_field_round_trip(self) -> None:
        """Test that the sympy field element carries the same value."""
        p = LaurentPoly({-2: 3, 1: Fraction(1, 2)})
        assert RatFunc.from_field(p.to_field()) == p

    def test_eval_at_one_after_cancellation(self) -> None:
        """Test that [4]/[2] evaluates to 2 at q = 1."""
        assert ratfunc_eval_at_one(RatFunc(qnum(4), qnum(2))) == 2

    def test_eval_at_one_pole(self) -> None:
        """Test that 1/(q - 1) has a pole at q = 1."""
        with pytest.raises(PoleError):
            ratfunc_eval_at_one(RatFunc(1, LaurentPoly({1: 1, 0: -1})))
