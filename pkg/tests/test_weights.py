"""
Tests for dimensions, weight multiplicities and the exponents attached to a highest weight.
"""

from fractions import Fraction
from itertools import product

import pytest

from etatrace.errors import InvalidWeightError
from etatrace.rootdata import (
    Weight,
    build_root_datum,
    c_lambda,
    casimir_exponent,
    coxeter_exponent,
    dominant_weights_up_to_dim,
    enumerate_contributing_weights,
    freudenthal_multiplicities,
    weyl_dim,
)


class TestWeight:
    """Test the Weight value type."""

    def test_parse(self) -> None:
        """Test comma-separated coordinates."""
        assert Weight.parse("1, 0,2").coords == (1, 0, 2)

    def test_parse_rejects_garbage(self) -> None:
        """Test that non-integers are rejected."""
        with pytest.raises(InvalidWeightError):
            Weight.parse("1,x")

    def test_arithmetic(self) -> None:
        """Test addition, negation and scaling."""
        w = Weight((1, 2))
        assert (w + w).coords == (2, 4)
        assert (-w).coords == (-1, -2)
        assert w.scale(3) == Weight((3, 6))

    def test_dominance_and_zero(self) -> None:
        """Test dominance and the zero weight."""
        assert Weight((0, 3)).is_dominant()
        assert not Weight((1, -1)).is_dominant()
        assert Weight.zero(3).is_zero()

    def test_str(self) -> None:
        """Test the "1,1" display used in messages."""
        assert str(Weight((1, 1))) == "1,1"


class TestWeylDimension:
    """Test the Weyl dimension formula."""

    @pytest.mark.parametrize(
        "name, lam, dim",
        [
            ("A1", (4,), 5),
            ("A2", (1, 1), 8),
            ("A2", (2, 0), 6),
            ("A3", (1, 0, 1), 15),
            ("B2", (1, 0), 5),
            ("B2", (0, 1), 4),
            ("B2", (0, 2), 10),
            ("C3", (1, 0, 0), 6),
            ("G2", (1, 0), 7),
            ("G2", (0, 1), 14),
            ("D4", (0, 1, 0, 0), 28),
            ("E6", (1, 0, 0, 0, 0, 0), 27),
        ],
    )
    def test_dimensions(self, name: str, lam: tuple, dim: int) -> None:
        """Test known dimensions of irreducible modules."""
        assert weyl_dim(build_root_datum(name), Weight(lam)) == dim

    def test_adjoint_dimension(self) -> None:
        """Test that the highest root gives dim g."""
        for name in ("A2", "B2", "G2", "D4"):
            datum = build_root_datum(name)
            theta = datum.root_to_weight(datum.highest_root)
            assert weyl_dim(datum, theta) == datum.dim_g

    def test_rejects_non_dominant(self) -> None:
        """Test that a non-dominant weight is rejected."""
        with pytest.raises(InvalidWeightError):
            weyl_dim(build_root_datum("A2"), Weight((1, -1)))


class TestFreudenthal:
    """Test weight multiplicities."""

    def test_a2_adjoint(self) -> None:
        """Test the zero weight of the A2 adjoint module has multiplicity 2."""
        mults = freudenthal_multiplicities(build_root_datum("A2"), Weight((1, 1)))
        assert mults[Weight((0, 0))] == 2
        assert len(mults) == 7

    def test_g2_seven_dimensional(self) -> None:
        """Test that V(varpi_1) of G2 has seven weights of multiplicity one."""
        mults = freudenthal_multiplicities(build_root_datum("G2"), Weight((1, 0)))
        assert sorted(mults.values()) == [1] * 7

    @pytest.mark.parametrize(
        "name, lam",
        [("A2", (2, 1)), ("B2", (1, 1)), ("B2", (0, 2)), ("G2", (0, 1)), ("A3", (1, 1, 0))],
    )
    def test_total_is_weyl_dimension(self, name: str, lam: tuple) -> None:
        """Test that multiplicities add up to the Weyl dimension."""
        datum = build_root_datum(name)
        assert sum(freudenthal_multiplicities(datum, Weight(lam)).values()) == weyl_dim(
            datum, Weight(lam)
        )

    def test_weyl_invariance(self) -> None:
        """Test that multiplicities are constant along Weyl orbits."""
        from etatrace.rootdata import weyl_orbit

        datum = build_root_datum("B2")
        mults = freudenthal_multiplicities(datum, Weight((1, 1)))
        for mu, n in mults.items():
            for image in weyl_orbit(datum, mu):
                assert mults[image] == n


class TestExponents:
    """Test the Casimir value and the exponents derived from it."""

    def test_a2_adjoint(self) -> None:
        """Test (lambda, lambda + 2 rho) = 6, exponent 2 and c = 1 for the A2 adjoint."""
        a2 = build_root_datum("A2")
        lam = Weight((1, 1))
        assert casimir_exponent(a2, lam) == 6
        assert coxeter_exponent(a2, lam) == 2
        assert c_lambda(a2, lam) == 1

    def test_a1_exponent(self) -> None:
        """Test (lambda, lambda + 2 rho)/h = m(m+1) for lambda = 2m."""
        a1 = build_root_datum("A1")
        for m in range(5):
            assert coxeter_exponent(a1, Weight((2 * m,))) == m * (m + 1)

    def test_g2_fundamental(self) -> None:
        """Test the exponents of V(varpi_1) for G2."""
        g2 = build_root_datum("G2")
        assert coxeter_exponent(g2, Weight((1, 0))) == 2
        assert c_lambda(g2, Weight((1, 0))) == Fraction(1, 2)

    @pytest.mark.parametrize("name", ["A2", "G2", "D4"])
    def test_adjoint_has_c_one(self, name: str) -> None:
        """Test c(theta) = 1 when the table k matches the Killing form."""
        datum = build_root_datum(name)
        theta = datum.root_to_weight(datum.highest_root)
        assert c_lambda(datum, theta) == 1


class TestEnumeration:
    """Test enumeration of weights below an exponent cutoff."""

    def test_a1(self) -> None:
        """Test the A1 weights below exponent 3."""
        weights = enumerate_contributing_weights(build_root_datum("A1"), 3)
        assert [w.coords for w in weights] == [(0,), (1,), (2,)]

    def test_a2_sorted_by_exponent(self) -> None:
        """Test order by exponent, then coordinates."""
        weights = enumerate_contributing_weights(build_root_datum("A2"), 3)
        assert [w.coords for w in weights] == [
            (0, 0),
            (0, 1),
            (1, 0),
            (1, 1),
            (0, 2),
            (2, 0),
        ]

    def test_matches_brute_force(self) -> None:
        """Test against a plain scan of a generous box for B2."""
        b2 = build_root_datum("B2")
        expected = {
            Weight(c)
            for c in product(range(8), repeat=2)
            if coxeter_exponent(b2, Weight(c)) < 4
        }
        assert set(enumerate_contributing_weights(b2, 4)) == expected

    def test_rational_cutoff(self) -> None:
        """Test that the cutoff is strict and may be rational."""
        weights = enumerate_contributing_weights(build_root_datum("A1"), Fraction(3, 4))
        assert [w.coords for w in weights] == [(0,)]

    def test_nonpositive_cutoff(self) -> None:
        """Test that the cutoff must be positive."""
        with pytest.raises(ValueError):
            enumerate_contributing_weights(build_root_datum("A1"), 0)

    def test_a2_up_to_dim(self) -> None:
        """Test the A2 weights of dimension at most 10, by dimension."""
        weights = dominant_weights_up_to_dim(build_root_datum("A2"), 10)
        assert [w.coords for w in weights] == [
            (0, 0),
            (0, 1),
            (1, 0),
            (0, 2),
            (2, 0),
            (1, 1),
            (0, 3),
            (3, 0),
        ]

    @pytest.mark.parametrize("name", ["A1", "B2", "G2"])
    def test_up_to_dim_matches_brute_force(self, name: str) -> None:
        """Test the dimension bound against a plain scan of a generous box."""
        datum = build_root_datum(name)
        box = 201 if datum.rank == 1 else 60
        expected = {
            Weight(c)
            for c in product(range(box), repeat=datum.rank)
            if weyl_dim(datum, Weight(c)) <= 200
        }
        assert set(dominant_weights_up_to_dim(datum, 200)) == expected

    def test_up_to_dim_rejects_zero(self) -> None:
        """Test that the dimension bound must be positive."""
        with pytest.raises(ValueError):
            dominant_weights_up_to_dim(build_root_datum("A1"), 0)
