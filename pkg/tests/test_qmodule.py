"""
Tests for the construction of V(lambda) and its defining relations.
"""

import pytest

from etatrace import linalg
from etatrace.errors import InvalidWeightError, SizeLimitExceeded
from etatrace.qmodule import (
    build_classical_module,
    build_module,
    module_from_dict,
    verify_classical_relations,
    verify_module_relations,
    weight_space_indices,
)
from etatrace.qseries import LaurentPoly, RatFunc
from etatrace.rootdata import Weight, build_root_datum, freudenthal_multiplicities


class TestConstruction:
    """Test bases, weights and matrix entries of constructed modules."""

    def test_a1_adjoint_basis(self) -> None:
        """Test V(2) of A1: three vectors of weights 2, 0, -2."""
        m = build_module(build_root_datum("A1"), (2,))
        assert m.dim == 3
        assert [w.coords for w in m.basis_weights] == [(2,), (0,), (-2,)]
        assert m.words == ((), (0,), (0, 0))
        assert weight_space_indices(m, (0,)) == [1]

    def test_a1_raising_coefficients(self) -> None:
        """Test E F^2 v = [2] F v on V(2) of A1."""
        m = build_module(build_root_datum("A1"), (2,))
        column = linalg.column(m.E[0], 2)
        assert list(column) == [1]
        assert RatFunc.from_field(column[1]) == LaurentPoly({1: 1, -1: 1})

    def test_lowering_on_monomial_basis(self) -> None:
        """Test that F_i maps a basis monomial to the next one with coefficient 1."""
        m = build_module(build_root_datum("A1"), (3,))
        for k in range(3):
            column = linalg.column(m.F[0], k)
            assert list(column) == [k + 1]
            assert RatFunc.from_field(column[k + 1]) == 1

    def test_k_on_highest_weight_vector(self) -> None:
        """Test K_i v_lambda = q^(d_i lambda_i) v_lambda."""
        m = build_module(build_root_datum("G2"), (1, 0))
        assert m.K_exponent(0, 0) == 1
        assert m.K_exponent(1, 0) == 0

    def test_a2_adjoint_weight_spaces(self) -> None:
        """Test that V(1,1) of A2 has a two-dimensional zero weight space."""
        m = build_module(build_root_datum("A2"), (1, 1))
        assert m.dim == 8
        assert len(m.weight_space_indices(Weight((0, 0)))) == 2
        assert m.highest_weight_index == 0

    @pytest.mark.parametrize(
        "name, lam",
        [("A2", (2, 1)), ("B2", (1, 1)), ("G2", (1, 0)), ("A3", (0, 1, 0)), ("C3", (1, 0, 0))],
    )
    def test_multiplicities_match_freudenthal(self, name: str, lam: tuple) -> None:
        """Test weight-space dimensions against Freudenthal's formula."""
        datum = build_root_datum(name)
        m = build_module(datum, lam)
        assert m.weight_multiplicities() == freudenthal_multiplicities(datum, Weight(lam))

    def test_trivial_module(self) -> None:
        """Test V(0) is one-dimensional with zero raising and lowering maps."""
        m = build_module(build_root_datum("B2"), (0, 0))
        assert m.dim == 1
        assert all(linalg.is_zero(x) for x in m.E + m.F)

    def test_non_dominant_rejected(self) -> None:
        """Test that a non-dominant highest weight is rejected."""
        with pytest.raises(InvalidWeightError):
            build_module(build_root_datum("A2"), (1, -1))

    def test_size_limit(self) -> None:
        """Test that an oversized module is refused before construction."""
        with pytest.raises(SizeLimitExceeded) as info:
            build_module(build_root_datum("A2"), (3, 3), size_limit=20)
        assert info.value.dim == 64
        assert info.value.weight == (3, 3)
        assert "3,3" in str(info.value)


class TestQuantumRelations:
    """Test the defining relations of U_q(g) on constructed modules."""

    @pytest.mark.parametrize(
        "name, lam",
        [
            ("A1", (3,)),
            ("A2", (1, 0)),
            ("A2", (1, 1)),
            ("B2", (1, 0)),
            ("B2", (0, 1)),
            ("C3", (1, 0, 0)),
            ("G2", (1, 0)),
        ],
    )
    def test_relations_hold(self, name: str, lam: tuple) -> None:
        """Test every relation as an exact matrix identity."""
        report = verify_module_relations(build_module(build_root_datum(name), lam))
        assert report.passed, str(report.first_failure)

    @pytest.mark.slow
    @pytest.mark.parametrize("name, lam", [("G2", (0, 1)), ("B2", (1, 1)), ("A3", (1, 0, 1))])
    def test_relations_hold_larger(self, name: str, lam: tuple) -> None:
        """Test the relations on larger modules."""
        report = verify_module_relations(build_module(build_root_datum(name), lam))
        assert report.passed, str(report.first_failure)

    def test_report_names_relations(self) -> None:
        """Test that the report lists the Serre relations by generator."""
        report = verify_module_relations(build_module(build_root_datum("A2"), (1, 0)))
        names = [r.name for r in report.results]
        assert "Serre E1, E2" in names
        assert "Serre F2, F1" in names


class TestClassicalModules:
    """Test the q = 1 modules built over the rationals."""

    @pytest.mark.parametrize(
        "name, lam", [("A1", (2,)), ("A2", (1, 1)), ("B2", (0, 2)), ("G2", (1, 0))]
    )
    def test_classical_relations(self, name: str, lam: tuple) -> None:
        """Test the Chevalley-Serre relations."""
        report = verify_classical_relations(build_classical_module(build_root_datum(name), lam))
        assert report.passed, str(report.first_failure)

    def test_same_weights_as_quantum(self) -> None:
        """Test that the classical and quantum bases have the same weights."""
        datum = build_root_datum("B2")
        quantum = build_module(datum, (1, 1))
        classical = build_classical_module(datum, (1, 1))
        assert quantum.weight_multiplicities() == classical.weight_multiplicities()


class TestSerialization:
    """Test the JSON form of modules."""

    def test_quantum_round_trip(self) -> None:
        """Test that E and F survive to_dict/module_from_dict exactly."""
        datum = build_root_datum("A2")
        m = build_module(datum, (1, 1))
        back = module_from_dict(datum, m.to_dict())
        assert back.basis_weights == m.basis_weights
        assert all(linalg.equal(a, b) for a, b in zip(back.E, m.E))
        assert all(linalg.equal(a, b) for a, b in zip(back.F, m.F))
        assert all(linalg.equal(a, b) for a, b in zip(back.K, m.K))

    def test_classical_round_trip(self) -> None:
        """Test the classical kind is restored."""
        datum = build_root_datum("G2")
        m = build_classical_module(datum, (1, 0))
        back = module_from_dict(datum, m.to_dict())
        assert back.to_dict() == m.to_dict()

    def test_words_are_one_based(self) -> None:
        """Test that stored generator words use 1-based indices."""
        data = build_module(build_root_datum("A1"), (2,)).to_dict()
        assert data["words"] == [[], [1], [1, 1]]
        assert data["kind"] == "quantum"

    def test_type_mismatch(self) -> None:
        """Test that a document of another type is rejected."""
        data = build_module(build_root_datum("A1"), (1,)).to_dict()
        with pytest.raises(ValueError):
            module_from_dict(build_root_datum("A2"), data)
