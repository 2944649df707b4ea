"""
Tests for the quantum Weyl group operators S_i, Pi and theta.
"""

import pytest

from etatrace import linalg
from etatrace.braid import (
    BraidOperator,
    compose,
    coxeter_closure,
    coxeter_operator,
    s_operator,
    s_operator_via_exponentials,
    s_squared_check,
    string_sizes,
    theta_operator,
    trace,
    verify_braid_relations,
    weight_shift_check,
)
from etatrace.errors import NonInvariantSubspaceError
from etatrace.qmodule import ModuleRegistry
from etatrace.qseries import LaurentPoly, RatFunc
from etatrace.rootdata import Weight


@pytest.fixture
def registry() -> ModuleRegistry:
    return ModuleRegistry()


class TestStrings:
    """Test the i-string decomposition."""

    def test_adjoint_a2_strings(self, registry: ModuleRegistry) -> None:
        """Test that the adjoint of A2 splits as 3 + 2 + 2 + 1 under each sl2."""
        m = registry.quantum("A2", (1, 1))
        assert string_sizes(m, 0) == [3, 2, 2, 1]
        assert string_sizes(m, 1) == [3, 2, 2, 1]

    def test_a1_single_string(self, registry: ModuleRegistry) -> None:
        """Test that an A1 module is one string."""
        assert string_sizes(registry.quantum("A1", (4,)), 0) == [5]

    def test_g2_short_root_strings_fill_module(self, registry: ModuleRegistry) -> None:
        """Test that the strings of the 7-dimensional G2 module cover it."""
        m = registry.quantum("G2", (1, 0))
        assert sum(string_sizes(m, 0)) == 7
        assert sum(string_sizes(m, 1)) == 7


class TestSOperator:
    """Test S_i on small modules."""

    def test_a1_fundamental_matrix(self, registry: ModuleRegistry) -> None:
        """Test S_1 on V(1) of A1."""
        s = s_operator(registry.quantum("A1", (1,)), 0)
        assert linalg.entries(s.matrix)[0][:2] == (0, 1)
        value = RatFunc.from_field(linalg.entries(s.matrix)[1][2])
        assert value == LaurentPoly({1: -1})

    def test_word(self, registry: ModuleRegistry) -> None:
        """Test that S_i carries the 1-based word (i + 1,)."""
        s = s_operator(registry.quantum("A2", (1, 0)), 1)
        assert s.word == (2,)
        assert not s.is_restricted

    @pytest.mark.parametrize(
        "lie, lam",
        [("A1", (3,)), ("A2", (1, 1)), ("B2", (1, 0)), ("B2", (0, 1)), ("G2", (1, 0))],
    )
    def test_closed_form_matches_exponentials(self, registry, lie, lam) -> None:
        """Test the string formula against the q-exponential product."""
        m = registry.quantum(lie, lam)
        for i in range(m.rank):
            assert s_operator(m, i) == s_operator_via_exponentials(m, i)

    @pytest.mark.parametrize("lie, lam", [("A1", (2,)), ("A2", (1, 1)), ("B2", (0, 2))])
    def test_s_squared(self, registry, lie, lam) -> None:
        """Test the scalar of S_i^2 on every string."""
        m = registry.quantum(lie, lam)
        for i in range(m.rank):
            assert s_squared_check(m, i).passed

    def test_weight_shift(self, registry: ModuleRegistry) -> None:
        """Test that S_i maps V_mu onto V_(s_i mu)."""
        m = registry.quantum("B2", (1, 0))
        for i in range(2):
            assert weight_shift_check(s_operator(m, i)).passed

    def test_restricted_operator(self, registry: ModuleRegistry) -> None:
        """Test that a restricted S_i agrees with the full one on its sources."""
        m = registry.quantum("A2", (1, 1))
        zero = Weight((0, 0))
        full = s_operator(m, 0)
        part = s_operator(m, 0, [zero])
        assert part.source_weights == frozenset([zero])
        assert linalg.equal(full.restrict(zero), part.restrict(zero))


class TestBraidOperator:
    """Test composition, inversion and powers."""

    @pytest.mark.parametrize("lie, lam", [("A2", (1, 0)), ("A2", (1, 1)), ("B2", (1, 0))])
    def test_braid_relations(self, registry, lie, lam) -> None:
        """Test S_i S_j S_i ... = S_j S_i S_j ...."""
        assert verify_braid_relations(registry.quantum(lie, lam)).passed

    @pytest.mark.slow
    def test_braid_relations_g2(self, registry: ModuleRegistry) -> None:
        """Test the six-term braid relation on the adjoint of G2."""
        assert verify_braid_relations(registry.quantum("G2", (0, 1))).passed

    def test_rank_one_passes_vacuously(self, registry: ModuleRegistry) -> None:
        """Test that A1 has no braid relation to check."""
        report = verify_braid_relations(registry.quantum("A1", (2,)))
        assert report.passed
        assert len(report) == 0

    def test_inverse(self, registry: ModuleRegistry) -> None:
        """Test S * S^-1 = 1 and the inverted word."""
        m = registry.quantum("A2", (1, 1))
        s = s_operator(m, 0)
        inv = s.inverse()
        assert inv.word == (-1,)
        assert s.compose(inv) == BraidOperator.identity(m)

    def test_power(self, registry: ModuleRegistry) -> None:
        """Test that power(2) is the matrix square and power(0) the identity."""
        m = registry.quantum("A1", (2,))
        s = s_operator(m, 0)
        assert linalg.equal(s.power(2).matrix, s.matrix.matmul(s.matrix))
        assert s.power(0) == BraidOperator.identity(m)
        assert s.power(-1) == s.inverse()

    def test_compose_order(self, registry: ModuleRegistry) -> None:
        """Test that compose keeps the written order of the word."""
        m = registry.quantum("A2", (1, 0))
        pi = compose([s_operator(m, 0), s_operator(m, 1)])
        assert pi.word == (1, 2)
        assert pi == coxeter_operator(m)
        assert s_operator(m, 0) @ s_operator(m, 1) == pi

    def test_compose_rejects_empty(self) -> None:
        """Test that compose needs an operator."""
        with pytest.raises(ValueError):
            compose([])

    def test_restrict_non_invariant(self, registry: ModuleRegistry) -> None:
        """Test that restricting S_1 to a moved weight space fails."""
        s = s_operator(registry.quantum("A1", (2,)), 0)
        with pytest.raises(NonInvariantSubspaceError):
            s.restrict((2,))

    def test_to_dict(self, registry: ModuleRegistry) -> None:
        """Test the serialized form of an operator."""
        data = coxeter_operator(registry.quantum("A2", (1, 0))).to_dict()
        assert data["type"] == "A2"
        assert data["lambda"] == [1, 0]
        assert data["word"] == [1, 2]
        assert data["source_weights"] is None
        assert set(data) == {"type", "lambda", "word", "source_weights", "matrix"}


class TestCoxeterTrace:
    """Test traces of Pi and theta."""

    def test_a1_adjoint_trace(self, registry: ModuleRegistry) -> None:
        """Test Tr(Pi, V(2)) = -q^2 for A1."""
        m = registry.quantum("A1", (2,))
        pi = coxeter_operator(m)
        assert str(trace(pi, (0,))) == "-q^2"
        assert trace(pi) == trace(pi, (0,))

    def test_a2_adjoint_trace(self, registry: ModuleRegistry) -> None:
        """Test Tr(Pi, V(1,1)) = -q^2 for A2."""
        pi = coxeter_operator(registry.quantum("A2", (1, 1)))
        assert str(trace(pi)) == "-q^2"

    def test_no_zero_weight_trace_vanishes(self, registry: ModuleRegistry) -> None:
        """Test that Pi has trace zero off the root lattice."""
        pi = coxeter_operator(registry.quantum("A2", (1, 0)))
        assert trace(pi).is_zero()

    def test_restricted_trace_needs_subspace(self, registry: ModuleRegistry) -> None:
        """Test that a restricted Pi is only traced over a weight space."""
        m = registry.quantum("A2", (1, 1))
        pi = coxeter_operator(m, [Weight((0, 0))])
        assert str(trace(pi, (0, 0))) == "-q^2"
        with pytest.raises(NonInvariantSubspaceError):
            trace(pi)

    def test_coxeter_closure(self, registry: ModuleRegistry) -> None:
        """Test that the Coxeter orbit of the zero weight is itself."""
        m = registry.quantum("A2", (1, 1))
        assert coxeter_closure(m, [(0, 0)]) == {Weight((0, 0))}
        assert len(coxeter_closure(m, [(1, 1)])) == 3

    def test_theta_a1(self, registry: ModuleRegistry) -> None:
        """Test theta = Pi^2 on V(2) of A1: diagonal q^2, q^4, q^2."""
        theta = theta_operator(registry.quantum("A1", (2,)))
        values = [RatFunc.from_field(v) for _, _, v in linalg.entries(theta.matrix)]
        assert [str(v) for v in values] == ["q^2", "q^4", "q^2"]

    def test_theta_restricted_matches_full(self, registry: ModuleRegistry) -> None:
        """Test theta built on the zero orbit against the full theta."""
        m = registry.quantum("A2", (1, 1))
        zero = Weight((0, 0))
        full = theta_operator(m)
        part = theta_operator(m, [zero])
        assert linalg.equal(full.restrict(zero), part.restrict(zero))
