"""
Tests for trace terms, the series identities and the self-test.
"""

import json
from fractions import Fraction

import pytest

from etatrace.errors import SizeLimitExceeded
from etatrace.identities import (
    ACCEPTANCE,
    DEFAULT_CUTOFFS,
    DEFAULT_TYPES,
    IdentityReport,
    TraceTerm,
    default_cutoff,
    kostant_product,
    lhs_series,
    quantum_trace_term,
    rhs_series,
    run_selftest,
    summarize,
    two_variable_series,
    verify_kostant_classical,
    verify_main_identity,
    verify_simply_laced_form,
    verify_theta_scalars,
)
from etatrace.qmodule import ModuleRegistry
from etatrace.qseries import euler_phi, series_pow
from etatrace.rootdata import Weight, build_root_datum, dominant_weights_up_to_dim

SWEEP_TYPES = ("A1", "A2", "B2", "G2")

#: Every dominant weight of dimension at most 200 in the sweep types.
SWEEP = [
    (lie, w.coords)
    for lie in SWEEP_TYPES
    for w in dominant_weights_up_to_dim(build_root_datum(lie), 200)
]


@pytest.fixture
def registry() -> ModuleRegistry:
    return ModuleRegistry()


class TestTraceTerm:
    """Test single trace terms."""

    def test_a2_adjoint(self, registry: ModuleRegistry) -> None:
        """Test the term of the A2 adjoint: epsilon -1, dim 8, exponent 2."""
        term = quantum_trace_term(build_root_datum("A2"), (1, 1), registry)
        assert (term.epsilon, term.dim, term.exponent) == (-1, 8, Fraction(2))
        assert str(term.trace) == "-q^2"
        assert term.coefficient == -8

    def test_a1_positive_sign(self, registry: ModuleRegistry) -> None:
        """Test V(4) of A1: epsilon +1 and exponent 6."""
        term = quantum_trace_term(build_root_datum("A1"), (4,), registry)
        assert term.epsilon == 1
        assert term.dim == 5
        assert term.exponent == 6

    def test_off_root_lattice(self, registry: ModuleRegistry) -> None:
        """Test that an odd A1 weight contributes nothing and builds no module."""
        term = quantum_trace_term(build_root_datum("A1"), (3,), registry)
        assert term.epsilon == 0
        assert term.trace is not None and term.trace.is_zero()
        assert len(registry) == 0

    def test_trivial_module(self, registry: ModuleRegistry) -> None:
        """Test that V(0) gives the constant term 1."""
        term = quantum_trace_term(build_root_datum("B2"), (0, 0), registry)
        assert (term.epsilon, term.dim, term.exponent) == (1, 1, 0)

    def test_dict_round_trip(self) -> None:
        """Test TraceTerm.from_dict on a serialized term."""
        term = TraceTerm(Weight((1, 1)), 8, -1, Fraction(2), Fraction(1))
        data = term.to_dict()
        assert data == {
            "lambda": [1, 1],
            "dim": 8,
            "epsilon": -1,
            "exponent": "2",
            "c_lambda": "1",
        }
        assert TraceTerm.from_dict(data) == term


class TestSeriesSides:
    """Test both sides of the main identity."""

    def test_a1_sides(self, registry: ModuleRegistry) -> None:
        """Test the A1 sides below 3."""
        datum = build_root_datum("A1")
        assert str(lhs_series(datum, 3, registry)) == "1 - 3x^2"
        assert str(rhs_series(datum, 3)) == "1 - 3x^2"

    def test_a2_sides(self, registry: ModuleRegistry) -> None:
        """Test the A2 sides below 3."""
        datum = build_root_datum("A2")
        assert str(lhs_series(datum, 3, registry)) == "1 - 8x^2"
        assert str(rhs_series(datum, 3)) == "1 - 8x^2"

    def test_nonpositive_cutoff(self, registry: ModuleRegistry) -> None:
        """Test that a cutoff must be positive."""
        with pytest.raises(ValueError):
            lhs_series(build_root_datum("A1"), 0, registry)

    def test_default_cutoffs(self) -> None:
        """Test the tabulated cutoffs and the fallback."""
        assert default_cutoff(build_root_datum("A1")) == 40
        assert default_cutoff(build_root_datum("C3")) == 3


class TestMainIdentity:
    """Test the Coxeter trace identity."""

    def test_a1(self, registry: ModuleRegistry) -> None:
        """Test A1 below 30."""
        report = verify_main_identity(build_root_datum("A1"), 30, registry)
        assert report.match
        assert report.first_discrepancy is None
        assert report.identity == "main"

    def test_a2(self, registry: ModuleRegistry) -> None:
        """Test A2 below 4."""
        assert verify_main_identity(build_root_datum("A2"), 4, registry).match

    def test_b2(self, registry: ModuleRegistry) -> None:
        """Test B2 below 4."""
        assert verify_main_identity(build_root_datum("B2"), 4, registry).match

    @pytest.mark.slow
    @pytest.mark.parametrize("lie, cutoff", [("A2", 8), ("A3", 5), ("B2", 6), ("G2", 5)])
    def test_default_cutoffs(self, registry, lie, cutoff) -> None:
        """Test each type at its tabulated cutoff."""
        datum = build_root_datum(lie)
        assert default_cutoff(datum) == cutoff
        report = verify_main_identity(datum, cutoff, registry)
        assert report.match, str(report)
        if datum.lie_type.is_simply_laced:
            expected = series_pow(euler_phi(2, cutoff), datum.dim_g)
            assert report.lhs.equals_to_cutoff(expected)

    def test_a3_simply_laced_form(self) -> None:
        """Test that the A3 product side is phi(x^2)^15 below 5."""
        assert verify_simply_laced_form(build_root_datum("A3"), 5).passed

    def test_threads(self, registry: ModuleRegistry) -> None:
        """Test that a thread pool gives the same report."""
        datum = build_root_datum("A2")
        serial = verify_main_identity(datum, 4, registry)
        pooled = verify_main_identity(datum, 4, registry, threads=2)
        assert pooled.match
        assert [t.lam for t in pooled.terms] == [t.lam for t in serial.terms]

    def test_size_limit(self) -> None:
        """Test that a module above the limit aborts the run."""
        with pytest.raises(SizeLimitExceeded):
            verify_main_identity(build_root_datum("A2"), 4, ModuleRegistry(size_limit=5))

    def test_simply_laced_form(self) -> None:
        """Test phi(x^2)^(dim g) for A2 and its rejection for B2."""
        assert verify_simply_laced_form(build_root_datum("A2"), 6).passed
        with pytest.raises(ValueError):
            verify_simply_laced_form(build_root_datum("B2"), 6)


class TestKostantIdentity:
    """Test the classical identity."""

    @pytest.mark.parametrize("lie, cutoff", [("A1", 10), ("A2", 4), ("B2", 3)])
    def test_match(self, registry, lie, cutoff) -> None:
        """Test the classical identity on small types."""
        report = verify_kostant_classical(build_root_datum(lie), cutoff, registry)
        assert report.match, str(report)

    @pytest.mark.slow
    def test_a1_to_20(self, registry: ModuleRegistry) -> None:
        """Test the classical identity for A1 below 20."""
        report = verify_kostant_classical(build_root_datum("A1"), 20, registry)
        assert report.match, str(report)
        assert all(t.epsilon in (-1, 0, 1) for t in report.terms)

    def test_product_constant_term(self) -> None:
        """Test that the product side starts with 1."""
        assert str(kostant_product(build_root_datum("A1"), Fraction(1, 2))) == "1"


class TestTwoVariableIdentity:
    """Test the two-variable refinement."""

    @pytest.mark.parametrize("lie, cutoff", [("A1", 4), ("A2", 2)])
    def test_match(self, registry, lie, cutoff) -> None:
        """Test the two-variable identity on small types."""
        report = two_variable_series(build_root_datum(lie), cutoff, registry)
        assert report.match, str(report)
        assert report.identity == "two-var"

    @pytest.mark.slow
    def test_a2_to_4(self, registry: ModuleRegistry) -> None:
        """Test the two-variable identity for A2 below t^4."""
        report = two_variable_series(build_root_datum("A2"), 4, registry)
        assert report.match, str(report)


class TestReports:
    """Test report serialization and the theta report."""

    def test_identity_report_json(self, registry: ModuleRegistry) -> None:
        """Test that a report survives a JSON round trip unchanged."""
        report = verify_main_identity(build_root_datum("A1"), 12, registry)
        text = report.to_json()
        again = IdentityReport.from_dict(json.loads(text))
        assert again.to_json() == text
        assert again.match

    def test_two_variable_report_json(self, registry: ModuleRegistry) -> None:
        """Test the JSON round trip of a two-variable report."""
        report = two_variable_series(build_root_datum("A1"), 2, registry)
        text = report.to_json()
        assert IdentityReport.from_dict(json.loads(text)).to_json() == text

    def test_inconsistent_match_flag(self, registry: ModuleRegistry) -> None:
        """Test that a match flag contradicting the discrepancy is rejected."""
        data = verify_main_identity(build_root_datum("A1"), 6, registry).to_dict()
        data["match"] = False
        with pytest.raises(ValueError):
            IdentityReport.from_dict(data)

    def test_theta_a2_adjoint(self, registry: ModuleRegistry) -> None:
        """Test theta on the A2 adjoint: q^4 on roots and q^6 on the Cartan part."""
        report = verify_theta_scalars(build_root_datum("A2"), (1, 1), registry)
        assert report.passed
        assert report.c1 == report.c2
        assert report.eigenvalues == {"q^4": 6, "q^6": 2}

    @pytest.mark.parametrize("lie, lam", [("A1", (3,)), ("B2", (1, 0)), ("G2", (1, 0))])
    def test_theta_scalars(self, registry, lie, lam) -> None:
        """Test the theta scalar checks on further modules."""
        report = verify_theta_scalars(build_root_datum(lie), lam, registry)
        assert report.passed, str(report)
        assert report.to_dict()["passed"]


class TestSelftest:
    """Test the acceptance matrix."""

    @pytest.mark.slow
    def test_a1(self) -> None:
        """Test that the A1 acceptance cases pass."""
        report = run_selftest(["A1"], ModuleRegistry())
        assert report.passed
        assert summarize(report).startswith("all ")

    def test_type_without_cases(self) -> None:
        """Test that a type without acceptance cases is rejected."""
        with pytest.raises(ValueError):
            run_selftest(["C3"], ModuleRegistry())

    def test_main_cutoffs_are_tabulated(self) -> None:
        """Test that every acceptance main cutoff is the tabulated default."""
        for name, (_, main_cut, _, _) in ACCEPTANCE.items():
            assert main_cut == DEFAULT_CUTOFFS[name]
        assert "A3" in ACCEPTANCE
        assert "A3" not in DEFAULT_TYPES

    @pytest.mark.slow
    def test_a3(self) -> None:
        """Test that the A3 acceptance cases pass."""
        report = run_selftest(["A3"], ModuleRegistry())
        assert report.passed, summarize(report)


class TestDominantSweep:
    """Test theta and the Coxeter trace on every small dominant weight."""

    @pytest.mark.slow
    @pytest.mark.parametrize("lie, lam", SWEEP)
    def test_theta_scalars(self, registry, lie, lam) -> None:
        """Test that theta is +-q^e on v_lambda and on V_0 with one sign."""
        report = verify_theta_scalars(build_root_datum(lie), lam, registry)
        assert report.passed, str(report)
        assert report.c1 in (1, -1)
        if report.c2 is not None:
            assert report.c2 == report.c1

    @pytest.mark.slow
    @pytest.mark.parametrize("lie, lam", SWEEP)
    def test_trace_term(self, registry, lie, lam) -> None:
        """Test Tr(Pi, V) = Tr(Pi, V_0) = epsilon q^e with the classical epsilon."""
        term = quantum_trace_term(build_root_datum(lie), lam, registry, full_trace=True)
        assert term.epsilon in (-1, 0, 1)
        assert term.trace is not None
        assert term.trace.is_zero() == (term.epsilon == 0)

    def test_sweep_covers_known_modules(self) -> None:
        """Test that the sweep includes the adjoints and stops at dimension 200."""
        assert ("A2", (1, 1)) in SWEEP
        assert ("G2", (0, 1)) in SWEEP
        assert ("A1", (199,)) in SWEEP
        assert ("A1", (200,)) not in SWEEP
        assert sum(1 for lie, _ in SWEEP if lie == "G2") == 9

    def test_full_trace_off_root_lattice(self, registry: ModuleRegistry) -> None:
        """Test the full trace check on a module with no zero weight."""
        term = quantum_trace_term(build_root_datum("A2"), (1, 0), registry, full_trace=True)
        assert term.epsilon == 0
        assert len(registry) == 1
