"""
Tests for the JSON converters.
"""

import json
from fractions import Fraction

import pytest
from sympy import QQ

from etatrace import linalg
from etatrace.converters import (
    canonical_dumps,
    fraction_to_str,
    laurent_from_json,
    laurent_to_json,
    matrix_from_json,
    matrix_to_json,
    parse_fraction,
    ratfunc_from_json,
    ratfunc_to_json,
)
from etatrace.qseries import LaurentPoly, RatFunc, qnum
from etatrace.qseries.laurent import FIELD


class TestFractions:
    """Test exact rational strings."""

    def test_fraction_to_str(self) -> None:
        """Test integers and proper fractions."""
        assert fraction_to_str(Fraction(8, 9)) == "8/9"
        assert fraction_to_str(3) == "3"
        assert fraction_to_str(Fraction(-6, 4)) == "-3/2"

    @pytest.mark.parametrize(
        "text, expected",
        [("5", Fraction(5)), ("2/3", Fraction(2, 3)), ("0.5", Fraction(1, 2)), (" 7 ", 7)],
    )
    def test_parse_fraction(self, text: str, expected: Fraction) -> None:
        """Test the accepted spellings of a rational number."""
        assert parse_fraction(text) == expected

    def test_parse_passthrough(self) -> None:
        """Test that ints and Fractions pass through."""
        assert parse_fraction(4) == Fraction(4)
        assert parse_fraction(Fraction(1, 3)) == Fraction(1, 3)

    @pytest.mark.parametrize("text", ["abc", "1/0", ""])
    def test_parse_invalid(self, text: str) -> None:
        """Test that malformed text raises ValueError."""
        with pytest.raises(ValueError):
            parse_fraction(text)


class TestLaurentJson:
    """Test the Laurent polynomial and rational function forms."""

    def test_laurent_to_json(self) -> None:
        """Test [exp, coef] pairs for [3]_q."""
        data = laurent_to_json(qnum(3))
        assert sorted(data) == [[-2, "1"], [0, "1"], [2, "1"]]

    def test_laurent_from_json_merges_terms(self) -> None:
        """Test that repeated exponents are added."""
        p = laurent_from_json([[1, "1/2"], [1, "1/2"], [0, "-1"]])
        assert p == LaurentPoly({1: 1, 0: -1})

    def test_laurent_bad_pair(self) -> None:
        """Test that a term must be a pair."""
        with pytest.raises(ValueError):
            laurent_from_json([[1, "1", "extra"]])

    def test_ratfunc(self) -> None:
        """Test a proper quotient through JSON."""
        f = RatFunc(LaurentPoly({1: 1}), qnum(2))
        data = ratfunc_to_json(f)
        assert set(data) == {"num", "den"}
        assert ratfunc_from_json(json.loads(json.dumps(data))) == f

    def test_ratfunc_from_field_element(self) -> None:
        """Test that raw field elements are accepted."""
        data = ratfunc_to_json(FIELD.one)
        assert ratfunc_from_json(data) == 1

    def test_ratfunc_missing_key(self) -> None:
        """Test that num and den are both required."""
        with pytest.raises(ValueError):
            ratfunc_from_json({"num": [[0, "1"]]})


class TestMatrixJson:
    """Test sparse matrix documents."""

    def test_quantum_matrix(self) -> None:
        """Test a matrix over QQ(q)."""
        q = RatFunc(LaurentPoly({1: 1})).to_field()
        a = linalg.from_entries([(0, 1, q), (1, 0, FIELD.one)], (2, 2), FIELD)
        data = matrix_to_json(a)
        assert data["shape"] == [2, 2]
        assert [e[:2] for e in data["entries"]] == [[0, 1], [1, 0]]
        assert linalg.equal(matrix_from_json(json.loads(json.dumps(data))), a)

    def test_rational_matrix(self) -> None:
        """Test a matrix over QQ with fraction strings."""
        a = linalg.from_entries([(0, 0, QQ(1, 2)), (1, 1, QQ(-3))], (2, 2), QQ)
        data = matrix_to_json(a)
        assert data["entries"] == [[0, 0, "1/2"], [1, 1, "-3"]]
        assert linalg.equal(matrix_from_json(data, QQ), a)

    def test_empty_matrix(self) -> None:
        """Test the 0x0 matrix."""
        a = linalg.from_entries([], (0, 0), QQ)
        assert matrix_to_json(a) == {"shape": [0, 0], "entries": []}


class TestCanonicalDumps:
    """Test deterministic JSON text."""

    def test_sorted_compact(self) -> None:
        """Test key order and separators."""
        assert canonical_dumps({"b": 1, "a": [1, 2]}) == '{"a":[1,2],"b":1}'

    def test_reserialization_is_identical(self) -> None:
        """Test that parsing and dumping again gives the same bytes."""
        text = canonical_dumps({"z": {"y": "1/2", "x": [3, None]}, "a": True})
        assert canonical_dumps(json.loads(text)) == text

    def test_pretty(self) -> None:
        """Test the indented form."""
        assert canonical_dumps({"a": 1}, pretty=True) == '{\n  "a": 1\n}'
