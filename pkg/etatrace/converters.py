"""
JSON conversion utilities for exact values, matrices and reports.

All numbers leave the package as exact strings: rationals as ``"p/q"`` (or
``"n"`` for integers), Laurent polynomials as sorted ``[exp, "coef"]`` pairs,
rational functions as ``{"num": ..., "den": ...}`` and sparse matrices as
row-major coordinate lists. :func:`canonical_dumps` fixes key order and
separators so that re-serializing a parsed document is byte-identical.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Dict, List, Sequence, Tuple, Union

from sympy.polys.matrices.sdm import SDM

from . import linalg
from .qseries.laurent import FIELD, LaurentPoly, RatFunc

JsonLaurent = List[List[Any]]
JsonRatFunc = Dict[str, JsonLaurent]


def fraction_to_str(value: Union[int, Fraction]) -> str:
    """
    Exact decimal-string form of a rational number.

    Example:
        >>> fraction_to_str(Fraction(8, 9))
        '8/9'
        >>> fraction_to_str(3)
        '3'
    """
    return str(Fraction(value))


def parse_fraction(text: Union[str, int, Fraction]) -> Fraction:
    """
    Parse ``"p/q"``, an integer or a decimal string into a Fraction.

    Raises:
        ValueError: If the text is not a rational number

    Example:
        >>> parse_fraction("0.5")
        Fraction(1, 2)
    """
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational number: {text!r}") from exc


def laurent_to_json(p: LaurentPoly) -> JsonLaurent:
    return [[e, fraction_to_str(c)] for e, c in p.terms()]


def laurent_from_json(data: Sequence[Sequence[Any]]) -> LaurentPoly:
    coefs: Dict[int, Fraction] = {}
    for pair in data:
        if len(pair) != 2:
            raise ValueError(f"Laurent term must be [exp, coef], got {pair!r}")
        exp, coef = pair
        coefs[int(exp)] = coefs.get(int(exp), Fraction(0)) + parse_fraction(coef)
    return LaurentPoly(coefs)


def ratfunc_to_json(f: Union[RatFunc, Any]) -> JsonRatFunc:
    """Serialize a RatFunc (or a raw field element) by its canonical parts."""
    r = f if isinstance(f, RatFunc) else RatFunc.from_field(f)
    return {"num": laurent_to_json(r.numerator), "den": laurent_to_json(r.denominator)}


def ratfunc_from_json(data: Dict[str, Any]) -> RatFunc:
    try:
        return RatFunc(laurent_from_json(data["num"]), laurent_from_json(data["den"]))
    except KeyError as exc:
        raise ValueError(f"RatFunc JSON needs 'num' and 'den', got keys {sorted(data)}") from exc


def matrix_to_json(a: SDM) -> Dict[str, Any]:
    """
    Sparse matrix as ``{"shape": [r, c], "entries": [[i, j, value], ...]}``.

    Entries over QQ(q) are RatFunc objects; entries over QQ are fraction strings.
    """
    quantum = a.domain == FIELD
    out: List[List[Any]] = []
    for i, j, v in linalg.entries(a):
        value = ratfunc_to_json(v) if quantum else fraction_to_str(_rational(v))
        out.append([i, j, value])
    return {"shape": list(a.shape), "entries": out}


def matrix_from_json(data: Dict[str, Any], domain: Any = FIELD) -> SDM:
    shape: Tuple[int, int] = (int(data["shape"][0]), int(data["shape"][1]))
    triples = []
    for i, j, value in data["entries"]:
        if domain == FIELD:
            v = ratfunc_from_json(value).to_field()
        else:
            f = parse_fraction(value)
            v = domain(f.numerator) / domain(f.denominator)
        triples.append((int(i), int(j), v))
    return linalg.from_entries(triples, shape, domain)


def _rational(v: Any) -> Fraction:
    return Fraction(int(v.numerator), int(v.denominator))


def canonical_dumps(data: Any, pretty: bool = False) -> str:
    """
    Deterministic JSON text: sorted keys and fixed separators.

    Example:
        >>> canonical_dumps({"b": 1, "a": [1, 2]})
        '{"a":[1,2],"b":1}'
    """
    if pretty:
        return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False)
    return json.dumps(data, sort_keys=True, separators=(",", ":"), ensure_ascii=False)
