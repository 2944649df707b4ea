"""
Sparse exact linear algebra on sympy's ``SDM`` (dict-of-dicts domain matrices).

Quantum modules use the domain QQ(q) and classical modules the domain QQ; every
helper here works for either. Vectors are plain ``{index: entry}`` dicts holding
no zero entries.
"""

from __future__ import annotations

from typing import Any, Dict, Iterable, List, Mapping, Sequence, Tuple

from sympy.polys.matrices.sdm import SDM

Vector = Dict[int, Any]


def zeros(rows: int, cols: int, domain: Any) -> SDM:
    return SDM({}, (rows, cols), domain)


def identity(n: int, domain: Any) -> SDM:
    return SDM.eye((n, n), domain)


def diagonal(entries: Sequence[Any], domain: Any) -> SDM:
    """Square diagonal matrix; zero entries are not stored."""
    n = len(entries)
    return SDM({i: {i: v} for i, v in enumerate(entries) if v}, (n, n), domain)


def from_columns(columns: Sequence[Mapping[int, Any]], rows: int, domain: Any) -> SDM:
    """Matrix whose j-th column is the sparse vector ``columns[j]``."""
    dod: Dict[int, Dict[int, Any]] = {}
    for j, col in enumerate(columns):
        for i, v in col.items():
            if v:
                dod.setdefault(i, {})[j] = v
    return SDM(dod, (rows, len(columns)), domain)


def from_entries(
    entries: Iterable[Tuple[int, int, Any]], shape: Tuple[int, int], domain: Any
) -> SDM:
    dod: Dict[int, Dict[int, Any]] = {}
    for i, j, v in entries:
        if v:
            dod.setdefault(i, {})[j] = v
    return SDM(dod, shape, domain)


def entries(a: SDM) -> List[Tuple[int, int, Any]]:
    """Nonzero entries in row-major order."""
    return [(i, j, v) for i in sorted(a) for j, v in sorted(a[i].items()) if v]


def column(a: SDM, j: int) -> Vector:
    return {i: row[j] for i, row in a.items() if j in row and row[j]}


def is_zero(a: SDM) -> bool:
    return all(not v for row in a.values() for v in row.values())


def equal(a: SDM, b: SDM) -> bool:
    """Exact equality of two matrices of the same shape."""
    if a.shape != b.shape:
        return False
    return is_zero(a.sub(b))


def commutator(a: SDM, b: SDM) -> SDM:
    return a.matmul(b).sub(b.matmul(a))


def power(a: SDM, n: int) -> SDM:
    """a**n for n >= 0 by repeated squaring."""
    if n < 0:
        raise ValueError(f"negative matrix power {n}; invert first")
    result = identity(a.shape[0], a.domain)
    base = a
    while n:
        if n & 1:
            result = result.matmul(base)
        n >>= 1
        if n:
            base = base.matmul(base)
    return result


def trace(a: SDM) -> Any:
    total = a.domain.zero
    for i, row in a.items():
        if i in row:
            total = total + row[i]
    return total


def apply(a: SDM, vec: Mapping[int, Any]) -> Vector:
    """Sparse matrix-vector product."""
    out: Vector = {}
    zero = a.domain.zero
    for i, row in a.items():
        acc = zero
        for j, v in row.items():
            x = vec.get(j)
            if x:
                acc = acc + v * x
        if acc:
            out[i] = acc
    return out


def vec_add(u: Mapping[int, Any], v: Mapping[int, Any], scale: Any = None) -> Vector:
    """u + scale * v (scale defaults to 1)."""
    out = dict(u)
    for j, x in v.items():
        y = out.get(j)
        term = x if scale is None else scale * x
        s = term if y is None else y + term
        if s:
            out[j] = s
        elif j in out:
            del out[j]
    return out


def vec_scale(v: Mapping[int, Any], c: Any) -> Vector:
    if not c:
        return {}
    return {j: c * x for j, x in v.items()}


def extract(a: SDM, rows: Sequence[int], cols: Sequence[int]) -> SDM:
    return a.extract(list(rows), list(cols))


def rank_and_pivots(
    columns: Sequence[Mapping[int, Any]], rows: int, domain: Any
) -> Tuple[SDM, List[int]]:
    """
    Row-reduce the matrix with the given columns.

    Returns:
        (reduced echelon form, pivot column indices); the pivots are the
        lexicographically first maximal independent subset of the columns.
    """
    reduced, pivots = from_columns(columns, rows, domain).rref()
    return reduced, list(pivots)


def nullspace_vectors(a: SDM) -> List[Vector]:
    """Basis of the right null space, one vector per non-pivot column."""
    basis, _ = a.nullspace()
    return [dict(basis[r]) for r in sorted(basis)]


def solve_in_span(
    basis: Sequence[Mapping[int, Any]], target: Mapping[int, Any], domain: Any
) -> Vector:
    """
    Coefficients c with sum_r c_r basis[r] = target.

    Raises:
        ValueError: If target is not in the span of the basis vectors
    """
    if not target:
        return {}
    rows = 1 + max(max((max(b) for b in basis if b), default=0), max(target))
    cols = list(basis) + [target]
    reduced, pivots = from_columns(cols, rows, domain).rref()
    last = len(basis)
    if last in pivots:
        raise ValueError("vector is not in the span")
    out: Vector = {}
    for r, p in enumerate(pivots):
        v = reduced.get(r, {}).get(last)
        if v:
            out[p] = v
    return out


def inverse(a: SDM) -> SDM:
    """
    Exact inverse of a square block.

    Raises:
        DMNonInvertibleMatrixError: If the block is singular
    """
    if a.shape[0] == 0:
        return a
    return a.inv()


def rank(a: SDM) -> int:
    if a.shape[0] == 0 or a.shape[1] == 0:
        return 0
    _, pivots = a.rref()
    return len(pivots)
