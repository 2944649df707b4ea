"""
Simple Lie types: families, rank rules, Cartan matrices and the tabulated constants.

Simple roots follow Bourbaki numbering. The Cartan matrix is
``C[i][j] = <alpha_j, alpha_i^vee>`` and the symmetrizers ``d`` make ``D*C``
symmetric with ``(alpha_i, alpha_i) = 2*d_i``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable, Dict, List, Tuple

from ..errors import InvalidLieTypeError

Matrix = Tuple[Tuple[int, ...], ...]


class Family(Enum):
    """
    Cartan-Killing families of simple Lie algebras.

    Example:
        >>> Family("G").allows_rank(2)
        True
        >>> Family.E.allows_rank(5)
        False
    """

    A = "A"
    B = "B"
    C = "C"
    D = "D"
    E = "E"
    F = "F"
    G = "G"

    def allows_rank(self, rank: int) -> bool:
        """Rank restriction of the family."""
        return _RANK_RULES[self](rank)

    def coxeter_number(self, rank: int) -> int:
        return _COXETER_NUMBERS[self](rank)

    def killing_constant(self, rank: int) -> int:
        """Tabulated constant k relating the Killing form to (.,.)."""
        return _KILLING_CONSTANTS[self](rank)


_RANK_RULES: Dict[Family, Callable[[int], bool]] = {
    Family.A: lambda l: l >= 1,
    Family.B: lambda l: l >= 2,
    Family.C: lambda l: l >= 2,
    Family.D: lambda l: l >= 3,
    Family.E: lambda l: l in (6, 7, 8),
    Family.F: lambda l: l == 4,
    Family.G: lambda l: l == 2,
}

# (h, k) table
_COXETER_NUMBERS: Dict[Family, Callable[[int], int]] = {
    Family.A: lambda l: l + 1,
    Family.B: lambda l: 2 * l,
    Family.C: lambda l: 2 * l,
    Family.D: lambda l: 2 * l - 2,
    Family.E: lambda l: {6: 12, 7: 18, 8: 30}[l],
    Family.F: lambda l: 12,
    Family.G: lambda l: 6,
}

_KILLING_CONSTANTS: Dict[Family, Callable[[int], int]] = {
    Family.A: lambda l: 2 * (l + 1),
    Family.B: lambda l: 4 * l - 2,
    Family.C: lambda l: 4 * l + 4,
    Family.D: lambda l: 4 * l - 4,
    Family.E: lambda l: {6: 24, 7: 36, 8: 60}[l],
    Family.F: lambda l: 18,
    Family.G: lambda l: 24,
}

_TYPE_PATTERN = re.compile(r"^\s*([A-Ga-g])\s*_?\s*(\d+)\s*$")


@dataclass(frozen=True)
class LieType:
    """
    A simple Lie type such as A2 or G2.

    Args:
        family: Family letter
        rank: Rank l

    Raises:
        InvalidLieTypeError: If the rank is not allowed for the family

    Example:
        >>> t = LieType.parse("g2")
        >>> str(t), t.coxeter_number, t.killing_constant
        ('G2', 6, 24)
    """

    family: Family
    rank: int

    def __post_init__(self) -> None:
        if not isinstance(self.family, Family):
            try:
                object.__setattr__(self, "family", Family(str(self.family).upper()))
            except ValueError:
                raise InvalidLieTypeError(f"unknown Lie family '{self.family}'") from None
        if not isinstance(self.rank, int) or not self.family.allows_rank(self.rank):
            raise InvalidLieTypeError(
                f"rank {self.rank} is not allowed for family {self.family.value}"
            )

    @classmethod
    def parse(cls, text: str) -> "LieType":
        """Parse "A1", "b2", "E_8" and the like."""
        match = _TYPE_PATTERN.match(text)
        if not match:
            raise InvalidLieTypeError(f"cannot parse Lie type '{text}'")
        return cls(Family(match.group(1).upper()), int(match.group(2)))

    @property
    def name(self) -> str:
        return f"{self.family.value}{self.rank}"

    @property
    def coxeter_number(self) -> int:
        return self.family.coxeter_number(self.rank)

    @property
    def killing_constant(self) -> int:
        return self.family.killing_constant(self.rank)

    @property
    def is_simply_laced(self) -> bool:
        return self.family in (Family.A, Family.D, Family.E)

    def cartan_matrix(self) -> Matrix:
        return cartan_matrix(self)

    def symmetrizers(self) -> Tuple[int, ...]:
        return symmetrizers(self)

    def __str__(self) -> str:
        return self.name


def _chain(rank: int) -> List[List[int]]:
    c = [[0] * rank for _ in range(rank)]
    for i in range(rank):
        c[i][i] = 2
        if i + 1 < rank:
            c[i][i + 1] = c[i + 1][i] = -1
    return c


def cartan_matrix(t: LieType) -> Matrix:
    """
    Cartan matrix in Bourbaki numbering.

    Example:
        >>> cartan_matrix(LieType.parse("G2"))
        ((2, -3), (-1, 2))
    """
    l = t.rank
    fam = t.family
    if fam is Family.A:
        c = _chain(l)
    elif fam is Family.B:
        c = _chain(l)
        c[l - 1][l - 2] = -2
    elif fam is Family.C:
        c = _chain(l)
        c[l - 2][l - 1] = -2
    elif fam is Family.D:
        c = _chain(l - 1)
        for row in c:
            row.append(0)
        c.append([0] * l)
        c[l - 1][l - 1] = 2
        c[l - 2][l - 3] = c[l - 3][l - 2] = -1
        c[l - 1][l - 3] = c[l - 3][l - 1] = -1
        c[l - 2][l - 1] = c[l - 1][l - 2] = 0
    elif fam is Family.E:
        c = [[0] * l for _ in range(l)]
        for i in range(l):
            c[i][i] = 2
        edges = [(0, 2), (1, 3), (2, 3)] + [(k, k + 1) for k in range(3, l - 1)]
        for a, b in edges:
            c[a][b] = c[b][a] = -1
    elif fam is Family.F:
        c = _chain(4)
        c[2][1] = -2
    else:
        c = [[2, -3], [-1, 2]]
    return tuple(tuple(row) for row in c)


def symmetrizers(t: LieType) -> Tuple[int, ...]:
    """
    Coprime positive integers d_i with D*C symmetric.

    Example:
        >>> symmetrizers(LieType.parse("B3"))
        (2, 2, 1)
    """
    l = t.rank
    if t.family is Family.B:
        return (2,) * (l - 1) + (1,)
    if t.family is Family.C:
        return (1,) * (l - 1) + (2,)
    if t.family is Family.F:
        return (2, 2, 1, 1)
    if t.family is Family.G:
        return (1, 3)
    return (1,) * l


def tabulated_rg(t: LieType) -> Fraction:
    """r_g = k / h from the table."""
    return Fraction(t.killing_constant, t.coxeter_number)
