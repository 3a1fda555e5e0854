"""
Riordan Kit - Matrix Realisation
================================

Lower-triangular rational matrices a[n][k] = [x^n] g(x) f(x)^k, built
column by column (column k+1 = column k times f).
"""

from __future__ import annotations

import logging
from fractions import Fraction
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

from ..core.errors import OrderTooSmall
from .element import RiordanElement

log = logging.getLogger("Riordan.Group")

ZERO = Fraction(0)


@dataclass(frozen=True)
class TriangleMatrix:
    """
    Ragged rows: row n holds the entries (n, 0) .. (n, n).
    Entries above the diagonal are absent and read as zero.
    """

    rows: Tuple[Tuple[Fraction, ...], ...]

    def __post_init__(self):
        normalised = tuple(tuple(Fraction(v) for v in row) for row in self.rows)
        for n, row in enumerate(normalised):
            if len(row) != n + 1:
                raise ValueError(f"row {n} has {len(row)} entries, expected {n + 1}")
        object.__setattr__(self, "rows", normalised)

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence]) -> TriangleMatrix:
        """Accept square or ragged rows; entries above the diagonal are dropped."""
        return cls(tuple(tuple(row[: n + 1]) for n, row in enumerate(rows)))

    @classmethod
    def identity(cls, size: int) -> TriangleMatrix:
        return cls(tuple(tuple(1 if k == n else 0 for k in range(n + 1)) for n in range(size)))

    @property
    def size(self) -> int:
        return len(self.rows)

    def entry(self, n: int, k: int) -> Fraction:
        if k > n:
            return ZERO
        return self.rows[n][k]

    def column(self, k: int) -> List[Fraction]:
        return [self.rows[n][k] for n in range(k, self.size)]

    def with_column_signs(self) -> TriangleMatrix:
        """Multiply column k by (-1)^k: the matrix of (g, -f) given that of (g, f)."""
        return TriangleMatrix(
            tuple(tuple(v if k % 2 == 0 else -v for k, v in enumerate(row)) for row in self.rows)
        )

    def __matmul__(self, other: TriangleMatrix) -> TriangleMatrix:
        size = min(self.size, other.size)
        rows = []
        for n in range(size):
            row = []
            for k in range(n + 1):
                total = ZERO
                for j in range(k, n + 1):
                    total += self.rows[n][j] * other.rows[j][k]
                row.append(total)
            rows.append(tuple(row))
        return TriangleMatrix(tuple(rows))

    def inverse(self) -> TriangleMatrix:
        """Forward substitution; requires a nonzero diagonal."""
        size = self.size
        result = [[ZERO] * (n + 1) for n in range(size)]
        for k in range(size):
            pivot = self.rows[k][k]
            if pivot == 0:
                raise ZeroDivisionError(f"diagonal entry ({k},{k}) is zero")
            result[k][k] = 1 / pivot
            for n in range(k + 1, size):
                total = ZERO
                for j in range(k, n):
                    total += self.rows[n][j] * result[j][k]
                result[n][k] = -total / self.rows[n][n]
        return TriangleMatrix(tuple(tuple(row) for row in result))

    def __eq__(self, other) -> bool:
        if not isinstance(other, TriangleMatrix):
            return NotImplemented
        return self.rows == other.rows

    __hash__ = None

    def first_difference(self, other: TriangleMatrix):
        """(n, k) of the first differing entry over the common size, or None."""
        for n in range(min(self.size, other.size)):
            for k in range(n + 1):
                if self.rows[n][k] != other.rows[n][k]:
                    return (n, k)
        return None

    def to_rows(self) -> List[List[str]]:
        return [[str(v) for v in row] for row in self.rows]


def matrix(a: RiordanElement, nrows: int) -> TriangleMatrix:
    """First nrows rows of the Riordan array of a."""
    if nrows < 1:
        raise ValueError(f"nrows must be positive, got {nrows}")
    if nrows - 1 > a.order:
        raise OrderTooSmall(nrows - 1, a.order)
    rows: List[List[Fraction]] = [[] for _ in range(nrows)]
    column = a.g
    for k in range(nrows):
        if k > 0:
            column = column * a.f
        for n in range(k, nrows):
            rows[n].append(column[n])
    log.debug(f"Built {nrows}-row matrix at order {a.order}")
    return TriangleMatrix(tuple(tuple(row) for row in rows))


def row_sums(m: TriangleMatrix) -> List[Fraction]:
    return [sum(row, ZERO) for row in m.rows]
