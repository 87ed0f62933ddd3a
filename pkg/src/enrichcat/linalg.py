"""Exact rational scalars and the small linear-algebra kernel used everywhere.

Matrices are kept as tuples of tuples of ``Fraction``. Elimination pivots on
the leftmost nonzero column, topmost available row, so every result is
reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

ScalarLike = Union[int, str, Fraction]

ZERO = Fraction(0)
ONE = Fraction(1)


def scalar(x: ScalarLike) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"cannot read {x!r} as an exact rational")


def format_scalar(x: Fraction) -> str:
    # Fraction.__str__ already omits a unit denominator: "3", "-1/2"
    return str(x)


def vector(xs: Iterable[ScalarLike]) -> tuple:
    return tuple(scalar(x) for x in xs)


class DimensionError(ValueError):
    pass


@dataclass(frozen=True)
class Matrix:
    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise DimensionError(f"entry grid does not match {self.rows}x{self.cols}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[ScalarLike]], cols: Optional[int] = None) -> "Matrix":
        rows = [vector(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        return cls(len(rows), cols, tuple(rows))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[ScalarLike]], rows: int) -> "Matrix":
        columns = [vector(c) for c in columns]
        grid = tuple(tuple(c[i] for c in columns) for i in range(rows))
        return cls(rows, len(columns), grid)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, tuple((ZERO,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)))

    def column(self, j: int) -> tuple:
        return tuple(row[j] for row in self.entries)

    def apply(self, x: Sequence[Fraction]) -> tuple:
        if len(x) != self.cols:
            raise DimensionError(f"vector of length {len(x)} against {self.cols} columns")
        return tuple(sum((a * b for a, b in zip(row, x) if a and b), ZERO) for row in self.entries)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise DimensionError("inner dimensions differ")
        cols = [other.column(j) for j in range(other.cols)]
        grid = tuple(
            tuple(sum((a * b for a, b in zip(row, c) if a and b), ZERO) for c in cols)
            for row in self.entries
        )
        return Matrix(self.rows, other.cols, grid)

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows, tuple(self.column(j) for j in range(self.cols)))


def _rref(rows: list, ncols: int):
    """In-place reduced row echelon form; returns the pivot columns."""
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(rows):
            break
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        p = rows[r][c]
        rows[r] = [x / p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                k = rows[i][c]
                rows[i] = [x - k * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return pivots


def rank(A: Matrix) -> int:
    rows = [list(r) for r in A.entries]
    return len(_rref(rows, A.cols))


def solve(A: Matrix, b: Sequence[ScalarLike]) -> Optional[tuple]:
    """Return some x with A x = b, or None when the system is inconsistent.

    Free variables are set to zero.
    """
    b = vector(b)
    if len(b) != A.rows:
        raise DimensionError(f"{A.rows} rows but right-hand side of length {len(b)}")
    rows = [list(r) + [y] for r, y in zip(A.entries, b)]
    pivots = _rref(rows, A.cols)
    for row in rows[len(pivots):]:
        if row[-1] != 0:
            return None
    x = [ZERO] * A.cols
    for r, c in enumerate(pivots):
        x[c] = rows[r][-1]
    return tuple(x)


def nullspace(A: Matrix) -> list:
    """Basis of the kernel, one vector per free column in increasing order."""
    rows = [list(r) for r in A.entries]
    pivots = _rref(rows, A.cols)
    free = [c for c in range(A.cols) if c not in pivots]
    basis = []
    for f in free:
        x = [ZERO] * A.cols
        x[f] = ONE
        for r, c in enumerate(pivots):
            x[c] = -rows[r][f]
        basis.append(tuple(x))
    return basis


def is_invertible(A: Matrix) -> bool:
    return A.rows == A.cols and rank(A) == A.rows


def inverse(A: Matrix) -> Matrix:
    if not is_invertible(A):
        raise ValueError("matrix is not invertible")
    n = A.rows
    cols = [solve(A, [ONE if i == j else ZERO for i in range(n)]) for j in range(n)]
    return Matrix.from_columns(cols, n)
