"""Dense integer matrices with exact, unbounded entries."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from brunnian.errors import DimensionMismatch, NotSquare


@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise DimensionMismatch("negative dimension")
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise DimensionMismatch(
                f"expected {self.rows}x{self.cols} entries")
        for r in self.entries:
            for v in r:
                if not isinstance(v, int) or isinstance(v, bool):
                    raise TypeError(f"matrix entries must be int, got {v!r}")

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], cols: int | None = None) -> IntMatrix:
        data = tuple(tuple(int(v) for v in r) for r in rows)
        if cols is None:
            cols = len(data[0]) if data else 0
        return cls(len(data), cols, data)

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> IntMatrix:
        cols = rows if cols is None else cols
        return cls(rows, cols, tuple((0,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(n, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i][j]

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def transpose(self) -> IntMatrix:
        return IntMatrix(self.cols, self.rows,
                         tuple(tuple(self.entries[i][j] for i in range(self.rows))
                               for j in range(self.cols)))

    T = property(transpose)

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise DimensionMismatch(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        ot = other.transpose().entries
        return IntMatrix(self.rows, other.cols,
                         tuple(tuple(sum(a * b for a, b in zip(r, c)) for c in ot)
                               for r in self.entries))

    def __add__(self, other: IntMatrix) -> IntMatrix:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch("shape mismatch in addition")
        return IntMatrix(self.rows, self.cols,
                         tuple(tuple(a + b for a, b in zip(r, s))
                               for r, s in zip(self.entries, other.entries)))

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int] | None = None) -> IntMatrix:
        col_idx = row_idx if col_idx is None else col_idx
        return IntMatrix(len(row_idx), len(col_idx),
                         tuple(tuple(self.entries[i][j] for j in col_idx) for i in row_idx))

    def block(self, r0: int, r1: int, c0: int, c1: int) -> IntMatrix:
        """Rows ``r0:r1`` and columns ``c0:c1``."""
        return self.submatrix(range(r0, r1), range(c0, c1))

    def with_entry(self, i: int, j: int, value: int) -> IntMatrix:
        rows = [list(r) for r in self.entries]
        rows[i][j] = value
        return IntMatrix.from_rows(rows, self.cols)

    def __str__(self) -> str:
        return "\n".join(" ".join(str(v) for v in r) for r in self.entries)


def int_det(m: IntMatrix) -> int:
    """Determinant by fraction-free (Bareiss) elimination."""
    if not m.is_square:
        raise NotSquare(f"determinant of a {m.rows}x{m.cols} matrix")
    n = m.rows
    a = m.tolist()
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1] if n else 1


def block_diagonal(blocks: Sequence[IntMatrix]) -> IntMatrix:
    n = sum(b.rows for b in blocks)
    c = sum(b.cols for b in blocks)
    out = [[0] * c for _ in range(n)]
    r0 = c0 = 0
    for b in blocks:
        for i in range(b.rows):
            for j in range(b.cols):
                out[r0 + i][c0 + j] = b[i, j]
        r0 += b.rows
        c0 += b.cols
    return IntMatrix.from_rows(out, c)
