"""Elementary S-equivalence moves: enlargement, reduction, unimodular congruence.

Only move application and certificate checking live here; deciding
whether two matrices are S-equivalent is not attempted.
"""

from __future__ import annotations

from typing import Literal, Sequence

from brunnian.core.matrix import IntMatrix, int_det
from brunnian.errors import DimensionMismatch, NotBlockForm, NotSquare, NotUnimodular

Kind = Literal["row", "column"]


def s_equiv_enlarge(m: IntMatrix, kind: Kind, v: Sequence[int]) -> IntMatrix:
    """Grow M by two rows and columns.

    column:  [[M, v, 0], [0, 0, 1], [0, 0, 0]]
    row:     [[M, 0, 0], [v, 0, 0], [0, 1, 0]]
    """
    if not m.is_square:
        raise NotSquare("enlargement needs a square matrix")
    n = m.rows
    v = [int(x) for x in v]
    if len(v) != n:
        raise DimensionMismatch(f"vector of length {len(v)} for a {n}x{n} matrix")
    if kind not in ("row", "column"):
        raise ValueError(f"kind must be 'row' or 'column', got {kind!r}")
    out = [list(r) + [0, 0] for r in m.entries] + [[0] * (n + 2), [0] * (n + 2)]
    if kind == "column":
        for i in range(n):
            out[i][n] = v[i]
        out[n][n + 1] = 1
    else:
        out[n][:n] = v
        out[n + 1][n] = 1
    return IntMatrix.from_rows(out, n + 2)


def s_equiv_reduce(m: IntMatrix) -> tuple[IntMatrix, Kind, tuple[int, ...]]:
    """Undo :func:`s_equiv_enlarge`; returns ``(M, kind, v)``."""
    if not m.is_square:
        raise NotSquare("reduction needs a square matrix")
    if m.rows < 2:
        raise NotBlockForm("matrix too small to be an enlargement")
    n = m.rows - 2
    core = m.block(0, n, 0, n)
    last2 = [(i, j) for i in range(n + 2) for j in range(n + 2) if i >= n or j >= n]

    def matches(kind: Kind, v: tuple[int, ...]) -> bool:
        ref = s_equiv_enlarge(core, kind, v)
        return all(ref[i, j] == m[i, j] for i, j in last2)

    col_v = tuple(m[i, n] for i in range(n))
    if matches("column", col_v):
        return core, "column", col_v
    row_v = tuple(m[n, j] for j in range(n))
    if matches("row", row_v):
        return core, "row", row_v
    raise NotBlockForm("last two rows and columns are not an elementary enlargement")


def s_equiv_congruence(m: IntMatrix, u: IntMatrix) -> IntMatrix:
    """Return ``U^T M U`` for unimodular U."""
    if not u.is_square or not m.is_square:
        raise NotSquare("congruence needs square matrices")
    if u.rows != m.rows:
        raise DimensionMismatch(f"U is {u.rows}x{u.rows}, M is {m.rows}x{m.rows}")
    if abs(int_det(u)) != 1:
        raise NotUnimodular("congruence matrix must have determinant +1 or -1")
    return u.transpose() @ m @ u
