"""Alternation tables of the H block and the structural laws they obey.

The alternation of h[i][j] is ``h[i][j] - h[j][i]``; for the loops b_1..b_{n-1}
of a 2-component Brunnian link it is the signed intersection number of b_i
and b_j on the second disk.  Indices in this module are 1-based, as in the
usual statement of these laws.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from brunnian.core.blocks import MultiBlockForm
from brunnian.core.matrix import IntMatrix
from brunnian.errors import DimensionMismatch, IndexOutOfRange, NotSquare


def pair_count(size: int) -> int:
    return size * (size - 1) // 2


def _offset(i: int, j: int) -> int:
    # column-major over the strict upper triangle: (1,2), (1,3), (2,3), (1,4), ...
    return (j - 1) * (j - 2) // 2 + (i - 1)


@dataclass(frozen=True)
class AlternationTable:
    """Strict upper triangle of alternations, stored column by column.

    ``values`` is ordered (h12, h13, h23, h14, h24, h34, ...), the order used
    when listing tuples of alternations.
    """

    size: int
    values: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))
        if self.size < 0:
            raise ValueError("table size must be non-negative")
        if len(self.values) != pair_count(self.size):
            raise DimensionMismatch(
                f"size {self.size} table needs {pair_count(self.size)} values, got {len(self.values)}")

    @classmethod
    def from_tuple(cls, values: Sequence[int]) -> AlternationTable:
        size = 1
        while pair_count(size) < len(values):
            size += 1
        if pair_count(size) != len(values):
            raise DimensionMismatch(f"{len(values)} is not a triangular number")
        return cls(size, tuple(values))

    @classmethod
    def from_mapping(cls, size: int, entries: dict[tuple[int, int], int]) -> AlternationTable:
        vals = [0] * pair_count(size)
        for (i, j), v in entries.items():
            if not 1 <= i < j <= size:
                raise IndexOutOfRange(f"({i}, {j}) outside a size {size} table")
            vals[_offset(i, j)] = v
        return cls(size, tuple(vals))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        """Entry (i, j) for any 1 <= i, j <= size.

        Below the diagonal the alternation is read antisymmetrically,
        ``h^A(j, i) = -h^A(i, j)``, and the diagonal is zero.
        """
        i, j = ij
        if not (1 <= i <= self.size and 1 <= j <= self.size):
            raise IndexOutOfRange(f"({i}, {j}) outside a size {self.size} table")
        if i == j:
            return 0
        if i < j:
            return self.values[_offset(i, j)]
        return -self.values[_offset(j, i)]

    def pairs(self) -> Iterable[tuple[int, int]]:
        for j in range(2, self.size + 1):
            for i in range(1, j):
                yield i, j

    def prefix(self, size: int) -> AlternationTable:
        """Table on the first ``size`` loops."""
        return AlternationTable(size, self.values[:pair_count(size)])

    def render(self) -> str:
        """Upper-triangular text grid; rows i = 1..size-1, columns j = 2..size."""
        if self.size < 2:
            return "(empty)"
        width = max(len(str(v)) for v in self.values)
        lines = []
        for i in range(1, self.size):
            cells = [" " * width if j <= i else str(self[i, j]).rjust(width)
                     for j in range(2, self.size + 1)]
            lines.append(" ".join(cells).rstrip())
        return "\n".join(lines)


def alternation_table(h: IntMatrix, reverse: bool = False) -> AlternationTable:
    """Alternations of a square H.

    ``reverse`` reads H as written in the reversed loop order (b_{n-1}, ..., b_1)
    and re-indexes it before taking alternations, so that a reversed basis
    with superdiagonal in {0, -1} maps back to the standard convention.
    """
    if not h.is_square:
        raise NotSquare(f"H is {h.rows}x{h.cols}")
    n = h.rows
    if reverse:
        h = h.submatrix(list(range(n - 1, -1, -1)))
    vals = [h[i - 1, j - 1] - h[j - 1, i - 1]
            for j in range(2, n + 1) for i in range(1, j)]
    return AlternationTable(n, tuple(vals))


def _check_pair(t: AlternationTable, i: int, j: int) -> None:
    if not 1 <= i < j <= t.size:
        raise IndexOutOfRange(f"need 1 <= i < j <= {t.size}, got ({i}, {j})")


def run_left(t: AlternationTable, i: int, j: int) -> int:
    """Length of the zero run h(i, j), h(i, j-1), ... stopping at column i+1."""
    _check_pair(t, i, j)
    run, c = 0, j
    while c > i and t[i, c] == 0:
        run += 1
        c -= 1
    return run


def run_up(t: AlternationTable, i: int, j: int) -> int:
    """Length of the zero run h(i, j), h(i-1, j), ... stopping at row 1."""
    _check_pair(t, i, j)
    run, r = 0, i
    while r >= 1 and t[r, j] == 0:
        run += 1
        r -= 1
    return run


@dataclass(frozen=True)
class Violation:
    check: str
    clause: str
    i: int
    j: int
    message: str

    def __str__(self) -> str:
        return f"{self.check} {self.clause} at ({self.i}, {self.j}): {self.message}"

    def to_json(self) -> dict:
        return {"check": self.check, "clause": self.clause, "i": self.i, "j": self.j,
                "message": self.message}


def _successor_clause(t: AlternationTable, i: int, j: int, run: int,
                      check: str, even: str, odd: str) -> Violation | None:
    """Shared rule of the two recurrence theorems for the successor h(i, j+1).

    Even run: h(i, j+1) is in {0, 1} if the run reaches i, else {0, h(i, j-run)}.
    Odd run: the same with the sign flipped.
    """
    if j + 1 > t.size:
        return None
    nxt = t[i, j + 1]
    sign = 1 if run % 2 == 0 else -1
    if i == j - run:
        allowed = {0, sign}
        ref = "the run reaches the diagonal"
    else:
        allowed = {0, sign * t[i, j - run]}
        ref = f"h({i},{j - run}) = {t[i, j - run]}"
    if nxt in allowed:
        return None
    parity = "even" if sign == 1 else "odd"
    return Violation(check, even if sign == 1 else odd, i, j + 1,
                     f"run {run} at ({i},{j}) is {parity} and {ref}; "
                     f"h({i},{j + 1}) must be in {sorted(allowed)}, found {nxt}")


def check_theorem2(t: AlternationTable) -> list[Violation]:
    out: list[Violation] = []
    for i, j in t.pairs():
        v = t[i, j]
        if j == i + 1 and v not in (0, 1):
            out.append(Violation("theorem2", "(1)", i, j,
                                 f"superdiagonal alternation must be 0 or 1, found {v}"))
        elif v not in (-1, 0, 1):
            out.append(Violation("theorem2", "(1)", i, j,
                                 f"alternation must be -1, 0 or 1, found {v}"))
    for i, j in t.pairs():
        viol = _successor_clause(t, i, j, run_left(t, i, j), "theorem2", "(2)", "(3)")
        if viol:
            out.append(viol)
    return out


def check_theorem3(t: AlternationTable) -> list[Violation]:
    """The vertical-run variant, applied exactly as stated.

    The conclusions still concern the horizontal successor h(i, j+1).  When
    ``j - run`` falls below i the referenced entry is read antisymmetrically.
    """
    out: list[Violation] = []
    for i, j in t.pairs():
        viol = _successor_clause(t, i, j, run_up(t, i, j), "theorem3", "(1)", "(2)")
        if viol:
            out.append(viol)
    return out


def check_prop4(t: AlternationTable) -> list[Violation]:
    out: list[Violation] = []
    for i, j in t.pairs():
        v = t[i, j]
        if j + 1 <= t.size and abs(v - t[i, j + 1]) > 1:
            out.append(Violation("prop4", "horizontal", i, j,
                                 f"|h({i},{j}) - h({i},{j + 1})| = {abs(v - t[i, j + 1])} > 1"))
        if i - 1 >= 1 and abs(v - t[i - 1, j]) > 1:
            out.append(Violation("prop4", "vertical", i, j,
                                 f"|h({i},{j}) - h({i - 1},{j})| = {abs(v - t[i - 1, j])} > 1"))
    return out


def check_prop5(t: AlternationTable) -> list[Violation]:
    out: list[Violation] = []
    for i, j in t.pairs():
        if t[i, j] == 0:
            continue
        col = sum(1 for k in range(i, j) if t[k, j] != 0)
        row = sum(1 for k in range(i + 1, j + 1) if t[i, k] != 0)
        if (col - row) % 2:
            out.append(Violation("prop5", "parity", i, j,
                                 f"column count {col} and row count {row} differ mod 2"))
    return out


def necessary_violations(t: AlternationTable, include_theorem3: bool = False) -> list[Violation]:
    """All violated necessary conditions, in a fixed checker order."""
    out = check_theorem2(t) + check_prop4(t) + check_prop5(t)
    if include_theorem3:
        out += check_theorem3(t)
    return out


def check_theorem7(f: MultiBlockForm) -> list[Violation]:
    """Alternations of each H_l and across P blocks must lie in {-1, 0, 1}.

    Violations on H blocks report (i, j) inside the block; cross-block ones
    report the pair of loop indices, with the block pair in ``clause``.
    """
    out: list[Violation] = []
    for l, h in enumerate(f.H_blocks, start=1):
        t = alternation_table(h)
        for i, j in t.pairs():
            if t[i, j] not in (-1, 0, 1):
                out.append(Violation("theorem7", f"(I) H{l}", i, j,
                                     f"alternation {t[i, j]} outside {{-1, 0, 1}}"))
    p = len(f.parts)
    for l in range(1, p + 1):
        for m in range(l + 1, p + 1):
            plm, pml = f.P_blocks[(l, m)], f.P_blocks[(m, l)]
            for i in range(plm.rows):
                for j in range(plm.cols):
                    a = plm[i, j] - pml[j, i]
                    if a not in (-1, 0, 1):
                        out.append(Violation("theorem7", f"(II) P{l},{m}", i + 1, j + 1,
                                             f"alternation {a} outside {{-1, 0, 1}}"))
    return out


def column_vectors(t: AlternationTable) -> list[tuple[int, ...]]:
    """(h(1,k), ..., h(k-1,k)) for k = 2..size."""
    return [tuple(t[i, k] for i in range(1, k)) for k in range(2, t.size + 1)]
