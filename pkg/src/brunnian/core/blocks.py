"""Block layouts of Seifert matrices for Brunnian links.

Two-component links use the layout

    ( E | F_n )
    ( 0 |  H  )

with ``E`` an n x n diagonal of signs, ``F_n`` the n x (n-1) matrix with
ones exactly where ``i - j`` is 0 or 1, and ``H`` an arbitrary integer
block of size n-1.  Links with more components stack one such (E, F)
pair per part and couple the H blocks through off-diagonal P blocks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from brunnian.core.matrix import IntMatrix, block_diagonal
from brunnian.errors import (DimensionMismatch, NotBlockForm, NotOddSize,
                             NotSquare, OddPart)


@dataclass(frozen=True)
class SignDiagonal:
    signs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "signs", tuple(self.signs))
        for s in self.signs:
            if s not in (1, -1):
                raise ValueError(f"sign diagonal entries must be +1 or -1, got {s}")

    def __len__(self) -> int:
        return len(self.signs)

    @classmethod
    def alternating(cls, n: int) -> SignDiagonal:
        """+1 at odd (1-based) positions, -1 at even ones."""
        return cls(tuple(1 if i % 2 == 0 else -1 for i in range(n)))

    @property
    def trace(self) -> int:
        return sum(self.signs)

    def matrix(self) -> IntMatrix:
        n = len(self.signs)
        return IntMatrix.from_rows(
            [[self.signs[i] if i == j else 0 for j in range(n)] for i in range(n)], n)


@dataclass(frozen=True)
class BidiagonalOnes:
    """The n x (n-1) matrix with f[i][j] = 1 iff i - j is 0 or 1."""

    n: int

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return 1 if i - j in (0, 1) else 0

    def matrix(self) -> IntMatrix:
        return IntMatrix.from_rows(
            [[self[i, j] for j in range(self.n - 1)] for i in range(self.n)],
            max(self.n - 1, 0))


@dataclass(frozen=True)
class SeifertBlock2:
    n: int
    E: SignDiagonal
    H: IntMatrix

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be at least 1")
        if len(self.E) != self.n:
            raise DimensionMismatch(f"E has length {len(self.E)}, expected {self.n}")
        if (self.H.rows, self.H.cols) != (self.n - 1, self.n - 1):
            raise DimensionMismatch(
                f"H is {self.H.rows}x{self.H.cols}, expected {self.n - 1}x{self.n - 1}")

    @property
    def size(self) -> int:
        return 2 * self.n - 1

    def matrix(self) -> IntMatrix:
        return compose_block2(self)


def compose_block2(b: SeifertBlock2) -> IntMatrix:
    n = b.n
    size = 2 * n - 1
    out = [[0] * size for _ in range(size)]
    f = BidiagonalOnes(n)
    for i in range(n):
        out[i][i] = b.E.signs[i]
        for j in range(n - 1):
            out[i][n + j] = f[i, j]
    for i in range(n - 1):
        for j in range(n - 1):
            out[n + i][n + j] = b.H[i, j]
    return IntMatrix.from_rows(out, size)


def decompose_block2(m: IntMatrix) -> SeifertBlock2:
    """Split a (2n-1)-square matrix into its sign diagonal and H block.

    Raises NotBlockForm naming the first cell (row-major) that breaks the
    layout.
    """
    if not m.is_square:
        raise NotSquare(f"{m.rows}x{m.cols} matrix is not square")
    if m.rows % 2 == 0:
        raise NotOddSize(f"size {m.rows} is not of the form 2n-1")
    n = (m.rows + 1) // 2
    f = BidiagonalOnes(n)
    for i in range(m.rows):
        for j in range(m.cols):
            v = m[i, j]
            if i < n and j < n:
                if i == j and v not in (1, -1):
                    raise NotBlockForm("diagonal of E must be +1 or -1", i, j, v)
                if i != j and v != 0:
                    raise NotBlockForm("E must be diagonal", i, j, v)
            elif i < n:
                if v != f[i, j - n]:
                    raise NotBlockForm("upper-right block must be F_n", i, j, v)
            elif j < n and v != 0:
                raise NotBlockForm("lower-left block must be zero", i, j, v)
    E = SignDiagonal(tuple(m[i, i] for i in range(n)))
    H = m.block(n, m.rows, n, m.cols)
    return SeifertBlock2(n, E, H)


def trace_split_test(b: SeifertBlock2) -> bool:
    """Necessary condition for an algebraically split link: signs of E sum to zero."""
    return b.E.trace == 0


@dataclass(frozen=True)
class MultiBlockForm:
    """Layout for links with three or more components.

    ``parts`` are the even sizes n_1, ..., n_p.  ``H_blocks[l]`` is square of
    size n_l - 1 and ``P_blocks[(l, m)]`` (1-based, l != m) is
    (n_l - 1) x (n_m - 1).  Missing P blocks are filled with zeros.
    """

    parts: tuple[int, ...]
    E_blocks: tuple[SignDiagonal, ...]
    H_blocks: tuple[IntMatrix, ...]
    P_blocks: Mapping[tuple[int, int], IntMatrix] = field(default_factory=dict)
    lenient_e: bool = False

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "E_blocks", tuple(self.E_blocks))
        object.__setattr__(self, "H_blocks", tuple(self.H_blocks))
        if not parts:
            raise ValueError("at least one part is required")
        for nl in parts:
            if nl <= 0 or nl % 2:
                raise OddPart(f"part size {nl} is not a positive even number")
        if len(self.E_blocks) != len(parts) or len(self.H_blocks) != len(parts):
            raise DimensionMismatch("one E block and one H block per part are required")
        for l, (nl, e, h) in enumerate(zip(parts, self.E_blocks, self.H_blocks), start=1):
            if len(e) != nl:
                raise DimensionMismatch(f"E block {l} has length {len(e)}, expected {nl}")
            if not self.lenient_e and e != SignDiagonal.alternating(nl):
                raise NotBlockForm(f"E block {l} must alternate +1, -1")
            if (h.rows, h.cols) != (nl - 1, nl - 1):
                raise DimensionMismatch(f"H block {l} must be {nl - 1}x{nl - 1}")
        p = len(parts)
        full: dict[tuple[int, int], IntMatrix] = {}
        for (l, m), blk in dict(self.P_blocks).items():
            if not (1 <= l <= p and 1 <= m <= p) or l == m:
                raise DimensionMismatch(f"invalid P block index ({l}, {m})")
            if (blk.rows, blk.cols) != (parts[l - 1] - 1, parts[m - 1] - 1):
                raise DimensionMismatch(f"P block ({l}, {m}) has the wrong shape")
        for l in range(1, p + 1):
            for m in range(1, p + 1):
                if l != m:
                    full[(l, m)] = dict(self.P_blocks).get(
                        (l, m), IntMatrix.zeros(parts[l - 1] - 1, parts[m - 1] - 1))
        object.__setattr__(self, "P_blocks", full)

    def __hash__(self) -> int:
        return hash((self.parts, self.E_blocks, self.H_blocks,
                     tuple(sorted(self.P_blocks.items()))))

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiBlockForm):
            return NotImplemented
        return (self.parts, self.E_blocks, self.H_blocks, self.P_blocks) == \
            (other.parts, other.E_blocks, other.H_blocks, other.P_blocks)

    @property
    def size(self) -> int:
        return sum(self.parts) + sum(n - 1 for n in self.parts)

    def a_indices(self, l: int) -> range:
        """Matrix indices of the a-loops of part l (1-based)."""
        start = sum(self.parts[: l - 1])
        return range(start, start + self.parts[l - 1])

    def b_indices(self, l: int) -> range:
        start = sum(self.parts) + sum(n - 1 for n in self.parts[: l - 1])
        return range(start, start + self.parts[l - 1] - 1)

    def hb_grid(self) -> IntMatrix:
        """The lower-right block assembled from H and P blocks."""
        return self.matrix().block(sum(self.parts), self.size, sum(self.parts), self.size)

    def matrix(self) -> IntMatrix:
        return compose_multi(self)


def compose_multi(f: MultiBlockForm) -> IntMatrix:
    size = f.size
    a_total = sum(f.parts)
    out = [[0] * size for _ in range(size)]
    top = block_diagonal([e.matrix() for e in f.E_blocks])
    fmat = block_diagonal([BidiagonalOnes(n).matrix() for n in f.parts])
    for i in range(a_total):
        for j in range(a_total):
            out[i][j] = top[i, j]
        for j in range(size - a_total):
            out[i][a_total + j] = fmat[i, j]
    p = len(f.parts)
    for l in range(1, p + 1):
        for m in range(1, p + 1):
            blk = f.H_blocks[l - 1] if l == m else f.P_blocks[(l, m)]
            for i, r in enumerate(f.b_indices(l)):
                for j, c in enumerate(f.b_indices(m)):
                    out[r][c] = blk[i, j]
    return IntMatrix.from_rows(out, size)


def decompose_multi(m: IntMatrix, parts: Sequence[int], lenient_e: bool = False) -> MultiBlockForm:
    parts = tuple(int(x) for x in parts)
    if not parts:
        raise ValueError("at least one part is required")
    for nl in parts:
        if nl <= 0 or nl % 2:
            raise OddPart(f"part size {nl} is not a positive even number")
    if not m.is_square:
        raise NotSquare(f"{m.rows}x{m.cols} matrix is not square")
    expected = sum(parts) + sum(n - 1 for n in parts)
    if m.rows != expected:
        raise DimensionMismatch(f"parts {list(parts)} need a {expected}x{expected} matrix, "
                                f"got {m.rows}x{m.rows}")
    a_total = sum(parts)
    top = block_diagonal([SignDiagonal.alternating(n).matrix() for n in parts])
    fmat = block_diagonal([BidiagonalOnes(n).matrix() for n in parts])
    for i in range(m.rows):
        for j in range(m.cols):
            v = m[i, j]
            if i < a_total and j < a_total:
                if i == j:
                    if v not in (1, -1):
                        raise NotBlockForm("E diagonal must be +1 or -1", i, j, v)
                    if not lenient_e and v != top[i, j]:
                        raise NotBlockForm("E block must alternate +1, -1", i, j, v)
                elif v != 0:
                    raise NotBlockForm("E blocks must be diagonal", i, j, v)
            elif i < a_total:
                if v != fmat[i, j - a_total]:
                    raise NotBlockForm("upper-right block must be diag(F_n1, F_n2, ...)", i, j, v)
            elif j < a_total and v != 0:
                raise NotBlockForm("lower-left block must be zero", i, j, v)
    E_blocks = []
    start = 0
    for n in parts:
        E_blocks.append(SignDiagonal(tuple(m[start + i, start + i] for i in range(n))))
        start += n
    offsets = []
    start = a_total
    for n in parts:
        offsets.append(range(start, start + n - 1))
        start += n - 1
    H_blocks = [m.submatrix(offsets[l], offsets[l]) for l in range(len(parts))]
    P_blocks = {(l + 1, k + 1): m.submatrix(offsets[l], offsets[k])
                for l in range(len(parts)) for k in range(len(parts)) if l != k}
    return MultiBlockForm(parts, tuple(E_blocks), tuple(H_blocks), P_blocks, lenient_e)
