"""Integer polynomials in ``t`` and determinants of polynomial matrices.

Everything here is exact: coefficients are Python ints and the
determinant uses fraction-free elimination, so no rational or floating
arithmetic ever appears.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import zip_longest
from typing import Iterable, Sequence

from brunnian.core.matrix import IntMatrix
from brunnian.errors import NotSquare, ParseError


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class IntPolynomial:
    """Polynomial with integer coefficients, lowest degree first.

    The zero polynomial has an empty coefficient tuple.
    """

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(int(c) for c in self.coeffs))

    @classmethod
    def const(cls, c: int) -> IntPolynomial:
        return cls((c,))

    @classmethod
    def monomial(cls, c: int, k: int) -> IntPolynomial:
        return cls((0,) * k + (c,))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __add__(self, other) -> IntPolynomial:
        other = _lift(other)
        return IntPolynomial(a + b for a, b in
                             zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    __radd__ = __add__

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(-a for a in self.coeffs)

    def __sub__(self, other) -> IntPolynomial:
        return self + (-_lift(other))

    def __rsub__(self, other) -> IntPolynomial:
        return _lift(other) - self

    def __mul__(self, other) -> IntPolynomial:
        other = _lift(other)
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def exact_div(self, other: IntPolynomial) -> IntPolynomial:
        """Quotient ``self / other``; raises if the division leaves a remainder."""
        other = _lift(other)
        if not other.coeffs:
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        d = other.degree
        lc = other.leading
        if len(rem) - 1 < d:
            if rem:
                raise ArithmeticError("inexact polynomial division")
            return IntPolynomial()
        quot = [0] * (len(rem) - d)
        for k in range(len(rem) - 1, d - 1, -1):
            c = rem[k]
            if c == 0:
                continue
            q, r = divmod(c, lc)
            if r:
                raise ArithmeticError("inexact polynomial division")
            quot[k - d] = q
            for i, b in enumerate(other.coeffs):
                rem[k - d + i] -= q * b
        if any(rem):
            raise ArithmeticError("inexact polynomial division")
        return IntPolynomial(quot)

    def __call__(self, t: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and not isinstance(other, bool):
            other = IntPolynomial.const(other)
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"IntPolynomial({format_poly(self)!r})"


def _lift(x) -> IntPolynomial:
    if isinstance(x, IntPolynomial):
        return x
    if isinstance(x, int):
        return IntPolynomial.const(x)
    return NotImplemented


T = IntPolynomial((0, 1))
ONE = IntPolynomial((1,))
ZERO = IntPolynomial()


def format_poly(p: IntPolynomial, var: str = "t") -> str:
    """Render in ascending powers, e.g. ``2t - 2t^2`` or ``1 - t``."""
    if not p.coeffs:
        return "0"
    parts: list[str] = []
    for k, c in enumerate(p.coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if mag == 1 else f"{mag}{mono}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


_TERM = re.compile(r"([+-]?)\s*(\d*)\s*(t(?:\^(\d+))?)?")


def parse_poly(text: str) -> IntPolynomial:
    """Inverse of :func:`format_poly`."""
    s = text.strip()
    if s == "0":
        return ZERO
    coeffs: dict[int, int] = {}
    pos = 0
    if not s:
        raise ParseError("empty polynomial")
    while pos < len(s):
        while pos < len(s) and s[pos] == " ":
            pos += 1
        m = _TERM.match(s, pos)
        if not m or m.end() == pos or not (m.group(2) or m.group(3)):
            raise ParseError(f"cannot parse polynomial {text!r}")
        sign = -1 if m.group(1) == "-" else 1
        mag = int(m.group(2)) if m.group(2) else 1
        if m.group(3) is None:
            k = 0
        else:
            k = int(m.group(4)) if m.group(4) else 1
        coeffs[k] = coeffs.get(k, 0) + sign * mag
        pos = m.end()
    top = max(coeffs)
    return IntPolynomial(coeffs.get(k, 0) for k in range(top + 1))


class PolyMatrix:
    """Square matrix of :class:`IntPolynomial` entries."""

    __slots__ = ("_rows",)

    def __init__(self, rows: Sequence[Sequence[IntPolynomial | int]]):
        data = tuple(tuple(_lift(v) for v in r) for r in rows)
        if any(len(r) != len(data) for r in data):
            raise NotSquare("polynomial matrix must be square")
        self._rows = data

    @property
    def size(self) -> int:
        return len(self._rows)

    def __getitem__(self, ij: tuple[int, int]) -> IntPolynomial:
        return self._rows[ij[0]][ij[1]]

    def rows(self) -> tuple[tuple[IntPolynomial, ...], ...]:
        return self._rows

    def principal(self, idx: Sequence[int]) -> PolyMatrix:
        return PolyMatrix([[self._rows[i][j] for j in idx] for i in idx])

    def evaluate(self, t: int) -> IntMatrix:
        return IntMatrix.from_rows([[p(t) for p in r] for r in self._rows], self.size)

    def __eq__(self, other) -> bool:
        return isinstance(other, PolyMatrix) and self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def det(self) -> IntPolynomial:
        return poly_det(self)


def seifert_form(m: IntMatrix) -> PolyMatrix:
    """The matrix ``M - t M^T``."""
    if not m.is_square:
        raise NotSquare(f"Seifert form of a {m.rows}x{m.cols} matrix")
    n = m.rows
    return PolyMatrix([[IntPolynomial((m[i, j], -m[j, i])) for j in range(n)]
                       for i in range(n)])


def _cofactor_det(a: Sequence[Sequence[IntPolynomial]]) -> IntPolynomial:
    n = len(a)
    if n == 0:
        return ONE
    if n == 1:
        return a[0][0]
    if n == 2:
        return a[0][0] * a[1][1] - a[0][1] * a[1][0]
    total = ZERO
    for j in range(n):
        if not a[0][j]:
            continue
        minor = [row[:j] + row[j + 1:] for row in a[1:]]
        term = a[0][j] * _cofactor_det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def _bareiss_det(a: list[list[IntPolynomial]]) -> IntPolynomial:
    n = len(a)
    sign, prev = 1, ONE
    for k in range(n - 1):
        if not a[k][k]:
            for r in range(k + 1, n):
                if a[r][k]:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return ZERO
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]).exact_div(prev)
        prev = pivot
    return a[n - 1][n - 1] if sign > 0 else -a[n - 1][n - 1]


def poly_det(m: PolyMatrix) -> IntPolynomial:
    """Exact determinant: cofactor expansion up to size 4, Bareiss above."""
    rows = [list(r) for r in m.rows()]
    if len(rows) <= 4:
        return _cofactor_det(rows)
    return _bareiss_det(rows)


def alexander(m: IntMatrix) -> IntPolynomial:
    """``det(M - t M^T)`` for a square integer matrix."""
    return poly_det(seifert_form(m))
