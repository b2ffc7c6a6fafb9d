"""Independent reference routines used to cross-check the package.

Nothing here imports from ``brunnian``.  Polynomials are plain lists of
integer coefficients in ascending powers of t.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Poly = list[int]


def _trim(p: Poly) -> Poly:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def padd(a: Poly, b: Poly) -> Poly:
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return _trim(out)


def pmul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _trim(out)


def pscale(a: Poly, k: int) -> Poly:
    return _trim([k * c for c in a])


def laplace_det(m: Sequence[Sequence[Poly]]) -> Poly:
    """Cofactor expansion along the first row."""
    n = len(m)
    if n == 0:
        return [1]
    if n == 1:
        return _trim(m[0][0])
    total: Poly = []
    for j in range(n):
        if not _trim(m[0][j]):
            continue
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        term = pmul(m[0][j], laplace_det(minor))
        total = padd(total, term if j % 2 == 0 else pscale(term, -1))
    return total


def seifert_poly_matrix(rows: Sequence[Sequence[int]]) -> list[list[Poly]]:
    """Entries of M - t M^T as coefficient lists."""
    n = len(rows)
    return [[_trim([rows[i][j], -rows[j][i]]) for j in range(n)] for i in range(n)]


def alexander_oracle(rows: Sequence[Sequence[int]]) -> Poly:
    return laplace_det(seifert_poly_matrix(rows))


def principal(m: Sequence[Sequence[Poly]], idx: Sequence[int]) -> list[list[Poly]]:
    return [[m[i][j] for j in idx] for i in idx]


def fraction_det(rows: Sequence[Sequence[int | Fraction]]) -> Fraction:
    """Gaussian elimination over the rationals."""
    a = [[Fraction(x) for x in r] for r in rows]
    n = len(a)
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det *= a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] / a[c][c]
            if f:
                for k in range(c, n):
                    a[r][k] -= f * a[c][k]
    return det


def alexander_at(rows: Sequence[Sequence[int]], t: int) -> Fraction:
    """det(M - t M^T) evaluated numerically."""
    n = len(rows)
    return fraction_det([[rows[i][j] - t * rows[j][i] for j in range(n)] for i in range(n)])


def peval(p: Poly, t: int) -> int:
    return sum(c * t ** i for i, c in enumerate(p))
