"""Vanishing of sublink Alexander determinants for multi-part block forms."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from brunnian.core.blocks import MultiBlockForm
from brunnian.core.polynomial import IntPolynomial, poly_det, seifert_form


@dataclass(frozen=True)
class SubsetVerdict:
    subset: tuple[int, ...]
    determinant: IntPolynomial

    @property
    def vanishes(self) -> bool:
        return self.determinant.is_zero()


@dataclass(frozen=True)
class SublinkReport:
    verdicts: tuple[SubsetVerdict, ...]

    @property
    def all_vanish(self) -> bool:
        return all(v.vanishes for v in self.verdicts)

    def failures(self) -> list[SubsetVerdict]:
        return [v for v in self.verdicts if not v.vanishes]


def subset_indices(f: MultiBlockForm, subset: tuple[int, ...]) -> list[int]:
    """Rows/columns of M kept for the parts in ``subset`` (1-based)."""
    idx: list[int] = []
    for l in subset:
        idx.extend(f.a_indices(l))
    for l in subset:
        idx.extend(f.b_indices(l))
    return idx


def sublink_vanishing(f: MultiBlockForm) -> SublinkReport:
    """Determinant of the principal block of ``M - t M^T`` for each proper subset of parts.

    Subsets are nonempty and proper, listed by size then lexicographically.
    Brunnian links need every one of these determinants to be zero.
    """
    p = len(f.parts)
    if p < 2:
        raise ValueError("sublink test needs at least 2 parts")
    form = seifert_form(f.matrix())
    verdicts = []
    for k in range(1, p):
        for subset in combinations(range(1, p + 1), k):
            sub = form.principal(subset_indices(f, subset))
            verdicts.append(SubsetVerdict(subset, poly_det(sub)))
    return SublinkReport(tuple(verdicts))
