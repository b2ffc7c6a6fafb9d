"""Bookkeeping for building a link that realizes a block form.

For each clasp c_i (i = 2..n) the first disk is intertwined h(j, i-1) times
around b_j for every j < i-1, then twisted h(i-1, i-1) + 6 - sum_j h(j, i-1)
times before the clasp is closed.  The witness chain fixes the arcs on the
second disk and therefore the alternations, which recover the lower
triangle of H from the intertwine counts.
"""

from __future__ import annotations

from dataclasses import dataclass

from brunnian.core.blocks import SeifertBlock2, SignDiagonal
from brunnian.core.matrix import IntMatrix
from brunnian.errors import InadmissibleChain, InconsistentPlan, NotRealizable
from brunnian.realizability.engines import check_block
from brunnian.sequences import Seq, format_seq, g_full

TWIST_OFFSET = 6

# Arc layout on the first disk for consecutive signs (e_i, e_{i+1}).
SIGN_CASES = {
    (1, 1): "top-left",
    (-1, -1): "top-right",
    (1, -1): "bottom-left",
    (-1, 1): "bottom-right",
}


@dataclass(frozen=True)
class PlanStep:
    clasp: int
    intertwines: tuple[tuple[int, int], ...]  # (j, h(j, clasp-1))
    twists: int
    case: str

    def describe(self) -> str:
        parts = [f"step {self.clasp}:"]
        for j, count in self.intertwines:
            parts.append(f"intertwine around b{j} {count}")
        parts.append(f"twist {self.twists}")
        return " ".join(parts) + f" [{self.case}]"


@dataclass(frozen=True)
class ConstructionPlan:
    n: int
    signs: tuple[int, ...]
    first_case: str
    steps: tuple[PlanStep, ...]
    witness: tuple[Seq, ...]

    def lines(self) -> list[str]:
        out = [f"clasp 1: tie [{self.first_case}]"]
        out.extend(s.describe() for s in self.steps)
        return out

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "E": list(self.signs),
            "first_case": self.first_case,
            "steps": [{"clasp": s.clasp, "intertwines": [list(p) for p in s.intertwines],
                       "twists": s.twists, "case": s.case} for s in self.steps],
            "witness": [format_seq(s) for s in self.witness],
        }


def _case(signs: tuple[int, ...], i: int) -> str:
    """Layout label for the pair of signs at 1-based positions i and i+1."""
    if i >= len(signs):
        return "sign +" if signs[i - 1] == 1 else "sign -"
    return SIGN_CASES[(signs[i - 1], signs[i])]


def construction_plan(b: SeifertBlock2) -> ConstructionPlan:
    verdict = check_block(b)
    if not verdict.realizable:
        raise NotRealizable("block form fails the realizability conditions", verdict)
    h = b.H
    signs = b.E.signs
    steps = []
    for i in range(2, b.n + 1):
        col = i - 2  # 0-based column of h(., i-1)
        inter = tuple((j, h[j - 1, col]) for j in range(1, i - 1))
        twists = h[col, col] + TWIST_OFFSET - sum(c for _, c in inter)
        steps.append(PlanStep(i, inter, twists, _case(signs, i - 1)))
    return ConstructionPlan(b.n, signs, _case(signs, 1), tuple(steps), verdict.witness)


def plan_to_matrix(p: ConstructionPlan) -> SeifertBlock2:
    """Invert :func:`construction_plan`."""
    n = p.n
    try:
        signs = SignDiagonal(p.signs)
    except ValueError as exc:
        raise InconsistentPlan(str(exc)) from None
    if len(signs) != n or len(p.steps) != n - 1:
        raise InconsistentPlan(f"plan for n={n} needs {n} signs and {n - 1} steps")
    if len(p.witness) != max(n - 2, 0):
        raise InconsistentPlan(f"witness chain must have length {max(n - 2, 0)}")
    try:
        alt = g_full(p.witness)
    except InadmissibleChain as exc:
        raise InconsistentPlan(f"witness chain: {exc}") from None
    size = n - 1
    h = [[0] * size for _ in range(size)]
    for step, i in zip(p.steps, range(2, n + 1)):
        if step.clasp != i:
            raise InconsistentPlan(f"expected step for clasp {i}, found {step.clasp}")
        if [j for j, _ in step.intertwines] != list(range(1, i - 1)):
            raise InconsistentPlan(f"clasp {i} needs intertwine counts for b1..b{i - 2}")
        col = i - 2
        for j, count in step.intertwines:
            h[j - 1][col] = count
        h[col][col] = step.twists - TWIST_OFFSET + sum(c for _, c in step.intertwines)
    for j in range(2, size + 1):
        for i in range(1, j):
            # h(j, i) = h(i, j) - alternation(i, j)
            h[j - 1][i - 1] = h[i - 1][j - 1] - alt.x(i, j)
    return SeifertBlock2(n, signs, IntMatrix.from_rows(h, size))
