"""Realizability of alternation data for 2-component Brunnian Seifert matrices.

Three engines enumerate the alternation tuples that can occur for k loops:

* sequence: images of all admissible chains under the column recursion;
* chord: signed crossings of every arc arrangement built site by site;
* constraint: every {-1, 0, 1} tuple passing the necessary conditions.

The first two are generative and must agree; the third is a filter and
may only over-approximate.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Sequence

from brunnian.alternation import (AlternationTable, Violation, alternation_table,
                                  check_theorem2, column_vectors, necessary_violations,
                                  pair_count)
from brunnian.core.blocks import SeifertBlock2, decompose_block2
from brunnian.core.matrix import IntMatrix
from brunnian.errors import RangeError
from brunnian.realizability.chords import ChordArrangement
from brunnian.sequences import (Seq, XHistory, admissible, class_representatives,
                                format_seq, g2, g_step)

MIN_K, MAX_K = 2, 6

Tuple = tuple[int, ...]


def _check_k(k: int) -> None:
    if not MIN_K <= k <= MAX_K:
        raise RangeError(f"k must lie in {MIN_K}..{MAX_K}, got {k}")


def _next_column(history: tuple[Seq, ...], cols: tuple[Tuple, ...], s: Seq) -> Tuple:
    if not history:
        return g2(s)
    return g_step(XHistory(cols), s)


def _chains(k: int) -> Iterator[tuple[tuple[Seq, ...], tuple[Tuple, ...]]]:
    """Depth-first walk over chains (s_2, ..., s_k), one representative per class."""

    def rec(history: tuple[Seq, ...], cols: tuple[Tuple, ...]):
        m = len(history) + 2
        if m > k:
            yield history, cols
            return
        for s in class_representatives(admissible(history, m)):
            col = _next_column(history, cols, s)
            yield from rec(history + (s,), cols + (col,))

    yield from rec((), ())


def enumerate_sequence_engine(k: int) -> set[Tuple]:
    """Alternation tuples (h12, h13, h23, ...) produced by admissible chains."""
    _check_k(k)
    return {tuple(x for c in cols for x in c) for _, cols in _chains(k)}


def enumerate_chord_engine(k: int) -> set[Tuple]:
    """Alternation tuples read off every arrangement of k arcs."""
    _check_k(k)
    level = [ChordArrangement.initial()]
    for _ in range(k - 1):
        level = [ext for arr in level for ext in arr.extensions()]
    return {arr.table().values for arr in level}


def enumerate_constraint_engine(k: int, include_theorem3: bool = False) -> set[Tuple]:
    """All {-1, 0, 1} tuples passing the necessary conditions.

    Built column by column: every condition only involves entries in columns
    up to some c, so a table passes iff each of its prefixes does.  The
    vertical-run variant is excluded by default because, read literally, it
    rejects tuples the generative engines realize; pass ``include_theorem3``
    to apply it anyway.
    """
    _check_k(k)
    survivors: list[Tuple] = [()]
    for size in range(2, k + 1):
        nxt = []
        for prefix in survivors:
            for col in _product((-1, 0, 1), size - 1):
                vals = prefix + col
                if not necessary_violations(AlternationTable(size, vals), include_theorem3):
                    nxt.append(vals)
        survivors = nxt
    return set(survivors)


def _product(choices: Sequence[int], n: int) -> Iterator[Tuple]:
    if n == 0:
        yield ()
        return
    for head in choices:
        for rest in _product(choices, n - 1):
            yield (head,) + rest


ENGINES = {
    "sequence": enumerate_sequence_engine,
    "constraint": enumerate_constraint_engine,
    "chord": enumerate_chord_engine,
}


@dataclass(frozen=True)
class Verdict:
    realizable: bool
    witness: tuple[Seq, ...] | None = None
    violations: tuple[Violation, ...] = ()
    failed_column: int | None = None
    notes: tuple[str, ...] = field(default=())

    def to_json(self) -> dict:
        return {
            "realizable": self.realizable,
            "witness": None if self.witness is None else [format_seq(s) for s in self.witness],
            "violations": [v.to_json() for v in self.violations],
            "failed_column": self.failed_column,
            "notes": list(self.notes),
        }


def witness_search(t: AlternationTable) -> Verdict:
    """Find a chain whose generated columns equal the table's columns.

    Candidates at each depth are class representatives in canonical order,
    and a branch is cut as soon as its column differs from the table's.
    """
    bad = [v for v in check_theorem2(t) if v.clause == "(1)"]
    if bad:
        return Verdict(False, None, tuple(bad), failed_column=min(v.j for v in bad))
    targets = column_vectors(t)
    deepest = [0]

    def rec(history: tuple[Seq, ...], cols: tuple[Tuple, ...]) -> tuple[Seq, ...] | None:
        depth = len(history)
        if depth == len(targets):
            return history
        m = depth + 2
        for s in class_representatives(admissible(history, m)):
            col = _next_column(history, cols, s)
            if col != targets[depth]:
                continue
            deepest[0] = max(deepest[0], depth + 1)
            found = rec(history + (s,), cols + (col,))
            if found is not None:
                return found
        return None

    found = rec((), ())
    if found is not None:
        return Verdict(True, found)
    return Verdict(False, None, tuple(necessary_violations(t)),
                   failed_column=deepest[0] + 2)


def check_block(b: SeifertBlock2, reverse: bool = False) -> Verdict:
    t = alternation_table(b.H, reverse=reverse)
    verdict = witness_search(t)
    notes = []
    if b.n == 2 and b.E.signs == (1, -1) and b.H[0, 0] == 0:
        notes.append("E = diag(1, -1) with h11 = 0: no surface is known to realize this case")
    if not verdict.realizable:
        return Verdict(False, None, verdict.violations, verdict.failed_column, tuple(notes))
    return Verdict(True, verdict.witness, (), None, tuple(notes))


def check_matrix(m: IntMatrix, reverse: bool = False) -> Verdict:
    """Decompose, tabulate alternations, and search for a witness chain."""
    return check_block(decompose_block2(m), reverse=reverse)


def table_from_tuple(values: Sequence[int]) -> AlternationTable:
    return AlternationTable.from_tuple(tuple(values))


def all_tables(k: int) -> Iterator[AlternationTable]:
    """Every {-1, 0, 1} table on k loops."""
    for vals in _product((-1, 0, 1), pair_count(k)):
        yield AlternationTable(k, vals)
