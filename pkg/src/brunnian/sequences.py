"""Residue sequences, their parity classes, and the column recursion.

A sequence ``(r_1, ..., r_l)_m`` records, in order, which earlier arcs a new
arc b_m crosses on the disk: entry ``j`` means a crossing with b_j and
entry 0 is a placeholder with no crossing.  Only the parity of each count
matters downstream, so sequences are grouped into parity classes.

Admissible sets are built by the route model.  The new arc leaves its
fixed endpoint next to b_{m-1} and its free endpoint travels backwards
along b_{m-1}, b_{m-2}, ..., b_1.  Following b_j picks up one entry per arc
crossing b_j, and each route stops with a final crossing entry.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from brunnian.errors import (InadmissibleChain, InvalidHistory, ModulusMismatch,
                             NotInBase, ParseError, ValueOutOfRange)


@dataclass(frozen=True, order=False)
class Seq:
    modulus: int
    entries: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(int(e) for e in self.entries))
        if self.modulus < 2:
            raise ValueOutOfRange(f"modulus must be at least 2, got {self.modulus}")
        if not self.entries:
            raise ValueOutOfRange("a sequence needs at least one entry")
        for e in self.entries:
            if not 0 <= e <= self.modulus - 1:
                raise ValueOutOfRange(
                    f"entry {e} out of range 0..{self.modulus - 1} for modulus {self.modulus}")

    def count(self, value: int) -> int:
        return self.entries.count(value)

    def sort_key(self) -> tuple:
        return (self.modulus, len(self.entries), self.entries)

    def __str__(self) -> str:
        return format_seq(self)


def format_seq(s: Seq) -> str:
    return "(" + ", ".join(str(e) for e in s.entries) + f")_{s.modulus}"


_SEQ = re.compile(r"\(\s*([0-9\s,]*?)\s*\)_\{?(\d+)\}?")


def parse_seq(text: str) -> Seq:
    m = _SEQ.fullmatch(text.strip())
    if not m:
        raise ParseError(f"cannot parse sequence {text!r}; expected e.g. '(0, 1)_3'")
    body = m.group(1).strip()
    if not body:
        raise ParseError("empty sequence")
    try:
        entries = tuple(int(x) for x in body.split(","))
    except ValueError:
        raise ParseError(f"bad entries in {text!r}") from None
    try:
        return Seq(int(m.group(2)), entries)
    except ValueOutOfRange as exc:
        raise ParseError(str(exc)) from None


def parse_chain(text: str) -> list[Seq]:
    """Parse sequences separated by whitespace, commas or semicolons."""
    out = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        while pos < len(text) and text[pos] in " \t\n,;":
            pos += 1
        if pos >= len(text):
            break
        m = _SEQ.match(text, pos)
        if not m:
            raise ParseError(f"cannot parse chain at {text[pos:]!r}")
        out.append(parse_seq(m.group(0)))
        pos = m.end()
    if not out:
        raise ParseError("empty chain")
    return out


def canonical(seqs: Iterable[Seq]) -> tuple[Seq, ...]:
    """Deduplicate and order by length, then lexicographically."""
    return tuple(sorted(set(seqs), key=Seq.sort_key))


def delta(s: Seq, j: int) -> int:
    """``m`` when value j occurs an odd number of times in s, else 0."""
    if not 1 <= j <= s.modulus - 1:
        raise ValueOutOfRange(f"j must lie in 1..{s.modulus - 1}, got {j}")
    return s.modulus if s.count(j) % 2 else 0


@dataclass(frozen=True)
class ParityClass:
    modulus: int
    bits: tuple[int, ...]

    def __post_init__(self):
        if len(self.bits) != self.modulus - 1 or any(b not in (0, 1) for b in self.bits):
            raise ValueError("parity class needs modulus-1 bits in {0, 1}")


def parity_class(s: Seq) -> ParityClass:
    return ParityClass(s.modulus, tuple(s.count(j) % 2 for j in range(1, s.modulus)))


def equivalent(a: Seq, b: Seq) -> bool:
    return parity_class(a) == parity_class(b)


def base_set2() -> tuple[Seq, ...]:
    return (Seq(2, (0,)), Seq(2, (1,)))


def extend_set3(s2: Seq) -> tuple[Seq, ...]:
    """The six admissible modulus-3 sequences over a base sequence s2."""
    if s2 not in base_set2():
        raise NotInBase(f"{s2} is not (0)_2 or (1)_2")
    r = s2.entries[0]
    d = delta(s2, 1)
    return canonical([
        Seq(3, (0,)),
        Seq(3, (2,)),
        Seq(3, (r, 2)),
        Seq(3, (r, 1)),
        Seq(3, (r, d, 1)),
        Seq(3, (r, d, 0)),
    ])


@dataclass(frozen=True)
class RouteElement:
    """One generated element with its route label ``e_m(level, v, side)``."""

    level: int
    v: str
    side: str
    seq: Seq

    @property
    def label(self) -> str:
        return f"e_{self.seq.modulus}({self.level}, {self.v}, {self.side})"


def _crossers(history: Sequence[Seq], j: int, m: int) -> list[int]:
    """Entries picked up while following b_j: its own crossings, then later arcs crossing it."""
    by_mod = {s.modulus: s for s in history}
    out = list(by_mod[j].entries) if j >= 2 else []
    for i in range(j + 1, m):
        out.append(delta(by_mod[i], j))
    return out


def route_elements(history: Sequence[Seq], m: int) -> list[RouteElement]:
    """All 2m route elements for modulus m, in the listing order of the set.

    history is (s_2, ..., s_{m-1}); it is not validated here.
    """
    if m < 3:
        raise InvalidHistory("routes start at modulus 3")
    n = m - 1
    out = [RouteElement(n, "v1", "l", Seq(m, (0,))),
           RouteElement(n, "v1", "r", Seq(m, (n,)))]
    prefix: list[int] = []
    for row, j in enumerate(range(n, 0, -1), start=1):
        prefix = prefix + _crossers(history, j, m)
        v = "v2" if row % 2 else "v1"
        out.append(RouteElement(j, v, "l", Seq(m, tuple(prefix) + (j,))))
        out.append(RouteElement(j - 1, v, "r", Seq(m, tuple(prefix) + (j - 1,))))
    return out


def validate_history(history: Sequence[Seq]) -> None:
    """Each s_i must be equivalent to a member of the set built from its predecessors."""
    for idx, s in enumerate(history):
        m = idx + 2
        if s.modulus != m:
            raise InvalidHistory(f"position {idx + 1} needs modulus {m}, got {s}")
        allowed = base_set2() if m == 2 else extend_set(history[:idx], m, check=False)
        if parity_class(s) not in {parity_class(a) for a in allowed}:
            raise InvalidHistory(f"{s} is not admissible after {', '.join(map(str, history[:idx]))}")


def extend_set(history: Sequence[Seq], m: int | None = None, check: bool = True) -> tuple[Seq, ...]:
    """Admissible modulus-m sequences after ``history = (s_2, ..., s_{m-1})``."""
    history = tuple(history)
    if m is None:
        m = len(history) + 2
    if m != len(history) + 2:
        raise InvalidHistory(f"modulus {m} needs a history of length {m - 2}, got {len(history)}")
    if m < 3:
        raise InvalidHistory("extension starts at modulus 3")
    if check:
        validate_history(history)
    return canonical(e.seq for e in route_elements(history, m))


def extend_listing(history: Sequence[Seq]) -> tuple[Seq, ...]:
    """The same set as :func:`extend_set`, in route order with repeats dropped."""
    history = tuple(history)
    extend_set(history)
    return tuple(dict.fromkeys(e.seq for e in route_elements(history, len(history) + 2)))


def admissible(history: Sequence[Seq], m: int) -> tuple[Seq, ...]:
    return base_set2() if m == 2 else extend_set(history, m, check=False)


def class_representatives(seqs: Iterable[Seq]) -> tuple[Seq, ...]:
    """Smallest member (length, then lexicographic) of each parity class."""
    best: dict[ParityClass, Seq] = {}
    for s in canonical(seqs):
        best.setdefault(parity_class(s), s)
    return canonical(best.values())


def quotient(seqs: Iterable[Seq]) -> tuple[tuple[Seq, tuple[Seq, ...]], ...]:
    """Classes as (representative, members) pairs in canonical order."""
    members: dict[ParityClass, list[Seq]] = {}
    for s in canonical(seqs):
        members.setdefault(parity_class(s), []).append(s)
    return tuple(sorted(((ms[0], tuple(ms)) for ms in members.values()),
                        key=lambda p: p[0].sort_key()))


@dataclass(frozen=True)
class XHistory:
    """Columns (x_{1,j}, ..., x_{j-1,j}) for j = 2..m."""

    columns: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        cols = tuple(tuple(c) for c in self.columns)
        object.__setattr__(self, "columns", cols)
        for idx, c in enumerate(cols):
            if len(c) != idx + 1:
                raise ValueError(f"column {idx + 2} must have length {idx + 1}")
            if any(x not in (-1, 0, 1) for x in c) or c[-1] not in (0, 1):
                raise ValueError(f"column {idx + 2} has entries outside the allowed range")

    @property
    def last(self) -> int:
        """Index of the last column (1 when empty)."""
        return len(self.columns) + 1

    def x(self, k: int, j: int) -> int:
        return self.columns[j - 2][k - 1]

    def flat(self) -> tuple[int, ...]:
        return tuple(x for c in self.columns for x in c)


def g2(c: ParityClass | Seq) -> tuple[int]:
    if isinstance(c, Seq):
        c = parity_class(c)
    if c.modulus != 2:
        raise ModulusMismatch(f"g2 needs a modulus-2 class, got modulus {c.modulus}")
    return (c.bits[0],)


def g_step(h: XHistory, s: Seq) -> tuple[int, ...]:
    """Column n+1 from the history through column n and s of modulus n+1.

    Row k copies a nonzero x_{k,n} when b_{n+1} crosses b_k.  If x_{k,n} is 0,
    the zero run x_{k,n}, x_{k,n-1}, ... of length B is skipped and the
    last nonzero value before it is taken, negated when B is odd.  A run
    that reaches the start of row k uses the value 1.
    """
    n = h.last
    if s.modulus != n + 1:
        raise ModulusMismatch(f"history ends at column {n}; expected modulus {n + 1}, got {s.modulus}")
    out = []
    for k in range(1, n):
        if delta(s, k) == 0:
            out.append(0)
            continue
        cur = h.x(k, n)
        if cur != 0:
            out.append(cur)
            continue
        run, c = 0, n
        while c > k and h.x(k, c) == 0:
            run += 1
            c -= 1
        base = 1 if c == k else h.x(k, c)
        out.append(base if run % 2 == 0 else -base)
    out.append(1 if delta(s, n) else 0)
    return tuple(out)


def g_full(chain: Sequence[Seq]) -> XHistory:
    """Columns 2..m generated by an admissible chain (s_2, ..., s_m)."""
    chain = tuple(chain)
    try:
        validate_history(chain)
    except InvalidHistory as exc:
        raise InadmissibleChain(str(exc)) from None
    if not chain:
        return XHistory(())
    cols = [g2(chain[0])]
    for s in chain[1:]:
        cols.append(g_step(XHistory(tuple(cols)), s))
    return XHistory(tuple(cols))
