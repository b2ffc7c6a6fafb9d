"""Combinatorial arc arrangements on the second disk.

Arcs are kept as their endpoints in clockwise boundary order.  Arc b_i runs
from clasp site i to clasp site i+1; its endpoint at site i sits directly
clockwise of b_{i-1}'s endpoint of the same kind (initial or terminal).
Two arcs in a disk cross algebraically once exactly when their endpoints
interleave, so signed intersection numbers depend only on the boundary
word.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from brunnian.alternation import AlternationTable


@dataclass(frozen=True)
class Endpoint:
    kind: str  # "I" or "T"
    arc: int
    site: int

    def __str__(self) -> str:
        return f"{self.kind}{self.arc}@c{self.site}"


def _other(kind: str) -> str:
    return "T" if kind == "I" else "I"


@dataclass(frozen=True)
class ChordArrangement:
    boundary: tuple[Endpoint, ...]

    @classmethod
    def initial(cls) -> ChordArrangement:
        """The single arc b_1 from site 1 to site 2."""
        return cls((Endpoint("I", 1, 1), Endpoint("T", 1, 2)))

    @property
    def arcs(self) -> int:
        return len(self.boundary) // 2

    @property
    def sites(self) -> int:
        return self.arcs + 1

    def position(self, kind: str, arc: int) -> int:
        for idx, e in enumerate(self.boundary):
            if e.kind == kind and e.arc == arc:
                return idx
        raise KeyError(f"{kind}{arc}")

    def free_endpoint(self, arc: int) -> Endpoint:
        """The endpoint of ``arc`` at site arc+1."""
        for e in self.boundary:
            if e.arc == arc and e.site == arc + 1:
                return e
        raise KeyError(arc)

    def intersection(self, a: int, b: int) -> int:
        """Signed intersection number i(b_a, b_b).

        +1 when b_b's initial point lies on the clockwise sweep from I_a to
        T_a and its terminal point does not; -1 for the reverse; 0 when the
        endpoints do not interleave.
        """
        if a == b:
            return 0
        pa, qa = self.position("I", a), self.position("T", a)

        def inside(x: int) -> bool:
            return pa < x < qa if pa < qa else (x > pa or x < qa)

        ib = inside(self.position("I", b))
        tb = inside(self.position("T", b))
        if ib == tb:
            return 0
        return 1 if ib else -1

    def crossings(self) -> dict[tuple[int, int], int]:
        """Signed crossing count for every pair i < j."""
        return {(i, j): self.intersection(i, j)
                for j in range(2, self.arcs + 1) for i in range(1, j)}

    def table(self) -> AlternationTable:
        return AlternationTable(self.arcs, tuple(
            self.intersection(i, j) for j in range(2, self.arcs + 1) for i in range(1, j)))

    def gaps(self) -> list[int]:
        """Gaps (after boundary index g) lying between two different clasp sites."""
        n = len(self.boundary)
        return [g for g in range(n)
                if self.boundary[g].site != self.boundary[(g + 1) % n].site]

    def extensions(self) -> Iterator[ChordArrangement]:
        """Every arrangement obtained by adding the next arc."""
        m = self.arcs + 1
        prev = self.free_endpoint(m - 1)
        q = self.boundary.index(prev)
        fixed = Endpoint(prev.kind, m, m)
        word = self.boundary[:q + 1] + (fixed,) + self.boundary[q + 1:]
        free_kind = _other(prev.kind)
        n = len(word)
        for g in range(n):
            if word[g].site == word[(g + 1) % n].site:
                continue
            yield ChordArrangement(word[:g + 1] + (Endpoint(free_kind, m, m + 1),) + word[g + 1:])

    def __str__(self) -> str:
        return " ".join(str(e) for e in self.boundary)
