"""Endpoint adjacency read off equivalences between route elements.

Route element e_m(i, v, w) is attached to an endpoint of b_i: the terminal
point T_i for v = v1 and the initial point I_i for v = v2 (index 0 stands
for the boundary point past b_1).  Two endpoints are adjacent on the disk
boundary exactly when their route elements are equivalent, with different
sides w.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from brunnian.errors import InadmissibleChain, InvalidHistory
from brunnian.sequences import RouteElement, Seq, parity_class, route_elements, validate_history


@dataclass(frozen=True, order=True)
class EndpointLabel:
    kind: str
    index: int

    def __str__(self) -> str:
        return f"{self.kind}_{self.index}"


def endpoint_of(e: RouteElement) -> EndpointLabel:
    return EndpointLabel("T" if e.v == "v1" else "I", e.level)


@dataclass(frozen=True)
class AdjacentPair:
    first: EndpointLabel
    second: EndpointLabel
    elements: tuple[RouteElement, RouteElement]

    def kind(self) -> str:
        return f"{self.first.kind}/{self.second.kind}"


@dataclass(frozen=True)
class AdjacencyReport:
    modulus: int
    pairs: tuple[AdjacentPair, ...]

    def adjacent(self, a: EndpointLabel, b: EndpointLabel) -> bool:
        return any({p.first, p.second} == {a, b} for p in self.pairs)

    def lines(self) -> list[str]:
        return [f"{p.first} ~ {p.second}: {p.elements[0].label} = {p.elements[0].seq} "
                f"~ {p.elements[1].label} = {p.elements[1].seq}" for p in self.pairs]


def adjacency_classes(history: Sequence[Seq]) -> AdjacencyReport:
    """Adjacent endpoint pairs for the set generated after ``history``."""
    history = tuple(history)
    try:
        validate_history(history)
    except InvalidHistory as exc:
        raise InadmissibleChain(str(exc)) from None
    m = len(history) + 2
    elements = route_elements(history, m)
    pairs = []
    for a, b in combinations(elements, 2):
        if a.side != b.side and parity_class(a.seq) == parity_class(b.seq):
            x, y = sorted((endpoint_of(a), endpoint_of(b)))
            first, second = (a, b) if endpoint_of(a) == x else (b, a)
            pairs.append(AdjacentPair(x, y, (first, second)))
    pairs.sort(key=lambda p: (p.first, p.second))
    return AdjacencyReport(m, tuple(pairs))
