"""Perfect matchings between the partite sets, Hall violators and cycle factors."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Union

from .digraph import BipartiteDigraph, bits, side, vertex_name

Cycle = tuple[int, ...]


class MatchDirection(str, Enum):
    V1_TO_V2 = "V1→V2"
    V2_TO_V1 = "V2→V1"

    def sources(self, a: int) -> range:
        return range(a) if self is MatchDirection.V1_TO_V2 else range(a, 2 * a)


@dataclass(frozen=True)
class Matching:
    direction: MatchDirection
    pairs: tuple[tuple[int, int], ...]

    def is_perfect(self, a: int) -> bool:
        return len(self.pairs) == a

    def as_map(self) -> dict[int, int]:
        return dict(self.pairs)


@dataclass(frozen=True)
class HallViolator:
    direction: MatchDirection
    S: frozenset[int]
    image: frozenset[int]

    def describe(self, a: int) -> str:
        def fmt(vs):
            return "{" + ",".join(vertex_name(a, v) for v in sorted(vs)) + "}"

        return f"hall-violator {self.direction.value} S={fmt(self.S)} N+(S)={fmt(self.image)}"


@dataclass(frozen=True)
class CycleFactor:
    cycles: tuple[Cycle, ...]

    def __len__(self) -> int:
        return len(self.cycles)

    def describe(self, a: int) -> str:
        return "cycles: " + " ".join(
            "[" + " ".join(vertex_name(a, v) for v in c) + "]" for c in self.cycles
        )


def canonical_cycle(cycle) -> Cycle:
    cycle = tuple(cycle)
    k = cycle.index(min(cycle))
    return cycle[k:] + cycle[:k]


def canonical_factor(cycles) -> CycleFactor:
    """Rotate each cycle to its smallest vertex and sort by (length, smallest vertex)."""
    cs = [canonical_cycle(c) for c in cycles]
    cs.sort(key=lambda c: (len(c), c[0]))
    return CycleFactor(tuple(cs))


def cycle_errors(D: BipartiteDigraph, cycle) -> list[str]:
    """Problems with ``cycle`` as a directed cycle of ``D``; empty when valid."""
    errs = []
    m = len(cycle)
    if m < 2 or m % 2:
        errs.append(f"cycle length {m} is not even and >= 2")
    if len(set(cycle)) != m:
        errs.append("cycle repeats a vertex")
    for k in range(m):
        u, v = cycle[k], cycle[(k + 1) % m]
        if not (0 <= u < D.order and 0 <= v < D.order):
            errs.append(f"vertex out of range in ({u}, {v})")
        elif not D.has_arc(u, v):
            errs.append(f"missing arc {D.name(u)}->{D.name(v)}")
        elif side(D.a, u) == side(D.a, v):
            errs.append(f"non-alternating step {D.name(u)}->{D.name(v)}")
    return errs


def factor_errors(D: BipartiteDigraph, F: CycleFactor) -> list[str]:
    errs = []
    seen: list[int] = []
    for c in F.cycles:
        errs += cycle_errors(D, c)
        seen += c
    if sorted(seen) != list(range(D.order)):
        errs.append("cycles are not a partition of V(D)")
    if F != canonical_factor(F.cycles):
        errs.append("factor is not in canonical form")
    return errs


def is_hamiltonian_cycle(D: BipartiteDigraph, cycle) -> bool:
    return len(cycle) == D.order and not cycle_errors(D, cycle)


def _augment(rows, u: int, match_t: dict[int, int], seen: list[int]) -> bool:
    # seen[0] is a bitmask of targets already tried in this search
    while True:
        todo = rows[u] & ~seen[0]
        if not todo:
            return False
        v = (todo & -todo).bit_length() - 1
        seen[0] |= 1 << v
        if v not in match_t or _augment(rows, match_t[v], match_t, seen):
            match_t[v] = u
            return True


def _kuhn(D: BipartiteDigraph, direction: MatchDirection) -> dict[int, int]:
    match_t: dict[int, int] = {}
    for u in direction.sources(D.a):
        _augment(D.out_rows, u, match_t, [0])
    return {u: v for v, u in match_t.items()}


def max_matching(D: BipartiteDigraph, direction: MatchDirection) -> Matching:
    """Maximum matching by augmenting paths, sources and targets scanned in index order."""
    direction = MatchDirection(direction)
    match_s = _kuhn(D, direction)
    return Matching(direction, tuple(sorted(match_s.items())))


def _violator_from(D: BipartiteDigraph, direction: MatchDirection, match_s: dict[int, int]) -> Optional[HallViolator]:
    free = [u for u in direction.sources(D.a) if u not in match_s]
    if not free:
        return None
    match_t = {v: u for u, v in match_s.items()}
    # alternating forest grown from every unmatched source at once
    S = set(free)
    stack = list(free)
    while stack:
        u = stack.pop()
        for v in bits(D.out_rows[u]):
            w = match_t.get(v)
            if w is not None and w not in S:
                S.add(w)
                stack.append(w)
    image = 0
    for u in S:
        image |= D.out_rows[u]
    return HallViolator(direction, frozenset(S), frozenset(bits(image)))


def hall_violator(D: BipartiteDigraph, direction: MatchDirection) -> Optional[HallViolator]:
    """A source set S with |N+(S)| < |S|, or None when a perfect matching exists."""
    direction = MatchDirection(direction)
    return _violator_from(D, direction, _kuhn(D, direction))


def cycle_factor(D: BipartiteDigraph) -> Union[CycleFactor, HallViolator]:
    """Cycle factor from the two perfect matchings, or the blocking Hall violator.

    Cycles are the orbits of ``x -> M2(M1(x))`` traced through the
    alternating arcs, starting from the smallest unvisited V1 vertex.
    """
    m1 = _kuhn(D, MatchDirection.V1_TO_V2)
    bad = _violator_from(D, MatchDirection.V1_TO_V2, m1)
    if bad is not None:
        return bad
    m2 = _kuhn(D, MatchDirection.V2_TO_V1)
    bad = _violator_from(D, MatchDirection.V2_TO_V1, m2)
    if bad is not None:
        return bad
    visited = [False] * D.a
    cycles = []
    for start in range(D.a):
        if visited[start]:
            continue
        cycle = []
        x = start
        while not visited[x]:
            visited[x] = True
            y = m1[x]
            cycle += [x, y]
            x = m2[y]
        cycles.append(cycle)
    return canonical_factor(cycles)
