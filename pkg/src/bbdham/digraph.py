"""Balanced bipartite digraphs stored as packed bit rows.

Vertices ``0..a-1`` form the partite set V1 (named ``x1..xa``) and
``a..2a-1`` form V2 (named ``y1..ya``).  Row ``v`` of ``out_rows`` is an
integer whose bit ``w`` is set iff the arc ``v -> w`` is present.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, NamedTuple, Optional


class DigraphError(ValueError):
    """Raised for malformed digraph input."""


class Direction(str, Enum):
    OUT = "out"
    IN = "in"


def vertex_name(a: int, v: int) -> str:
    if not 0 <= v < 2 * a:
        raise DigraphError(f"vertex {v} out of range for a={a}")
    return f"x{v + 1}" if v < a else f"y{v - a + 1}"


def parse_vertex(a: int, name: str) -> int:
    """Inverse of :func:`vertex_name`."""
    if len(name) < 2 or name[0] not in "xy" or not name[1:].isdigit():
        raise DigraphError(f"bad vertex name {name!r}")
    k = int(name[1:])
    if not 1 <= k <= a or name[1] == "0":
        raise DigraphError(f"vertex {name!r} out of range for a={a}")
    return k - 1 if name[0] == "x" else a + k - 1


def side(a: int, v: int) -> int:
    """Partite set of ``v``: 0 for V1, 1 for V2."""
    return 0 if v < a else 1


def bits(mask: int) -> list[int]:
    """Indices of the set bits of ``mask`` in ascending order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _transpose(rows: tuple[int, ...]) -> tuple[int, ...]:
    cols = [0] * len(rows)
    for u, row in enumerate(rows):
        for v in bits(row):
            cols[v] |= 1 << u
    return tuple(cols)


@dataclass(frozen=True)
class BipartiteDigraph:
    a: int
    out_rows: tuple[int, ...]
    in_rows: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "in_rows", _transpose(self.out_rows))

    @property
    def order(self) -> int:
        return 2 * self.a

    @property
    def all_mask(self) -> int:
        return (1 << (2 * self.a)) - 1

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self.out_rows[u] >> v & 1)

    def arcs(self) -> list[tuple[int, int]]:
        """All arcs sorted by (source, target)."""
        return [(u, v) for u, row in enumerate(self.out_rows) for v in bits(row)]

    @property
    def num_arcs(self) -> int:
        return sum(row.bit_count() for row in self.out_rows)

    def name(self, v: int) -> str:
        return vertex_name(self.a, v)

    def with_arc(self, u: int, v: int, present: bool = True) -> "BipartiteDigraph":
        """Copy of this digraph with the arc ``u -> v`` added or removed."""
        _check_arc(self.a, u, v)
        rows = list(self.out_rows)
        if present:
            rows[u] |= 1 << v
        else:
            rows[u] &= ~(1 << v)
        return BipartiteDigraph(self.a, tuple(rows))

    # Integer layout used by the exhaustive sweep: bit ``i*a + j`` is the arc
    # x_{i+1} -> y_{j+1}; bit ``a*a + j*a + i`` is the arc y_{j+1} -> x_{i+1}.
    @classmethod
    def from_index(cls, a: int, index: int) -> "BipartiteDigraph":
        if a < 1 or not 0 <= index < 1 << (2 * a * a):
            raise DigraphError(f"index {index} out of range for a={a}")
        mask = (1 << a) - 1
        rows = [((index >> (i * a)) & mask) << a for i in range(a)]
        rows += [(index >> (a * a + j * a)) & mask for j in range(a)]
        return cls(a, tuple(rows))

    def to_index(self) -> int:
        a = self.a
        index = 0
        for i in range(a):
            index |= (self.out_rows[i] >> a) << (i * a)
        for j in range(a):
            index |= self.out_rows[a + j] << (a * a + j * a)
        return index


def _check_arc(a: int, u: int, v: int) -> None:
    n = 2 * a
    if not (0 <= u < n and 0 <= v < n):
        raise DigraphError(f"arc ({u}, {v}) out of range for a={a}")
    if u == v:
        raise DigraphError(f"loop at {vertex_name(a, u)}")
    if side(a, u) == side(a, v):
        raise DigraphError(
            f"arc {vertex_name(a, u)}->{vertex_name(a, v)} lies inside a partite set"
        )


def build(a: int, arcs: Iterable[tuple[int, int]]) -> BipartiteDigraph:
    """Build a digraph from an arc list, rejecting loops, same-side and duplicate arcs."""
    if a < 1:
        raise DigraphError(f"a must be positive, got {a}")
    rows = [0] * (2 * a)
    for u, v in arcs:
        _check_arc(a, u, v)
        if rows[u] >> v & 1:
            raise DigraphError(
                f"duplicate arc {vertex_name(a, u)}->{vertex_name(a, v)}"
            )
        rows[u] |= 1 << v
    return BipartiteDigraph(a, tuple(rows))


def complete(a: int) -> BipartiteDigraph:
    """The complete bipartite digraph with both arcs between every cross pair."""
    v1 = (1 << a) - 1
    v2 = v1 << a
    return BipartiteDigraph(a, tuple([v2] * a + [v1] * a))


def directed_cycle(a: int) -> BipartiteDigraph:
    """The Hamiltonian cycle x1 y1 x2 y2 ... xa ya."""
    order = [v for i in range(a) for v in (i, a + i)]
    return build(a, zip(order, order[1:] + order[:1]))


class Degree(NamedTuple):
    d_out: int
    d_in: int
    d: int


def _check_vertex(D: BipartiteDigraph, v: int) -> None:
    if not 0 <= v < D.order:
        raise DigraphError(f"vertex {v} out of range for a={D.a}")


def degree(D: BipartiteDigraph, v: int) -> Degree:
    _check_vertex(D, v)
    d_out = D.out_rows[v].bit_count()
    d_in = D.in_rows[v].bit_count()
    return Degree(d_out, d_in, d_out + d_in)


def degrees(D: BipartiteDigraph) -> list[int]:
    return [o.bit_count() + i.bit_count() for o, i in zip(D.out_rows, D.in_rows)]


def mask_of(D: BipartiteDigraph, S: Iterable[int]) -> int:
    m = 0
    for v in S:
        _check_vertex(D, v)
        m |= 1 << v
    return m


def neighbourhood(
    D: BipartiteDigraph, S: Iterable[int], direction: Direction | str = Direction.OUT
) -> frozenset[int]:
    """N+(S) (vertices dominated by S) or N-(S) (vertices dominating S)."""
    rows = D.out_rows if Direction(direction) is Direction.OUT else D.in_rows
    m = 0
    for v in bits(mask_of(D, S)):
        m |= rows[v]
    return frozenset(bits(m))


def arcs_between(D: BipartiteDigraph, S: Iterable[int], T: Iterable[int]) -> int:
    """|A[S,T]| + |A[T,S]|."""
    s_mask, t_mask = mask_of(D, S), mask_of(D, T)
    forward = sum((D.out_rows[u] & t_mask).bit_count() for u in bits(s_mask))
    backward = sum((D.out_rows[u] & s_mask).bit_count() for u in bits(t_mask))
    return forward + backward


def strongly_connected_components(D: BipartiteDigraph) -> list[list[int]]:
    """Tarjan's algorithm, iterative; components in completion order, each sorted."""
    n = D.order
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    comps: list[list[int]] = []
    counter = 0
    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, iter(bits(D.out_rows[root])))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, it = work[-1]
            for w in it:
                if index[w] == -1:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, iter(bits(D.out_rows[w]))))
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            else:
                work.pop()
                if work:
                    parent = work[-1][0]
                    low[parent] = min(low[parent], low[v])
                if low[v] == index[v]:
                    comp = []
                    while True:
                        w = stack.pop()
                        on_stack[w] = False
                        comp.append(w)
                        if w == v:
                            break
                    comps.append(sorted(comp))
    return comps


def is_strongly_connected(D: BipartiteDigraph) -> bool:
    return len(strongly_connected_components(D)) == 1


class SharedKind(str, Enum):
    IN = "in-neighbour"
    OUT = "out-neighbour"


class Witness(NamedTuple):
    u: int
    v: int
    degree_sum: int
    shared: int
    shared_kind: SharedKind


@dataclass(frozen=True)
class ConditionAReport:
    holds: bool
    witness: Optional[Witness] = None

    def describe(self, a: int) -> str:
        if self.holds:
            return "condition_a: yes"
        w = self.witness
        assert w is not None
        return (
            f"condition_a: no\n"
            f"witness: {vertex_name(a, w.u)} {vertex_name(a, w.v)} "
            f"sum {w.degree_sum} < {3 * a} "
            f"shared {vertex_name(a, w.shared)} ({w.shared_kind.value})"
        )


def check_condition_a(D: BipartiteDigraph) -> ConditionAReport:
    """Check d(u) + d(v) >= 3a over distinct pairs with a common in- or out-neighbour.

    Pairs are generated from each potential shared vertex ``w``: any two
    out-neighbours of ``w`` share the in-neighbour ``w``, any two
    in-neighbours share the out-neighbour ``w``.  The reported witness
    minimizes ``(degree_sum, u, v, shared, kind)`` with in-neighbour first.
    """
    bound = 3 * D.a
    deg = degrees(D)
    best: Optional[tuple] = None
    for w in range(D.order):
        for kind, row in ((SharedKind.IN, D.out_rows[w]), (SharedKind.OUT, D.in_rows[w])):
            members = bits(row)
            for k, u in enumerate(members):
                for v in members[k + 1:]:
                    s = deg[u] + deg[v]
                    if s < bound:
                        key = (s, u, v, w, kind is SharedKind.OUT)
                        if best is None or key < best[0]:
                            best = (key, Witness(u, v, s, w, kind))
    if best is None:
        return ConditionAReport(True)
    return ConditionAReport(False, best[1])
