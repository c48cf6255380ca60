"""Hamiltonian cycles by merging the cycles of a factor.

Three moves fuse two cycles of a factor into one:

* ``exchange``: for ``u_i`` on ``C_i`` and ``u_j`` on ``C_j`` in the same
  partite set, drop ``u_i -> u_i+`` and ``u_j -> u_j+`` and add
  ``u_i -> u_j+`` and ``u_j -> u_i+``.
* ``splice``: replace the arc ``u -> u+`` of ``C_j`` by a path
  ``u -> p -> ... -> p- -> u+`` running once around ``C_i``.
* ``rotation``: for a 2-cycle ``C_i = [c, d]`` and ``x`` on ``C_j``
  (``|C_j| >= 4``, ``c`` on the same side as ``x``), replace the stretch
  ``x-- x- x x+ x++`` of ``C_j`` by ``x-- x+ c d x x- x++``.

Moves are applied greedily; when none applies, the backtracking oracle
settles the instance (up to :data:`oracle.MAX_HAMILTON_ORDER` vertices).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Union

from .digraph import (
    BipartiteDigraph,
    ConditionAReport,
    arcs_between,
    check_condition_a,
    is_strongly_connected,
    side,
)
from .matching import (
    Cycle,
    CycleFactor,
    HallViolator,
    canonical_cycle,
    canonical_factor,
    cycle_factor,
    factor_errors,
)
from .oracle import MAX_HAMILTON_ORDER, brute_force_hamiltonian


class MoveKind(str, Enum):
    EXCHANGE = "exchange"
    SPLICE = "splice"
    ROTATION = "rotation"



@dataclass(frozen=True)
class MergeMove:
    """A merge of cycles ``i`` and ``j`` of a canonical factor.

    ``anchors`` is ``(u_i, u_j)`` for exchange, ``(u, p)`` for splice
    (``u`` on ``C_j``, ``p`` on ``C_i``) and ``(x, c, d)`` for rotation.
    """

    kind: MoveKind
    i: int
    j: int
    anchors: tuple[int, ...]


class InapplicableMove(ValueError):
    pass


class MalformedFactor(ValueError):
    pass


class Verdict(str, Enum):
    HAMILTONIAN = "hamiltonian"
    NON_HAMILTONIAN = "non_hamiltonian"
    HYPOTHESES_UNMET = "hypotheses_unmet"
    UNDECIDED = "undecided"


@dataclass(frozen=True)
class ExhaustedSearch:
    label = "exhausted-search"


@dataclass(frozen=True)
class ExhaustedSearchNotRun:
    label = "exhausted-search-not-run"


@dataclass(frozen=True)
class NotStronglyConnected:
    label = "not-strongly-connected"


Certificate = Union[HallViolator, ExhaustedSearch, ExhaustedSearchNotRun, NotStronglyConnected]


@dataclass(frozen=True)
class HamiltonResult:
    verdict: Verdict
    cycle: Optional[Cycle]
    certificate: Optional[Certificate]
    move_log: tuple[MergeMove, ...]
    strongly_connected: bool
    condition_a: ConditionAReport
    initial_factor: Optional[CycleFactor] = None
    stalled_factor: Optional[CycleFactor] = None
    fallback_used: bool = False


def _succ_pred(cycle: Cycle) -> tuple[dict[int, int], dict[int, int]]:
    m = len(cycle)
    succ = {cycle[k]: cycle[(k + 1) % m] for k in range(m)}
    pred = {v: u for u, v in succ.items()}
    return succ, pred


def _walk(cycle: Cycle, start: int, stop: int) -> list[int]:
    """Vertices of ``cycle`` from ``start`` forward to ``stop`` inclusive."""
    k = cycle.index(start)
    seq = []
    while True:
        v = cycle[k]
        seq.append(v)
        if v == stop:
            return seq
        k = (k + 1) % len(cycle)


def _exchange_ok(D, Ci, Cj, si, sj, ui, uj) -> bool:
    return D.has_arc(ui, sj[uj]) and D.has_arc(uj, si[ui])


def _splice_ok(D, Ci, Cj, si, pi, sj, u, p) -> bool:
    return D.has_arc(u, p) and D.has_arc(pi[p], sj[u])


def _rotation_ok(D, Ci, Cj, sj, pj, x, c, d) -> bool:
    if len(Ci) != 2 or len(Cj) < 4:
        return False
    xp, xm = sj[x], pj[x]
    return (
        D.has_arc(pj[xm], xp)
        and D.has_arc(xp, c)
        and D.has_arc(d, x)
        and D.has_arc(x, xm)
        and D.has_arc(xm, sj[xp])
    )


def _check_factor(D: BipartiteDigraph, F: CycleFactor) -> None:
    errs = factor_errors(D, F)
    if errs:
        raise MalformedFactor("; ".join(errs))


def exchange_moves(D: BipartiteDigraph, F: CycleFactor, i: int, j: int):
    """All exchange moves between cycles ``i < j``, in scan order."""
    Ci, Cj = F.cycles[i], F.cycles[j]
    si, _ = _succ_pred(Ci)
    sj, _ = _succ_pred(Cj)
    for ui in sorted(Ci):
        for uj in sorted(Cj):
            if side(D.a, ui) == side(D.a, uj) and _exchange_ok(D, Ci, Cj, si, sj, ui, uj):
                yield MergeMove(MoveKind.EXCHANGE, i, j, (ui, uj))


def _splice_moves(D, F, i, j):
    Ci, Cj = F.cycles[i], F.cycles[j]
    si, pi = _succ_pred(Ci)
    sj, _ = _succ_pred(Cj)
    for u in sorted(Cj):
        for p in sorted(Ci):
            if side(D.a, u) != side(D.a, p) and _splice_ok(D, Ci, Cj, si, pi, sj, u, p):
                yield MergeMove(MoveKind.SPLICE, i, j, (u, p))


def _rotation_moves(D, F, i, j):
    Ci, Cj = F.cycles[i], F.cycles[j]
    if len(Ci) != 2 or len(Cj) < 4:
        return
    sj, pj = _succ_pred(Cj)
    for x in sorted(Cj):
        c, d = Ci if side(D.a, Ci[0]) == side(D.a, x) else Ci[::-1]
        if _rotation_ok(D, Ci, Cj, sj, pj, x, c, d):
            yield MergeMove(MoveKind.ROTATION, i, j, (x, c, d))


def find_merge(D: BipartiteDigraph, F: CycleFactor) -> Optional[MergeMove]:
    """First applicable move: exchange, then splice, then rotation, each by (i, j, anchors)."""
    _check_factor(D, F)
    if len(F) < 2:
        raise MalformedFactor("factor has a single cycle; nothing to merge")
    l = len(F)
    for i in range(l):
        for j in range(i + 1, l):
            for m in exchange_moves(D, F, i, j):
                return m
    for gen in (_splice_moves, _rotation_moves):
        for i in range(l):
            for j in range(l):
                if i != j:
                    for m in gen(D, F, i, j):
                        return m
    return None


def apply_merge(D: BipartiteDigraph, F: CycleFactor, m: MergeMove) -> CycleFactor:
    """Apply ``m`` to ``F``; every arc the move introduces is re-checked against ``D``."""
    l = len(F)
    if not (0 <= m.i < l and 0 <= m.j < l) or m.i == m.j:
        raise InapplicableMove(f"bad cycle indices {m.i}, {m.j}")
    Ci, Cj = F.cycles[m.i], F.cycles[m.j]
    si, pi = _succ_pred(Ci)
    sj, pj = _succ_pred(Cj)
    if m.kind is MoveKind.EXCHANGE:
        ui, uj = m.anchors
        if ui not in si or uj not in sj or side(D.a, ui) != side(D.a, uj):
            raise InapplicableMove(f"bad exchange anchors {m.anchors}")
        if not _exchange_ok(D, Ci, Cj, si, sj, ui, uj):
            raise InapplicableMove(f"exchange {m} needs missing arcs")
        merged = _walk(Cj, sj[uj], uj) + _walk(Ci, si[ui], ui)
    elif m.kind is MoveKind.SPLICE:
        u, p = m.anchors
        if u not in sj or p not in si:
            raise InapplicableMove(f"bad splice anchors {m.anchors}")
        if not _splice_ok(D, Ci, Cj, si, pi, sj, u, p):
            raise InapplicableMove(f"splice {m} needs missing arcs")
        merged = _walk(Cj, sj[u], u) + _walk(Ci, p, pi[p])
    elif m.kind is MoveKind.ROTATION:
        x, c, d = m.anchors
        if x not in sj or set(Ci) != {c, d} or side(D.a, c) != side(D.a, x) or si[c] != d:
            raise InapplicableMove(f"bad rotation anchors {m.anchors}")
        if not _rotation_ok(D, Ci, Cj, sj, pj, x, c, d):
            raise InapplicableMove(f"rotation {m} needs missing arcs")
        xp, xm = sj[x], pj[x]
        xpp, xmm = sj[xp], pj[xm]
        merged = _walk(Cj, xpp, xmm) + [xp, c, d, x, xm]
    else:
        raise InapplicableMove(f"unknown move kind {m.kind!r}")
    rest = [c for k, c in enumerate(F.cycles) if k not in (m.i, m.j)]
    return canonical_factor(rest + [merged])


def replay_moves(D: BipartiteDigraph, F: CycleFactor, moves) -> CycleFactor:
    for m in moves:
        F = apply_merge(D, F, m)
    return F


def arc_bound_violations(D: BipartiteDigraph, F: CycleFactor) -> list[tuple[int, int]]:
    """Pairs ``(i, j)`` with no exchange move yet more than |C_i||C_j|/2 arcs between them.

    Without an exchange move every pair of same-side vertices carries at
    most one of the two exchange arcs, which caps the arc count; a
    non-empty result means the move search or the arc count is wrong.
    """
    bad = []
    for i in range(len(F)):
        for j in range(i + 1, len(F)):
            if next(exchange_moves(D, F, i, j), None) is not None:
                continue
            Ci, Cj = F.cycles[i], F.cycles[j]
            if 2 * arcs_between(D, Ci, Cj) > len(Ci) * len(Cj):
                bad.append((i, j))
    return bad


def find_hamiltonian(D: BipartiteDigraph) -> HamiltonResult:
    if D.a < 2:
        raise ValueError(f"find_hamiltonian needs a >= 2, got a={D.a}")
    sc = is_strongly_connected(D)
    cond = check_condition_a(D)
    base = dict(strongly_connected=sc, condition_a=cond)

    factor = cycle_factor(D)
    if isinstance(factor, HallViolator):
        if not sc:
            return HamiltonResult(Verdict.HYPOTHESES_UNMET, None, NotStronglyConnected(), (), **base)
        return HamiltonResult(Verdict.NON_HAMILTONIAN, None, factor, (), **base)

    moves: list[MergeMove] = []
    F = factor
    while len(F) > 1:
        m = find_merge(D, F)
        if m is None:
            break
        moves.append(m)
        F = apply_merge(D, F, m)
    log = tuple(moves)
    if len(F) == 1:
        # a strongly disconnected digraph cannot carry a Hamiltonian cycle
        assert sc
        return HamiltonResult(Verdict.HAMILTONIAN, F.cycles[0], None, log, initial_factor=factor, **base)

    stalled = dict(initial_factor=factor, stalled_factor=F)
    if not sc:
        return HamiltonResult(Verdict.HYPOTHESES_UNMET, None, NotStronglyConnected(), log, **stalled, **base)
    if D.order > MAX_HAMILTON_ORDER:
        return HamiltonResult(Verdict.UNDECIDED, None, ExhaustedSearchNotRun(), log, **stalled, **base)
    cycle = brute_force_hamiltonian(D)
    if cycle is None:
        return HamiltonResult(
            Verdict.NON_HAMILTONIAN, None, ExhaustedSearch(), log, fallback_used=True, **stalled, **base
        )
    return HamiltonResult(
        Verdict.HAMILTONIAN, canonical_cycle(cycle), None, log, fallback_used=True, **stalled, **base
    )
