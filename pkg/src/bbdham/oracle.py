"""Exact brute-force procedures for small digraphs, used as ground truth."""

from __future__ import annotations

from itertools import permutations
from typing import Optional

from . import kernels
from .digraph import BipartiteDigraph
from .matching import Cycle

MAX_HAMILTON_ORDER = 24
MAX_FACTOR_ORDER = 16


class SizeCapExceeded(ValueError):
    pass


def brute_force_hamiltonian(D: BipartiteDigraph) -> Optional[Cycle]:
    """First Hamiltonian cycle found by backtracking from x1, or None."""
    if D.order > MAX_HAMILTON_ORDER:
        raise SizeCapExceeded(f"backtracking capped at {MAX_HAMILTON_ORDER} vertices, got {D.order}")
    cycle = kernels.hamiltonian_cycle(list(D.out_rows), list(D.in_rows))
    return None if cycle is None else tuple(cycle)


def _has_perfect_bijection(D: BipartiteDigraph, sources: range, targets: range) -> bool:
    return any(
        all(D.has_arc(s, t) for s, t in zip(sources, perm))
        for perm in permutations(targets)
    )


def brute_force_cycle_factor(D: BipartiteDigraph) -> bool:
    """Decide cycle-factor existence by trying every bijection in both directions."""
    if D.order > MAX_FACTOR_ORDER:
        raise SizeCapExceeded(f"factor enumeration capped at {MAX_FACTOR_ORDER} vertices, got {D.order}")
    a = D.a
    v1, v2 = range(a), range(a, 2 * a)
    return _has_perfect_bijection(D, v1, v2) and _has_perfect_bijection(D, v2, v1)
