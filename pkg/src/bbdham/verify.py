"""Exhaustive and randomized checks of the degree-sum hamiltonicity condition, plus the extremal family.

Instance ids follow the integer layout of :meth:`BipartiteDigraph.from_index`
(bits ``0..a*a-1`` are the arcs V1 -> V2 row-major, then V2 -> V1), so an id
printed in a report rebuilds the exact labeled digraph.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Optional, Union

import numpy as np

from . import kernels
from .digraph import (
    BipartiteDigraph,
    arcs_between,
    build,
    complete,
    degrees,
    is_strongly_connected,
)
from .hamilton import HamiltonResult, MoveKind, Verdict, arc_bound_violations, find_hamiltonian
from .matching import HallViolator, MatchDirection, hall_violator, is_hamiltonian_cycle
from .oracle import brute_force_hamiltonian

log = logging.getLogger(__name__)

MAX_EXHAUSTIVE_A = 3
MIN_SAMPLED_A, MAX_SAMPLED_A = 4, 12
_ENUM_CHUNK = 1 << 12
_SAMPLE_CHUNK = 500


class ParameterError(ValueError):
    pass


@dataclass(frozen=True)
class ExtremalParams:
    """Parameters of D(a, l); R = x1..xl, S = the other x's, U = y1..yl, W = the other y's."""

    a: int
    l: int

    def __post_init__(self) -> None:
        if self.a < 3 or not (1 <= self.l and 2 * self.l < self.a):
            raise ParameterError(f"need a >= 3 and 1 <= l < a/2, got a={self.a}, l={self.l}")


def gen_extremal(p: ExtremalParams) -> BipartiteDigraph:
    a, l = p.a, p.l
    R, S = range(l), range(l, a)
    U, W = range(a, a + l), range(a + l, 2 * a)
    arcs = set()
    for r in R:
        for y in range(a, 2 * a):
            arcs |= {(r, y), (y, r)}
    for u in U:
        for x in range(a):
            arcs |= {(u, x), (x, u)}
    arcs |= {(s, w) for s in S for w in W}
    return build(a, sorted(arcs))


def extremal_arc_count(a: int, l: int) -> int:
    return 2 * l * a + 2 * l * (a - l) + (a - l) ** 2


@dataclass(frozen=True)
class SharpnessReport:
    a: int
    l: int
    min_nonadjacent_sum: int
    pairs_below_bound: int
    strongly_connected: bool
    violator: Optional[HallViolator]

    @property
    def ok(self) -> bool:
        return (
            self.pairs_below_bound == 0
            and self.strongly_connected
            and self.violator is not None
        )


def sharpness_check(a: int) -> SharpnessReport:
    """Inspect D(a, (a-1)/2): non-adjacent pairs have degree sum >= 3a - 1."""
    if a < 3 or a % 2 == 0:
        raise ParameterError(f"sharpness check needs odd a >= 3, got {a}")
    l = (a - 1) // 2
    D = gen_extremal(ExtremalParams(a, l))
    deg = degrees(D)
    sums = [
        deg[u] + deg[v]
        for u in range(D.order)
        for v in range(u + 1, D.order)
        if arcs_between(D, [u], [v]) == 0
    ]
    return SharpnessReport(
        a,
        l,
        min(sums),
        sum(s < 3 * a - 1 for s in sums),
        is_strongly_connected(D),
        hall_violator(D, MatchDirection.V2_TO_V1),
    )


def is_a2_exception(D: BipartiteDigraph) -> bool:
    """True for the complete digraph on 2+2 vertices minus one symmetric 2-cycle."""
    if D.a != 2:
        return False
    full = complete(2)
    missing = [(u, v) for u, v in full.arcs() if not D.has_arc(u, v)]
    return len(missing) == 2 and missing[0] == (missing[1][1], missing[1][0])


def structure_violations(D: BipartiteDigraph) -> list[str]:
    """Failures of the structural properties forced on non-Hamiltonian hypotheses-met digraphs.

    Every vertex must share a common in- or out-neighbour with another
    vertex, and every degree must be at least ``a``.
    """
    problems = []
    paired = 0
    for rows in (D.out_rows, D.in_rows):
        for row in rows:
            if row & (row - 1):
                paired |= row
    for v in range(D.order):
        if not paired >> v & 1:
            problems.append(f"{D.name(v)} shares no neighbour with another vertex")
    for v, d in enumerate(degrees(D)):
        if d < D.a:
            problems.append(f"d({D.name(v)}) = {d} < {D.a}")
    return problems


@dataclass(frozen=True)
class InstanceOutcome:
    index: int
    digraph: BipartiteDigraph
    result: HamiltonResult
    category: str  # hamiltonian | exception | counterexample
    oracle_agrees: bool
    cycle_valid: bool
    arc_bound_violations: int
    structure_violations: tuple[str, ...]


def classify(index: int, D: BipartiteDigraph) -> InstanceOutcome:
    """Run the constructor and the oracle on one hypotheses-met digraph."""
    res = find_hamiltonian(D)
    found = res.verdict is Verdict.HAMILTONIAN
    cycle_valid = not found or is_hamiltonian_cycle(D, res.cycle)
    truth = brute_force_hamiltonian(D) is not None
    if truth or (found and cycle_valid):
        category = "hamiltonian"
    elif is_a2_exception(D):
        category = "exception"
    else:
        category = "counterexample"
    bound = 0 if res.stalled_factor is None else len(arc_bound_violations(D, res.stalled_factor))
    structure = tuple(structure_violations(D)) if category != "hamiltonian" else ()
    if category == "counterexample":
        log.warning("counterexample candidate a=%d id=%d confirmed by oracle", D.a, index)
    return InstanceOutcome(index, D, res, category, found == truth, cycle_valid, bound, structure)


Universe = Union[str, tuple]


@dataclass
class VerificationReport:
    a: int
    universe: Universe
    instances: int = 0
    hypotheses_met: int = 0
    hamiltonian: int = 0
    exceptions_found: int = 0
    counterexamples: list[tuple[int, BipartiteDigraph]] = field(default_factory=list)
    exceptions: list[int] = field(default_factory=list)
    fallback_invocations: int = 0
    stalls: int = 0
    arc_bound_violations: int = 0
    structure_violations: int = 0
    oracle_disagreements: int = 0
    invalid_cycles: int = 0
    moves: dict[str, int] = field(default_factory=lambda: {k.value: 0 for k in MoveKind})

    def add(self, o: InstanceOutcome) -> None:
        self.hypotheses_met += 1
        if o.category == "hamiltonian":
            self.hamiltonian += 1
        elif o.category == "exception":
            self.exceptions_found += 1
            self.exceptions.append(o.index)
        else:
            self.counterexamples.append((o.index, o.digraph))
        self.fallback_invocations += o.result.fallback_used
        self.stalls += o.result.stalled_factor is not None
        self.arc_bound_violations += o.arc_bound_violations
        self.structure_violations += len(o.structure_violations)
        self.oracle_disagreements += not o.oracle_agrees
        self.invalid_cycles += not o.cycle_valid
        for m in o.result.move_log:
            self.moves[m.kind.value] += 1

    @property
    def consistent(self) -> bool:
        return self.hamiltonian + len(self.counterexamples) + self.exceptions_found == self.hypotheses_met

    def header(self) -> str:
        if self.universe == "exhaustive":
            return f"report a={self.a} universe=exhaustive"
        _, count, seed, density = self.universe
        return f"report a={self.a} universe=sampled count={count} seed={seed} density={density}"

    def render(self) -> str:
        lines = [
            self.header(),
            f"instances: {self.instances}",
            f"hypotheses_met: {self.hypotheses_met}",
            f"hamiltonian: {self.hamiltonian}",
            f"exceptions: {self.exceptions_found}, counterexamples: {len(self.counterexamples)}",
            f"fallback_invocations: {self.fallback_invocations}",
            f"stalls: {self.stalls}",
            "moves: " + " ".join(f"{k}={v}" for k, v in self.moves.items()),
            f"arc_bound_violations: {self.arc_bound_violations}",
            f"structure_violations: {self.structure_violations}",
            f"oracle_disagreements: {self.oracle_disagreements}",
            f"invalid_cycles: {self.invalid_cycles}",
        ]
        lines += [f"exception {i}" for i in self.exceptions]
        for i, D in self.counterexamples:
            arcs = " ".join(f"{D.name(u)}>{D.name(v)}" for u, v in D.arcs())
            lines.append(f"counterexample {i}: {arcs}")
        return "\n".join(lines) + "\n"


def _run_chunks(worker: Callable, chunks: list, jobs: int) -> Iterable[list[InstanceOutcome]]:
    if jobs <= 1 or len(chunks) <= 1:
        return map(worker, chunks)
    pool = ProcessPoolExecutor(max_workers=jobs)
    try:
        return list(pool.map(worker, chunks))
    finally:
        pool.shutdown()


def _enumerate_chunk(args: tuple[int, int, int]) -> list[InstanceOutcome]:
    a, lo, hi = args
    return [classify(i, BipartiteDigraph.from_index(a, i)) for i in kernels.hypotheses_scan(a, lo, hi)]


def enumerate_universe(
    a: int,
    on_instance: Optional[Callable[[InstanceOutcome], None]] = None,
    jobs: int = 1,
    lo: int = 0,
    hi: Optional[int] = None,
) -> VerificationReport:
    """Sweep every labeled digraph on 2+2 or 3+3 vertices (or the id range [lo, hi)).

    ``on_instance`` sees each hypotheses-met outcome in id order, whatever
    the number of worker processes.
    """
    if not 1 <= a <= MAX_EXHAUSTIVE_A:
        raise ParameterError(f"exhaustive sweep supports 1 <= a <= {MAX_EXHAUSTIVE_A}, got {a}")
    total = 1 << (2 * a * a)
    hi = total if hi is None else hi
    if not 0 <= lo <= hi <= total:
        raise ParameterError(f"bad id range [{lo}, {hi})")
    report = VerificationReport(a, "exhaustive", instances=hi - lo)
    chunks = [(a, s, min(s + _ENUM_CHUNK, hi)) for s in range(lo, hi, _ENUM_CHUNK)]
    for outcomes in _run_chunks(_enumerate_chunk, chunks, jobs):
        for o in outcomes:
            report.add(o)
            if on_instance is not None:
                on_instance(o)
    return report


def parse_density(density: Union[str, float, Fraction]) -> Fraction:
    d = Fraction(density).limit_denominator(1 << 20) if isinstance(density, float) else Fraction(density)
    if not 0 <= d <= 1:
        raise ParameterError(f"density must lie in [0, 1], got {density}")
    return d


def random_digraph(a: int, density: Fraction, seed: int, index: int) -> BipartiteDigraph:
    """Sample ``index`` of the stream ``seed``: each arc present with probability ``density``."""
    rng = np.random.default_rng([seed, index])
    draws = rng.integers(0, density.denominator, size=2 * a * a)
    picked = np.flatnonzero(draws < density.numerator)
    return BipartiteDigraph.from_index(a, sum(1 << int(k) for k in picked))


def meets_hypotheses(D: BipartiteDigraph) -> bool:
    out_rows, in_rows = list(D.out_rows), list(D.in_rows)
    return kernels.condition_a(D.a, out_rows, in_rows) and kernels.strongly_connected(out_rows, in_rows)


def _sample_chunk(args: tuple[int, Fraction, int, int, int]) -> list[InstanceOutcome]:
    a, density, seed, lo, hi = args
    out = []
    for i in range(lo, hi):
        D = random_digraph(a, density, seed, i)
        if meets_hypotheses(D):
            out.append(classify(i, D))
    return out


def sample_universe(
    a: int,
    count: int,
    seed: int,
    density: Union[str, float, Fraction],
    jobs: int = 1,
    on_instance: Optional[Callable[[InstanceOutcome], None]] = None,
) -> VerificationReport:
    """Check ``count`` random digraphs; sample ids index the per-seed stream."""
    if not MIN_SAMPLED_A <= a <= MAX_SAMPLED_A:
        raise ParameterError(f"sampling supports {MIN_SAMPLED_A} <= a <= {MAX_SAMPLED_A}, got {a}")
    if count < 0 or seed < 0:
        raise ParameterError("count and seed must be non-negative")
    d = parse_density(density)
    report = VerificationReport(a, ("sampled", count, seed, d), instances=count)
    chunks = [(a, d, seed, s, min(s + _SAMPLE_CHUNK, count)) for s in range(0, count, _SAMPLE_CHUNK)]
    for outcomes in _run_chunks(_sample_chunk, chunks, jobs):
        for o in outcomes:
            report.add(o)
            if on_instance is not None:
                on_instance(o)
    return report
