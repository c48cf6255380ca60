"""Hamiltonicity of balanced bipartite digraphs under a degree-sum condition."""

from .digraph import (
    BipartiteDigraph,
    ConditionAReport,
    Degree,
    DigraphError,
    Direction,
    arcs_between,
    build,
    check_condition_a,
    complete,
    degree,
    directed_cycle,
    is_strongly_connected,
    neighbourhood,
    strongly_connected_components,
)
from .hamilton import (
    HamiltonResult,
    MergeMove,
    MoveKind,
    Verdict,
    apply_merge,
    find_hamiltonian,
    find_merge,
)
from .kernels import BACKEND
from .matching import (
    CycleFactor,
    HallViolator,
    MatchDirection,
    Matching,
    cycle_factor,
    hall_violator,
    max_matching,
)
from .oracle import brute_force_cycle_factor, brute_force_hamiltonian
from .verify import (
    ExtremalParams,
    VerificationReport,
    enumerate_universe,
    gen_extremal,
    sample_universe,
    sharpness_check,
)

__version__ = "0.1.0"
