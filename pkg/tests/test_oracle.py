from itertools import permutations

import pytest
from hypothesis import given, settings

from bbdham.digraph import BipartiteDigraph, build, complete, directed_cycle
from bbdham.matching import CycleFactor, cycle_factor, is_hamiltonian_cycle
from bbdham.oracle import SizeCapExceeded, brute_force_cycle_factor, brute_force_hamiltonian
from bbdham.verify import ExtremalParams, gen_extremal

from conftest import digraphs


def hamiltonian_by_orderings(D):
    """Try every alternating ordering x1 y? x? y? ... with x1 fixed first."""
    a = D.a
    for xs in permutations(range(1, a)):
        for ys in permutations(range(a, 2 * a)):
            order = [v for pair in zip((0,) + xs, ys) for v in pair]
            if all(D.has_arc(order[k], order[(k + 1) % len(order)]) for k in range(len(order))):
                return True
    return False


def test_complete_2_2_first_cycle(k22):
    # ascending extension from x1: y1, then x2, then y2, closing back to x1
    assert brute_force_hamiltonian(k22) == (0, 2, 1, 3)


def test_exception_has_no_cycle(exception):
    assert brute_force_hamiltonian(exception) is None


@pytest.mark.parametrize("a", [1, 2, 3, 6, 12])
def test_directed_cycle_returned(a):
    D = directed_cycle(a)
    expected = tuple(v for i in range(a) for v in (i, a + i))
    assert brute_force_hamiltonian(D) == expected


def test_extremal_not_hamiltonian():
    for a, l in [(3, 1), (4, 1), (5, 2)]:
        assert brute_force_hamiltonian(gen_extremal(ExtremalParams(a, l))) is None


@settings(max_examples=300)
@given(digraphs(min_a=1, max_a=4))
def test_hamiltonian_agrees_with_orderings(D):
    cycle = brute_force_hamiltonian(D)
    assert (cycle is not None) == hamiltonian_by_orderings(D)
    if cycle is not None:
        assert cycle[0] == 0
        assert is_hamiltonian_cycle(D, cycle)


def test_cycle_factor_examples():
    two_cycles = build(3, [arc for i in range(3) for arc in ((i, 3 + i), (3 + i, i))])
    assert brute_force_cycle_factor(two_cycles)
    assert not brute_force_cycle_factor(gen_extremal(ExtremalParams(3, 1)))
    assert not brute_force_cycle_factor(build(3, []))


def test_cycle_factor_agrees_on_all_a2():
    for index in range(256):
        D = BipartiteDigraph.from_index(2, index)
        assert brute_force_cycle_factor(D) == isinstance(cycle_factor(D), CycleFactor)


def test_size_caps():
    with pytest.raises(SizeCapExceeded):
        brute_force_hamiltonian(complete(13))
    with pytest.raises(SizeCapExceeded):
        brute_force_cycle_factor(complete(9))
    assert brute_force_hamiltonian(complete(12)) is not None
