from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bbdham import kernels
from bbdham.digraph import (
    BipartiteDigraph,
    DigraphError,
    SharedKind,
    arcs_between,
    build,
    check_condition_a,
    complete,
    degree,
    degrees,
    directed_cycle,
    is_strongly_connected,
    neighbourhood,
    parse_vertex,
    strongly_connected_components,
    vertex_name,
)
from bbdham.verify import ExtremalParams, gen_extremal

from conftest import digraphs, named


def reachability_closure(D):
    """Warshall transitive closure on a boolean matrix."""
    n = D.order
    R = [[D.has_arc(u, v) or u == v for v in range(n)] for u in range(n)]
    for k in range(n):
        for i in range(n):
            if R[i][k]:
                for j in range(n):
                    R[i][j] = R[i][j] or R[k][j]
    return R


def condition_a_all_pairs(D):
    """Condition A by scanning every pair and every candidate shared vertex."""
    n, bound = D.order, 3 * D.a
    deg = [sum(D.has_arc(v, w) + D.has_arc(w, v) for w in range(n)) for v in range(n)]
    best = None
    for u, v in combinations(range(n), 2):
        for w in range(n):
            for kind, shared in (
                (SharedKind.IN, D.has_arc(w, u) and D.has_arc(w, v)),
                (SharedKind.OUT, D.has_arc(u, w) and D.has_arc(v, w)),
            ):
                if shared and deg[u] + deg[v] < bound:
                    key = (deg[u] + deg[v], u, v, w, kind is SharedKind.OUT)
                    if best is None or key < best[0]:
                        best = (key, (u, v, deg[u] + deg[v], w, kind))
    return None if best is None else best[1]


# --- build -----------------------------------------------------------------

def test_build_complete(k22):
    D = build(2, [(u, v) for u in range(4) for v in range(4) if (u < 2) != (v < 2)])
    assert D.num_arcs == 8
    assert D == k22


def test_build_empty():
    D = build(2, [])
    assert D.num_arcs == 0
    assert all(degree(D, v) == (0, 0, 0) for v in range(4))


@pytest.mark.parametrize(
    "a, arcs",
    [
        (1, [(0, 0)]),
        (2, [(0, 1)]),
        (2, [(2, 3)]),
        (2, [(0, 2), (0, 2)]),
        (2, [(0, 4)]),
        (0, []),
    ],
    ids=["loop", "inside-V1", "inside-V2", "duplicate", "out-of-range", "a=0"],
)
def test_build_rejects(a, arcs):
    with pytest.raises(DigraphError):
        build(a, arcs)


def test_vertex_names():
    assert [vertex_name(3, v) for v in range(6)] == ["x1", "x2", "x3", "y1", "y2", "y3"]
    for v in range(8):
        assert parse_vertex(4, vertex_name(4, v)) == v
    for bad in ("x0", "y5", "z1", "x", "x01", "xa"):
        with pytest.raises(DigraphError):
            parse_vertex(4, bad)


def test_index_layout():
    a = 3
    assert BipartiteDigraph.from_index(a, 1).arcs() == [(0, 3)]
    assert BipartiteDigraph.from_index(a, 1 << 1).arcs() == [(0, 4)]
    assert BipartiteDigraph.from_index(a, 1 << a).arcs() == [(1, 3)]
    assert BipartiteDigraph.from_index(a, 1 << (a * a)).arcs() == [(3, 0)]
    assert BipartiteDigraph.from_index(a, 1 << (a * a + 1)).arcs() == [(3, 1)]
    assert BipartiteDigraph.from_index(a, 1 << (a * a + a)).arcs() == [(4, 0)]
    assert BipartiteDigraph.from_index(2, 255) == complete(2)


@given(digraphs())
def test_index_round_trip(D):
    assert BipartiteDigraph.from_index(D.a, D.to_index()) == D
    assert build(D.a, D.arcs()) == D


# --- degrees and neighbourhoods ---------------------------------------------

def test_degree_complete(k33):
    assert all(degree(k33, v) == (3, 3, 6) for v in range(6))


def test_degree_extremal_5_2():
    D = gen_extremal(ExtremalParams(5, 2))
    for r in (0, 1):
        assert degree(D, r).d == 10
    for s in (2, 3, 4):
        assert degree(D, s).d == 7


def test_degree_out_of_range(k22):
    with pytest.raises(DigraphError):
        degree(k22, 4)


@pytest.mark.parametrize("a, l", [(3, 1), (4, 1), (5, 2), (7, 3), (8, 2)])
def test_out_neighbourhood_of_W_is_R(a, l):
    D = gen_extremal(ExtremalParams(a, l))
    W = range(a + l, 2 * a)
    assert neighbourhood(D, W, "out") == frozenset(range(l))


def test_neighbourhood_empty_and_cycle():
    D = directed_cycle(3)
    assert neighbourhood(D, [], "out") == frozenset()
    assert neighbourhood(D, [0], "out") == {3}
    assert neighbourhood(D, [3], "out") == {1}
    assert neighbourhood(D, [0], "in") == {5}


@given(digraphs())
def test_degree_sums_match_arc_count(D):
    outs = sum(degree(D, v).d_out for v in range(D.order))
    ins = sum(degree(D, v).d_in for v in range(D.order))
    assert outs == ins == D.num_arcs == len(D.arcs())


@given(digraphs())
def test_arcs_between_single_vertex_is_degree(D):
    for v in range(D.order):
        rest = [w for w in range(D.order) if w != v]
        assert arcs_between(D, [v], rest) == degree(D, v).d
        assert len(neighbourhood(D, [v], "out")) == degree(D, v).d_out
        assert len(neighbourhood(D, [v], "in")) == degree(D, v).d_in


def test_arcs_between_examples(k22, exception):
    assert arcs_between(k22, [0], [2, 3]) == 4
    assert arcs_between(k22, [], [0, 1, 2, 3]) == 0
    # direct count: the surviving arcs at x2 are x2->y2 and y2->x2
    touching = [arc for arc in exception.arcs() if 1 in arc]
    assert touching == [(1, 3), (3, 1)]
    assert arcs_between(exception, [1], [0, 2, 3]) == len(touching) == 2


# --- strong connectivity ------------------------------------------------------

def test_strong_connectivity_examples():
    assert is_strongly_connected(directed_cycle(4))
    assert not is_strongly_connected(named(2, "x1>y1", "y1>x1", "x2>y2", "y2>x2"))
    for a, l in [(3, 1), (4, 1), (5, 2), (9, 4)]:
        assert is_strongly_connected(gen_extremal(ExtremalParams(a, l)))


@given(digraphs())
def test_scc_matches_closure(D):
    R = reachability_closure(D)
    comps = strongly_connected_components(D)
    assert sorted(v for c in comps for v in c) == list(range(D.order))
    label = {v: k for k, c in enumerate(comps) for v in c}
    for u in range(D.order):
        for v in range(D.order):
            assert (label[u] == label[v]) == (R[u][v] and R[v][u])
    assert is_strongly_connected(D) == all(all(row) for row in R)
    assert is_strongly_connected(D) == kernels.strongly_connected(list(D.out_rows), list(D.in_rows))


# --- condition A --------------------------------------------------------------

def test_condition_a_complete(k33):
    assert check_condition_a(k33).holds
    assert check_condition_a(k33).witness is None


def test_condition_a_vacuous_on_cycle():
    assert check_condition_a(directed_cycle(3)).holds


def test_condition_a_extremal_3_1():
    report = check_condition_a(gen_extremal(ExtremalParams(3, 1)))
    assert not report.holds
    w = report.witness
    # S = {x2, x3}; minimal pair under (sum, u, v, shared) ordering
    assert (w.u, w.v, w.degree_sum) == (1, 2, 8)
    assert w.degree_sum == 2 * (3 + 1) < 9
    assert (w.shared, w.shared_kind) == (3, SharedKind.IN)
    # the pair also has common out-neighbours in W
    assert {4, 5} <= neighbourhood(gen_extremal(ExtremalParams(3, 1)), [1], "out")


def test_condition_a_exception(exception):
    assert check_condition_a(exception).holds
    deg = degrees(exception)
    assert deg == [4, 2, 2, 4]
    sums = [
        deg[u] + deg[v]
        for u, v in combinations(range(4), 2)
        if neighbourhood(exception, [u], "in") & neighbourhood(exception, [v], "in")
        or neighbourhood(exception, [u], "out") & neighbourhood(exception, [v], "out")
    ]
    assert min(sums) == 6 >= 3 * 2


def test_condition_a_pairs_are_distinct():
    # x1 alone has degree 2 < 3a/2 but shares its neighbours with nobody
    D = directed_cycle(3)
    assert degree(D, 0).d * 2 < 9
    assert check_condition_a(D).holds


@given(digraphs(max_a=4))
def test_condition_a_matches_all_pairs_oracle(D):
    report = check_condition_a(D)
    expected = condition_a_all_pairs(D)
    assert report.holds == (expected is None)
    assert kernels.condition_a(D.a, list(D.out_rows), list(D.in_rows)) == report.holds
    if expected is not None:
        assert tuple(report.witness) == expected
        u, v, s, w, kind = expected
        assert u != v and s < 3 * D.a


@settings(max_examples=50)
@given(digraphs(max_a=3), st.data())
def test_condition_a_after_single_arc_mutation(D, data):
    u = data.draw(st.integers(0, D.a - 1))
    v = data.draw(st.integers(D.a, 2 * D.a - 1))
    if data.draw(st.booleans()):
        u, v = v, u
    E = D.with_arc(u, v, not D.has_arc(u, v))
    expected = condition_a_all_pairs(E)
    report = check_condition_a(E)
    assert report.holds == (expected is None)
    if expected is not None:
        assert tuple(report.witness) == expected


@st.composite
def max_degree_one_digraphs(draw):
    a = draw(st.integers(1, 6))
    out_perm = draw(st.permutations(range(a)))
    in_perm = draw(st.permutations(range(a)))
    keep_out = draw(st.lists(st.booleans(), min_size=a, max_size=a))
    keep_in = draw(st.lists(st.booleans(), min_size=a, max_size=a))
    arcs = [(i, a + out_perm[i]) for i in range(a) if keep_out[i]]
    arcs += [(a + j, in_perm[j]) for j in range(a) if keep_in[j]]
    return build(a, arcs)


@given(max_degree_one_digraphs())
def test_condition_a_vacuous_when_degrees_at_most_one(D):
    assert all(degree(D, v).d_out <= 1 and degree(D, v).d_in <= 1 for v in range(D.order))
    assert check_condition_a(D).holds
