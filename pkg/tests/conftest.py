import pytest
from hypothesis import strategies as st

from bbdham.digraph import BipartiteDigraph, build, complete, parse_vertex


def named(a, *arcs):
    """Build from arc strings like ``"x1>y2"``."""
    pairs = []
    for arc in arcs:
        u, v = arc.split(">")
        pairs.append((parse_vertex(a, u), parse_vertex(a, v)))
    return build(a, pairs)


def exception_digraph():
    """Complete digraph on 2+2 vertices minus the 2-cycle [x2, y1]."""
    return complete(2).with_arc(1, 2, False).with_arc(2, 1, False)


@st.composite
def digraphs(draw, min_a=1, max_a=4):
    a = draw(st.integers(min_a, max_a))
    return BipartiteDigraph.from_index(a, draw(st.integers(0, (1 << (2 * a * a)) - 1)))


@pytest.fixture
def k22():
    return complete(2)


@pytest.fixture
def k33():
    return complete(3)


@pytest.fixture
def exception():
    return exception_digraph()


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
