from fractions import Fraction

from hypothesis import strategies as st

from dcalc.space import NodeSet, TreeSpace
from dcalc.values import NodeFunction

SMALL_VALUES = [-2, Fraction(-1, 2), 0, Fraction(1, 3), 1, 3]

ACCEPTANCE_LINES: list[str] = []


@st.composite
def trees(draw, max_nodes=8):
    n = draw(st.integers(1, max_nodes))
    parent = {"n0": None}
    for i in range(1, n):
        parent[f"n{i}"] = f"n{draw(st.integers(0, i - 1))}"
    return TreeSpace(parent)


@st.composite
def node_sets(draw, max_nodes=8):
    space = draw(trees(max_nodes))
    return NodeSet(space, draw(st.integers(0, space.full)))


@st.composite
def functions(draw, max_nodes=8, values=SMALL_VALUES):
    space = draw(trees(max_nodes))
    vec = draw(st.lists(st.sampled_from(values), min_size=len(space), max_size=len(space)))
    return NodeFunction.from_vector(space, vec)


@st.composite
def function_pairs(draw, max_nodes=8):
    f = draw(functions(max_nodes))
    vec = draw(st.lists(st.sampled_from(SMALL_VALUES), min_size=len(f.space), max_size=len(f.space)))
    return f, NodeFunction.from_vector(f.space, vec)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
