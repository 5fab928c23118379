from hypothesis import given, settings

from conftest import functions, node_sets
from dcalc.norms import cell_function, d_norm, qd_norm
from dcalc.oracles import eps_sequence_search, exhaustive_dcs_search, osc_by_definition
from dcalc.oscillation import osc_n
from dcalc.set_calculus import example_sets, min_dcs_count
from dcalc.space import path_space
from dcalc.values import NodeFunction


def test_definition_examples():
    f = cell_function([1, 0, 1, 0])
    assert [osc_by_definition(f, 2)[f"v{j}"] for j in range(4)] == [0, 1, 2, 2]
    alt = cell_function([1, -1, 1])
    assert [osc_by_definition(alt, 2)[f"v{j}"] for j in range(3)] == [0, 2, 4]


def test_eps_search_examples():
    assert eps_sequence_search(cell_function([1, -1, 1])) == 4
    assert eps_sequence_search(NodeFunction.constant(path_space(3), 7)) == 0
    chi = NodeFunction.indicator(path_space(3).set(["v0", "v2"]))
    assert eps_sequence_search(chi) == 3


def test_dcs_search_examples():
    for n in range(1, 7):
        for kind, want in (("A", (n + 1) // 2), ("B", n // 2 + 1)):
            _, S = example_sets(n, kind)
            assert exhaustive_dcs_search(S) == want


@settings(max_examples=60)
@given(functions(7))
def test_definition_matches_engine(f):
    for n in range(f.space.height + 2):
        got = osc_by_definition(f, n)
        assert all(got[v] == osc_n(f, n)[v] for v in f.space.nodes)


@given(functions(7))
def test_eps_search_matches_norms(f):
    assert eps_sequence_search(f) == qd_norm(f)
    assert eps_sequence_search(f, with_sup=True) == d_norm(f)


@given(node_sets(9))
def test_dcs_search_matches_branch_and_bound(S):
    assert exhaustive_dcs_search(S) == min_dcs_count(S)
