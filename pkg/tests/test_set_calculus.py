import pytest
from hypothesis import given

from conftest import node_sets
from dcalc.errors import PreconditionError, SearchBudgetExceeded
from dcalc.oracles import exhaustive_dcs_search
from dcalc.oscillation import baire_index, os_sets
from dcalc.set_calculus import (
    boundary_tower,
    chi_norm,
    dcs_decompose,
    dcs_part_count,
    example_sets,
    min_dcs_count,
)
from dcalc.space import classify_set, is_closed, is_open, path_space, star_space
from dcalc.values import NodeFunction


def test_tower_of_even_nodes():
    P3 = path_space(3)
    t = boundary_tower(P3.set(["v0", "v2"]))
    assert [L.sorted() for L in t.tower] == [
        ["v0", "v1", "v2", "v3"], ["v1", "v2", "v3"], ["v2", "v3"], ["v3"],
    ]
    assert t.index == 3 and not t.meets_top
    assert not t.level(4)


def test_tower_of_odd_nodes_meets_top():
    t = boundary_tower(path_space(3).set(["v1", "v3"]))
    assert t.index == 3 and t.meets_top


def test_empty_set_has_index_zero():
    t = boundary_tower(path_space(2).empty())
    assert t.index == 0 and not t.meets_top


def test_indicator_norms():
    P3 = path_space(3)
    assert chi_norm(P3.set(["v0", "v2"])) == (3, 3)
    assert chi_norm(P3.set(["v1", "v3"])) == (4, 3)
    assert chi_norm(star_space(3).set(["leaf1"])) == (1, 1)


def test_decompositions_follow_tower_bands():
    P3 = path_space(3)
    dec = dcs_decompose(P3.set(["v0", "v2"]))
    assert [W.sorted() for W in dec.parts] == [["v0"], ["v2"]]
    closed, opened = dec.certificates[0]
    assert closed == P3.everything() and opened.sorted() == ["v0"]
    dec = dcs_decompose(P3.set(["v1", "v3"]))
    assert [W.sorted() for W in dec.parts] == [["v1"], ["v3"]]
    single = P3.set(["v1", "v2"])
    assert classify_set(single).is_dcs
    assert [W.sorted() for W in dcs_decompose(single).parts] == [["v1", "v2"]]
    assert dcs_decompose(P3.empty()).count == 0


def test_minimal_counts():
    P3 = path_space(3)
    assert min_dcs_count(P3.set(["v0", "v2"])) == 2
    assert min_dcs_count(P3.set(["v1", "v2"])) == 1
    P5 = path_space(5)
    evens = P5.set(["v0", "v2", "v4"])
    assert min_dcs_count(evens) == 3 == dcs_part_count(evens)


def test_min_count_refuses_big_spaces():
    with pytest.raises(SearchBudgetExceeded):
        min_dcs_count(path_space(12).set(["v0"]))


def test_example_sets():
    assert example_sets(3, "A")[1].sorted() == ["v0", "v2"]
    assert example_sets(3, "B")[1].sorted() == ["v1", "v3"]
    assert example_sets(2, "A")[1].sorted() == ["v1"]
    _, B = example_sets(1, "B")
    assert B.sorted() == ["v1"] and chi_norm(B)[0] == 2
    with pytest.raises(PreconditionError):
        example_sets(0, "A")


@pytest.mark.parametrize("n", range(1, 8))
def test_example_set_norms(n):
    _, A = example_sets(n, "A")
    _, B = example_sets(n, "B")
    assert chi_norm(A) == (n, n)
    assert chi_norm(B) == (n + 1, n)


@given(node_sets(9))
def test_tower_matches_os_chain(A):
    t = boundary_tower(A)
    chi = NodeFunction.indicator(A)
    chain = os_sets(chi, [1] * t.index)
    assert [S.mask for S in chain] == [L.mask for L in t.tower[1:]]
    assert baire_index(chi, 1) == t.index


@given(node_sets(9))
def test_decomposition_is_minimal_and_certified(A):
    dec = dcs_decompose(A)
    union = 0
    for W, (C, O) in zip(dec.parts, dec.certificates):
        assert W and union & W.mask == 0
        union |= W.mask
        assert is_closed(C) and is_open(O) and C & O == W
    assert union == A.mask
    assert dec.count == dcs_part_count(A) == min_dcs_count(A) == exhaustive_dcs_search(A)


@given(node_sets(10))
def test_dcs_sets_have_small_index(A):
    if classify_set(A).is_dcs:
        assert boundary_tower(A).index <= 2
