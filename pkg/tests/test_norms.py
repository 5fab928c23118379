from fractions import Fraction

import pytest
from hypothesis import given

from conftest import functions
from dcalc.errors import PreconditionError
from dcalc.norms import (
    NormBounds,
    b14_report,
    cell_function,
    cell_norm,
    closed_cover_norm,
    d_norm,
    d_norm_bounds,
    lemma18_bound,
    lsc_decomposition,
    qd_norm,
)
from dcalc.oscillation import baire_index, is_lsc, osc_omega
from dcalc.space import NodeSet, build_space, closure, path_space
from dcalc.values import NodeFunction


def alternating(n):
    return cell_function([(-1) ** j for j in range(n + 1)])


def chi(space, ids):
    return NodeFunction.indicator(space.set(ids))


def test_indicator_norms():
    f = chi(path_space(3), ["v0", "v2"])
    assert (d_norm(f), qd_norm(f)) == (3, 3)
    assert lemma18_bound(chi(path_space(3), ["v1", "v3"])) == 4


@pytest.mark.parametrize("n", range(1, 7))
def test_alternating_norms(n):
    f = alternating(n)
    assert (d_norm(f), qd_norm(f)) == (2 * n + 1, 2 * n)
    assert lemma18_bound(f) == 2 * n + 1


def test_open_indicator_norm_is_sup():
    f = chi(path_space(3), ["v0", "v1"])
    assert d_norm(f) == f.sup_norm() == 1


def test_constant():
    f = NodeFunction.constant(path_space(2), Fraction(-3, 2))
    assert d_norm(f) == lemma18_bound(f) == Fraction(3, 2)
    assert qd_norm(f) == 0


def test_lsc_split_examples():
    u, v = lsc_decomposition(chi(path_space(1), ["v1"]))
    assert list(u.vec) == [1, 1]
    assert (v["v0"], v["v1"]) == (1, 0)
    u, v = lsc_decomposition(alternating(2))
    assert max((u + v).vec) == 5


def test_cell_closed_form():
    assert cell_norm([0, 1, 0]) == (2, 2)
    assert cell_norm([1, -1, 1, -1]) == (7, 6)
    assert cell_norm([Fraction(5, 2)] * 4) == (Fraction(5, 2), 0)
    with pytest.raises(PreconditionError):
        cell_norm([])


def test_sandwich_examples():
    rep = b14_report(chi(path_space(3), ["v0", "v2"]))
    assert (rep.b14_lower, rep.d_norm, rep.b14_upper) == (2, 3, 10)
    assert rep.fl_value == 3
    rep = b14_report(alternating(2))
    assert (rep.b14_lower, rep.d_norm, rep.b14_upper) == (Fraction(5, 2), 5, 13)
    rep = b14_report(NodeFunction.constant(path_space(2), -4))
    assert rep.sup_norm == rep.d_norm == rep.fl_value == 4


def test_report_serializes_rationals():
    d = b14_report(alternating(2)).as_dict()
    assert d["b14_lower"] == "5/2" and d["d_index"] == 2
    assert list(d) == [
        "sup_norm", "d_norm", "qd_norm", "d_index",
        "lower_bound_18", "b14_lower", "b14_upper", "fl_value",
    ]


def test_closed_cover_examples():
    P3 = path_space(3)
    f = alternating(3)
    assert closed_cover_norm(f, [P3.everything()]) == d_norm(f)
    cover = [closure(P3.set(["v0"])), P3.set(["v1", "v2", "v3"])]
    assert closed_cover_norm(f, cover) == 7
    fork = build_space([["r", "a"], ["a", "a0"], ["r", "b"], ["b", "b0"]])
    g = chi(fork, ["a0", "a", "b0"])
    halves = [fork.set(["a0", "a", "r"]), fork.set(["b0", "b", "r"])]
    assert closed_cover_norm(g, halves) == d_norm(g)
    with pytest.raises(PreconditionError):
        closed_cover_norm(f, [P3.set(["v0", "v1"])])
    with pytest.raises(PreconditionError):
        closed_cover_norm(f, [P3.set(["v3"])])


def test_complex_input_gets_flagged_bounds():
    f = NodeFunction(path_space(1), {"v0": 1j, "v1": 0})
    b = d_norm(f)
    assert isinstance(b, NormBounds) and b.flagged
    assert b.lower <= b.upper
    # max(|f| + osc) = 1; the imaginary part is an open indicator of norm 1
    assert (b.lower, b.upper) == pytest.approx((0.5, 1.0))
    with pytest.raises(PreconditionError):
        lsc_decomposition(f)


@given(functions(8))
def test_norm_chain(f):
    d, qd = d_norm(f), qd_norm(f)
    assert qd <= d <= f.sup_norm() + qd


@given(functions(8))
def test_lsc_split_contract(f):
    u, v = lsc_decomposition(f)
    assert u - v == f
    assert min(u.vec) >= 0 and min(v.vec) >= 0
    assert is_lsc(u) and is_lsc(v)
    assert max((u + v).vec) == d_norm(f)


@given(functions(8))
def test_chain_bound_is_exact(f):
    assert lemma18_bound(f) == d_norm(f)


@given(functions(8))
def test_index_bounds(f):
    n = baire_index(f)
    assert d_norm(f) <= (2 * n + 1) * f.sup_norm()
    assert qd_norm(f) <= 2 * n * f.sup_norm()


@given(functions(8))
def test_local_norm_is_subtree_norm(f):
    om = osc_omega(f)
    K = f.space
    for i, v in enumerate(K.nodes):
        assert om[v] == qd_norm(f.restrict(NodeSet(K, K.subtree_mask(i))))


@given(functions(8))
def test_report_holds(f):
    rep = b14_report(f)
    assert rep.b14_lower <= rep.fl_value == rep.d_norm <= rep.b14_upper


def test_complex_bounds_bracket_real_norm():
    f = alternating(3)
    g = NodeFunction.from_vector(f.space, [complex(x) for x in f.vec])
    b = d_norm_bounds(g)
    assert b.lower <= d_norm(f) <= b.upper
