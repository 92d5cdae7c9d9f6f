"""Extremal dimension formulas, witnesses, and the rebalancing move."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import graph
from leavitt import (
    bunch_tree,
    bunch_tuple_dimension,
    dimension,
    dominating_bunch_tuple,
    fan_tree,
    is_bunch_tree,
    is_tree,
    max_dim,
    max_dim_fixed_sinks,
    min_dim,
    min_dim_fixed_sinks,
    rebalance_step,
    semisimple_type,
    sinks,
)


def test_max_fixed_sinks_values():
    assert max_dim_fixed_sinks(6, 2).value == 50
    assert max_dim_fixed_sinks(9, 1).value == 81
    assert max_dim_fixed_sinks(6, 5).value == 20
    with pytest.raises(ValueError):
        max_dim_fixed_sinks(6, 6)
    with pytest.raises(ValueError):
        max_dim_fixed_sinks(6, 0)


def test_max_fixed_sinks_witness():
    rep = max_dim_fixed_sinks(6, 2)
    assert semisimple_type(rep.witness) == (5, 5)
    assert dimension(semisimple_type(rep.witness)) == rep.value
    rep = max_dim_fixed_sinks(4, 1)
    assert semisimple_type(rep.witness) == (4,)


def test_max_dim_cases():
    assert (max_dim(6).value, max_dim(6).s) == (50, 2)
    assert (max_dim(5).value, max_dim(5).s) == (32, 2)
    assert (max_dim(7).value, max_dim(7).s) == (75, 3)
    assert max_dim(2).value == 4
    with pytest.raises(ValueError):
        max_dim(1)


def test_min_fixed_sinks_values():
    assert min_dim_fixed_sinks(7, 3).value == 27
    assert min_dim_fixed_sinks(6, 2).value == 25
    assert min_dim_fixed_sinks(5, 4).value == 16
    with pytest.raises(ValueError):
        min_dim_fixed_sinks(5, 5)


def test_min_fixed_sinks_witness():
    rep = min_dim_fixed_sinks(6, 2)
    assert is_bunch_tree(rep.witness)
    assert len(sinks(rep.witness)) == 2
    assert dimension(semisimple_type(rep.witness)) == 25


def test_min_dim():
    assert min_dim(5).value == 16
    assert min_dim(2).value == 4
    rep = min_dim(7)
    assert rep.value == 24
    assert all(min_dim_fixed_sinks(7, s).value > 24 for s in range(1, 6))
    assert semisimple_type(rep.witness) == (2,) * 6


def test_every_witness_classifies_to_its_value():
    for n in range(2, 12):
        for s in range(1, n):
            for rep in (max_dim_fixed_sinks(n, s), min_dim_fixed_sinks(n, s)):
                assert is_tree(rep.witness)
                assert len(sinks(rep.witness)) == s
                assert dimension(semisimple_type(rep.witness)) == rep.value
        for rep in (max_dim(n), min_dim(n)):
            assert dimension(semisimple_type(rep.witness)) == rep.value


def test_formula_vs_sweep():
    for n in range(2, 41):
        per_s_max = [max_dim_fixed_sinks(n, s).value for s in range(1, n)]
        per_s_min = [min_dim_fixed_sinks(n, s).value for s in range(1, n)]
        assert max_dim(n).value == max(per_s_max)
        assert min_dim(n).value == min(per_s_min)


def test_fan_unimodal_in_sink_count():
    for n in range(3, 41):
        f = [max_dim_fixed_sinks(n, s).value for s in range(1, n)]
        peak_lo = (n + 1) // 3
        peak_hi = -(-(n + 1) // 3)
        for i in range(peak_lo - 1):
            assert f[i] <= f[i + 1]
        for i in range(peak_hi - 1, len(f) - 1):
            assert f[i] >= f[i + 1]


def test_bunch_tuple_dimension():
    assert bunch_tuple_dimension((1, 1)) == 8
    assert bunch_tuple_dimension((2, 2, 2)) == 27
    assert bunch_tuple_dimension((1, 3)) == 20


def test_bunch_tree_structure():
    g = bunch_tree((1, 2))
    assert is_bunch_tree(g)
    assert semisimple_type(g) == (2, 3)
    assert bunch_tuple_dimension((1, 2)) == dimension(semisimple_type(g))


def test_rebalance_examples():
    assert rebalance_step((1, 1, 4)) == (1, 2, 3)
    assert bunch_tuple_dimension((1, 1, 4)) - bunch_tuple_dimension((1, 2, 3)) == 4
    assert rebalance_step((1, 3)) == (2, 2)
    with pytest.raises(ValueError):
        rebalance_step((2, 2, 2))
    with pytest.raises(ValueError):
        rebalance_step((3, 4))


@given(st.lists(st.integers(min_value=1, max_value=9), min_size=1, max_size=6))
@settings(max_examples=300, deadline=None)
def test_rebalance_descends_to_balanced_witness(branches):
    t = tuple(sorted(branches))
    n = sum(t) + 1
    s = len(t)
    while t[-1] - t[0] >= 2:
        nxt = rebalance_step(t)
        drop = bunch_tuple_dimension(t) - bunch_tuple_dimension(nxt)
        assert drop == 2 * (t[-1] - t[0]) - 2
        assert drop > 0
        assert sum(nxt) == sum(t)
        t = nxt
    q, r = divmod(n - 1, s)
    assert t == (q,) * (s - r) + (q + 1,) * r
    assert bunch_tuple_dimension(t) == min_dim_fixed_sinks(n, s).value


def test_dominating_bunch_tuple_examples():
    assert dominating_bunch_tuple(bunch_tree((1, 2))) == (1, 2)
    crooked = graph("a b c w", "x a b", "y b c", "z b w")
    assert dominating_bunch_tuple(crooked) == (1, 2)
    assert bunch_tuple_dimension((1, 2)) <= dimension(semisimple_type(crooked))
    star = graph("r a b c", "x r a", "y r b", "z r c")
    assert dominating_bunch_tuple(star) == (1, 1, 1)


def test_dominating_bunch_tuple_rejects_non_trees():
    with pytest.raises(ValueError):
        dominating_bunch_tuple(graph("a b", "x a b", "y a b"))
    with pytest.raises(ValueError):
        dominating_bunch_tuple(graph("v"))
