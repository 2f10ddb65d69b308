from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from strategies import connected_graphs, graph_and_weights, normalized_weights, trees
from weighted_avec import errors
from weighted_avec.connectivity import edge_connectivity
from weighted_avec.extremal import (
    bounds_for,
    mincut_weights,
    spanning_tree_zero_weights,
    tree_avec_min_formula,
    tree_avec_min_fraction,
    tree_max_weights,
    tree_min_weights,
)
from weighted_avec.graph import (
    broom_graph,
    complete_graph,
    cycle_graph,
    make_weights,
    ones,
    path_graph,
    star_graph,
    tree_profile,
)
from weighted_avec.metrics import avec, eccentricity_profile


def approx(x):
    return pytest.approx(x, rel=1e-9, abs=1e-12)


def test_tree_min_weights_p4():
    w = tree_min_weights(path_graph(4))
    assert w.values == (1.5, 0.0, 1.5)
    assert avec(path_graph(4), w) == approx(9 / 4)


@pytest.mark.parametrize("n", range(3, 13))
def test_tree_min_weights_star_is_all_ones(n):
    w = tree_min_weights(star_graph(n))
    assert w == ones(star_graph(n))
    assert avec(star_graph(n), w) == approx(2 - 1 / n)


def test_tree_min_weights_broom7():
    g = broom_graph(7)
    w = tree_min_weights(g)
    assert w[(1, 2)] == 0.0
    assert sorted(w.values) == [0.0] + [6 / 5] * 5
    assert Fraction(6 * 12, 7 * 5) == Fraction(72, 35)
    assert avec(g, w) == approx(72 / 35)
    prof = eccentricity_profile(g, w)
    assert prof.ecc[1] == approx(6 / 5) and prof.ecc[2] == approx(6 / 5)
    assert prof.ecc[0] == approx(12 / 5)


def test_tree_min_weights_errors():
    with pytest.raises(errors.NotATree):
        tree_min_weights(cycle_graph(4))
    with pytest.raises(errors.OrderTooSmall):
        tree_min_weights(path_graph(2))


@given(trees(min_n=3))
def test_tree_min_weights_eccentricities(t_graph):
    n, t = t_graph.n, tree_profile(t_graph).t
    prof = eccentricity_profile(t_graph, tree_min_weights(t_graph))
    for v in range(n):
        expect = 2 * (n - 1) / t if t_graph.degree(v) == 1 else (n - 1) / t
        assert prof.ecc[v] == approx(expect)
    assert prof.avec == approx(tree_avec_min_formula(n, t))


def test_tree_max_weights_examples():
    for e in path_graph(4).edges:
        assert avec(path_graph(4), tree_max_weights(path_graph(4), e)) == 3.0
    for e in star_graph(5).edges:
        assert avec(star_graph(5), tree_max_weights(star_graph(5), e)) == 4.0
    w = tree_max_weights(path_graph(2))
    assert w.values == (1.0,) and avec(path_graph(2), w) == 1.0
    with pytest.raises(errors.EdgeNotInGraph):
        tree_max_weights(path_graph(4), (0, 3))
    with pytest.raises(errors.NotATree):
        tree_max_weights(cycle_graph(4))


def test_spanning_tree_zero_weights():
    w = spanning_tree_zero_weights(cycle_graph(4))
    assert sorted(w.values) == [0.0, 0.0, 0.0, 4.0]
    assert avec(cycle_graph(4), w) == 0.0
    wk = spanning_tree_zero_weights(complete_graph(4))
    assert sorted(wk.values) == [0.0] * 3 + [2.0] * 3
    assert avec(complete_graph(4), wk) == 0.0
    with pytest.raises(errors.IsATree):
        spanning_tree_zero_weights(path_graph(4))


def test_mincut_weights():
    w = mincut_weights(cycle_graph(6))
    assert sorted(w.values) == [0.0] * 4 + [3.0, 3.0]
    assert avec(cycle_graph(6), w) == 3.0
    wk = mincut_weights(complete_graph(4))
    assert sorted(wk.values) == [0.0] * 3 + [2.0] * 3
    assert avec(complete_graph(4), wk) == 2.0
    for t_graph in (path_graph(5), broom_graph(6), star_graph(7)):
        assert avec(t_graph, mincut_weights(t_graph)) == t_graph.n - 1


@pytest.mark.parametrize("n", range(3, 15))
def test_formula_endpoints(n):
    assert tree_avec_min_fraction(n, 2) == Fraction(n + 1, 2) - Fraction(1, n)
    assert tree_avec_min_fraction(n, n - 1) == 2 - Fraction(1, n)


def test_formula_value_and_range():
    assert tree_avec_min_fraction(7, 5) == Fraction(72, 35)
    for n, t in [(2, 2), (5, 1), (5, 5)]:
        with pytest.raises(errors.ArgumentOutOfRange):
            tree_avec_min_formula(n, t)


def test_formula_decreasing_in_t():
    for n in range(4, 15):
        vals = [tree_avec_min_fraction(n, t) for t in range(2, n)]
        assert all(a > b for a, b in zip(vals, vals[1:]))


def test_bounds_for_examples():
    p4 = path_graph(4)
    r = bounds_for(p4, tree_min_weights(p4))
    assert r.value == approx(9 / 4) and r.attains_lower and not r.attains_upper
    r = bounds_for(cycle_graph(6), ones(cycle_graph(6)))
    assert r.value == 3.0 and r.attains_upper and r.lower == 0.0 and r.upper == 3.0
    r = bounds_for(complete_graph(4), ones(complete_graph(4)))
    assert (r.value, r.lower, r.upper) == (1.0, 0.0, 2.0)
    assert not r.attains_lower and not r.attains_upper
    r = bounds_for(path_graph(2), ones(path_graph(2)))
    assert r.lower == r.upper == r.value == 1.0
    r = bounds_for(broom_graph(7))
    assert r.value is None and r.within()
    assert avec(broom_graph(7), r.lower_witness) == approx(r.lower)
    assert avec(broom_graph(7), r.upper_witness) == approx(r.upper)


@settings(max_examples=100)
@given(graph_and_weights(trees(max_n=10)))
def test_tree_bounds_hold(gw):
    t_graph, w = gw
    r = bounds_for(t_graph, w)
    assert r.within()
    if max(w.values) <= t_graph.n - 1 - 1e-3:
        assert r.value < t_graph.n - 1


@settings(max_examples=60)
@given(graph_and_weights(connected_graphs(max_n=6, nontree=True)))
def test_nontree_bounds_hold(gw):
    g, w = gw
    r = bounds_for(g, w)
    assert r.lower == 0.0 and r.upper == g.m / edge_connectivity(g)
    assert 0.0 <= r.value <= r.upper + 1e-9
    assert avec(g, mincut_weights(g)) == approx(r.upper)
    assert avec(g, spanning_tree_zero_weights(g)) == 0.0


@settings(max_examples=40)
@given(trees(min_n=3, max_n=9), st.integers(0, 2**32 - 1))
def test_lower_bound_equality_is_strict(t_graph, seed):
    rng = np.random.default_rng(seed)
    n, t = t_graph.n, tree_profile(t_graph).t
    bound = tree_avec_min_formula(n, t)
    star = np.array(tree_min_weights(t_graph).values)
    for _ in range(5):
        u = rng.exponential(size=t_graph.m)
        u *= t_graph.m / u.sum()
        dist = np.abs(u - star).sum()
        if dist < 1e-9:
            continue
        s = min(1.0, rng.uniform(1e-3, 0.5) / dist)
        w = make_weights(t_graph, ((1 - s) * star + s * u).tolist())
        assert np.abs(np.array(w.values) - star).sum() >= 1e-3 - 1e-12
        assert avec(t_graph, w) - bound > 1e-9


@given(trees(min_n=3, max_n=9).flatmap(lambda g: normalized_weights(g)))
def test_near_equality_forces_the_extremal_weighting(w):
    g = w.graph
    bound = tree_avec_min_formula(g.n, tree_profile(g).t)
    if avec(g, w) <= bound + 1e-9:
        ext = tree_min_weights(g)
        assert np.allclose(w.values, ext.values, atol=1e-6)
