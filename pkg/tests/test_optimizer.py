import numpy as np
import pytest
from hypothesis import given, settings

from strategies import connected_graphs
from weighted_avec import errors
from weighted_avec.extremal import closed_form_bounds
from weighted_avec.graph import (
    broom_graph,
    complete_graph,
    cycle_graph,
    make_graph,
    path_graph,
    star_graph,
)
from weighted_avec.metrics import avec
from weighted_avec.optimizer import compositions, grid_search, lattice_size, local_search

PAW = make_graph(4, [(0, 1), (1, 2), (0, 2), (2, 3)])


def test_compositions_count_and_sums():
    comps = list(compositions(5, 3))
    assert len(comps) == lattice_size(3, 5) == 21
    assert all(sum(c) == 5 and min(c) >= 0 for c in comps)
    assert len({tuple(c) for c in comps}) == 21


def test_grid_p4_min():
    res = grid_search(path_graph(4), "min", 12)
    assert res.best_value == pytest.approx(9 / 4, abs=1e-12)
    assert res.evaluations == lattice_size(3, 12)
    assert res.method == "grid" and res.direction == "min"


@pytest.mark.parametrize("r", [1, 3, 7])
def test_grid_p2_max(r):
    assert grid_search(path_graph(2), "max", r).best_value == 1.0


def test_grid_c4_max():
    assert grid_search(cycle_graph(4), "max", 8).best_value == pytest.approx(2.0, abs=1e-12)


def test_grid_guards():
    with pytest.raises(errors.TooManyEdges):
        grid_search(complete_graph(7), "min", 40)
    with pytest.raises(errors.Disconnected):
        grid_search(make_graph(4, [(0, 1), (2, 3)]), "min", 4)
    with pytest.raises(ValueError):
        grid_search(path_graph(3), "sideways", 4)


@pytest.mark.parametrize("g, r", [(path_graph(4), 12), (path_graph(3), 6), (cycle_graph(4), 8), (PAW, 8)])
def test_grid_brackets_closed_forms(g, r):
    lo, hi = closed_form_bounds(g)
    step = g.m / r
    gmin = grid_search(g, "min", r).best_value
    gmax = grid_search(g, "max", r).best_value
    assert lo - 1e-9 <= gmin <= lo + step
    assert hi - step <= gmax <= hi + 1e-9


def test_local_tree_max():
    for g in (path_graph(6), star_graph(6), broom_graph(6)):
        assert local_search(g, "max", 5, 1).best_value == pytest.approx(g.n - 1, abs=1e-6)


def test_local_broom_min():
    res = local_search(broom_graph(7), "min", 20, 42)
    assert res.best_value == pytest.approx(72 / 35, abs=1e-4)


def test_local_k4_min():
    assert local_search(complete_graph(4), "min", 5, 3).best_value == pytest.approx(0.0, abs=1e-6)


def test_local_deterministic_per_seed():
    g = cycle_graph(5)
    a = local_search(g, "max", 3, 7)
    b = local_search(g, "max", 3, 7)
    assert a == b


def test_local_trace_is_monotone():
    for direction, better in (("min", np.less), ("max", np.greater)):
        res = local_search(broom_graph(6), direction, 2, 5, record_trace=True)
        trace = np.array(res.trace)
        assert len(trace) > 0
        # trace restarts with each descent, so compare within runs of improvement
        steps = better(trace[1:], trace[:-1])
        breaks = ~steps
        assert breaks.sum() <= 1


@settings(max_examples=15)
@given(connected_graphs(min_n=3, max_n=5))
def test_results_respect_bounds_and_invariants(g):
    lo, hi = closed_form_bounds(g)
    for direction in ("min", "max"):
        res = local_search(g, direction, 2, 0)
        assert res.best_weights.is_normalized()
        assert res.best_value == pytest.approx(avec(g, res.best_weights), rel=1e-9, abs=1e-12)
        assert lo - 1e-9 <= res.best_value <= hi + 1e-9


@pytest.mark.parametrize("g, r", [(path_graph(4), 12), (PAW, 8), (cycle_graph(4), 8)])
def test_grid_and_local_agree(g, r):
    step = g.m / r
    for direction in ("min", "max"):
        a = grid_search(g, direction, r).best_value
        b = local_search(g, direction, 5, 11).best_value
        assert abs(a - b) <= step
