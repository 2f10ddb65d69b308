"""Extremal weightings and closed-form bounds on the average eccentricity.

Trees of order n with t leaves:
    (n-1)(n+t)/(nt) <= avec(T, w) <= n-1
with the lower bound attained exactly when every end edge carries (n-1)/t
and internal edges carry nothing, and the upper bound attained exactly when
one edge carries all the weight.

Connected non-trees with m edges and edge connectivity lam:
    0 <= avec(G, w) <= m / lam
attained by zeroing a spanning tree, resp. by spreading all weight evenly
over a minimum edge cut.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .connectivity import edge_connectivity, min_edge_cut
from .errors import ArgumentOutOfRange, IsATree, NotATree, OrderTooSmall
from .graph import (
    Edge,
    Graph,
    WeightFunction,
    bfs_spanning_tree,
    is_tree,
    make_weights,
    require_connected,
    tree_profile,
)
from .metrics import avec

RTOL = 1e-9
ATOL = 1e-12


def close(a: float, b: float, rtol: float = RTOL, atol: float = ATOL) -> bool:
    return math.isclose(a, b, rel_tol=rtol, abs_tol=atol)


def tree_avec_min_formula(n: int, t: int) -> float:
    return float(tree_avec_min_fraction(n, t))


def tree_avec_min_fraction(n: int, t: int) -> Fraction:
    """Exact (n-1)(n+t)/(nt)."""
    if n < 3 or not 2 <= t <= n - 1:
        raise ArgumentOutOfRange(f"need n >= 3 and 2 <= t <= n-1, got n={n}, t={t}")
    return Fraction((n - 1) * (n + t), n * t)


def _tree_or_raise(g: Graph) -> None:
    if not is_tree(g):
        raise NotATree("construction needs a tree")


def tree_min_weights(t_graph: Graph) -> WeightFunction:
    """End edges get (n-1)/t, internal edges 0."""
    _tree_or_raise(t_graph)
    if t_graph.n < 3:
        raise OrderTooSmall("tree_min_weights needs n >= 3")
    prof = tree_profile(t_graph)
    x = (t_graph.n - 1) / prof.t
    return make_weights(t_graph, [x if e in prof.end_edges else 0.0 for e in t_graph.edges])


def tree_max_weights(t_graph: Graph, e: Edge | None = None) -> WeightFunction:
    """All n-1 units of weight on ``e`` (default: the first edge)."""
    _tree_or_raise(t_graph)
    idx = 0 if e is None else t_graph.edge_index(e)
    values = [0.0] * t_graph.m
    values[idx] = float(t_graph.n - 1)
    return make_weights(t_graph, values)


def spanning_tree_zero_weights(g: Graph) -> WeightFunction:
    """Zero on a BFS spanning tree from vertex 0, m/(m-n+1) on every other edge."""
    require_connected(g)
    if g.m < g.n:
        raise IsATree("a tree has no edge outside its spanning tree")
    tree = set(bfs_spanning_tree(g, 0))
    spare = g.m / (g.m - g.n + 1)
    return make_weights(g, [0.0 if e in tree else spare for e in g.edges])


def mincut_weights(g: Graph) -> WeightFunction:
    """m/lam on each edge of the scan-order minimum edge cut, 0 elsewhere."""
    cut = min_edge_cut(g)
    x = g.m / cut.lam
    chosen = set(cut.edges)
    return make_weights(g, [x if e in chosen else 0.0 for e in g.edges])


@dataclass(frozen=True)
class BoundsReport:
    lower: float
    upper: float
    value: float | None = None
    attains_lower: bool = False
    attains_upper: bool = False
    lower_witness: WeightFunction | None = None
    upper_witness: WeightFunction | None = None

    def within(self, tol: float = RTOL) -> bool:
        if self.value is None:
            return True
        slack = tol * max(1.0, abs(self.upper))
        return self.lower - slack <= self.value <= self.upper + slack


def closed_form_bounds(g: Graph) -> tuple[float, float]:
    """(avec_min, avec_max) over normalized weightings of a connected graph."""
    require_connected(g)
    if is_tree(g):
        if g.n == 2:
            return 1.0, 1.0
        return tree_avec_min_formula(g.n, tree_profile(g).t), float(g.n - 1)
    return 0.0, g.m / edge_connectivity(g)


def bounds_for(g: Graph, w: WeightFunction | None = None) -> BoundsReport:
    lower, upper = closed_form_bounds(g)
    if is_tree(g):
        lw = tree_min_weights(g) if g.n >= 3 else tree_max_weights(g)
        uw = tree_max_weights(g)
    else:
        lw, uw = spanning_tree_zero_weights(g), mincut_weights(g)
    if w is None:
        return BoundsReport(lower, upper, lower_witness=lw, upper_witness=uw)
    value = avec(g, w)
    return BoundsReport(
        lower,
        upper,
        value,
        attains_lower=close(value, lower),
        attains_upper=close(value, upper),
        lower_witness=lw,
        upper_witness=uw,
    )
