"""Joint bounds on avec for a graph and its complement.

G and its complement are weighted independently, each normalized to its own
edge count. The bound formulas depend on which of the two are trees:

* tree_tree (only P4): sum in [9/2, 6], product in [81/16, 9];
* tree_nontree: sum in [2(n-1)^2 / (n(n-2)), (n-1)(n + 2(lam' - 1)) / (2 lam')],
  product in [0, m'(n-1)/lam'], primes referring to the non-tree side;
* nontree_nontree: sum in [0, m/lam + m'/lam'], product in [0, m m' / (lam lam')].
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .connectivity import edge_connectivity
from .errors import CaseUnsupported, ComplementDisconnected
from .extremal import (
    close,
    mincut_weights,
    spanning_tree_zero_weights,
    tree_max_weights,
    tree_min_weights,
)
from .graph import Graph, WeightFunction, complement, is_connected, is_tree, require_connected
from .metrics import avec

TREE_TREE = "tree_tree"
TREE_NONTREE = "tree_nontree"
NONTREE_NONTREE = "nontree_nontree"
COMPLEMENT_DISCONNECTED = "complement_disconnected"


def classify_pair(g: Graph) -> str:
    require_connected(g)
    gbar = complement(g)
    if not is_connected(gbar):
        return COMPLEMENT_DISCONNECTED
    g_tree, gbar_tree = is_tree(g), is_tree(gbar)
    if g_tree and gbar_tree:
        # both trees force m = n-1 = n(n-1)/2 - (n-1), i.e. n = 4, and the only such tree is P4
        if g.n != 4 or sorted(g.degrees()) != [1, 1, 2, 2]:
            raise AssertionError(f"tree/tree pair that is not P4: {g}")
        return TREE_TREE
    if g_tree or gbar_tree:
        return TREE_NONTREE
    return NONTREE_NONTREE


@dataclass(frozen=True)
class NGReport:
    case: str
    sum_lower: float
    sum_upper: float
    prod_lower: float
    prod_upper: float
    tree_is_complement: bool = False
    target: str | None = None
    witness_g: WeightFunction | None = None
    witness_gbar: WeightFunction | None = None
    achieved_sum: float | None = None
    achieved_prod: float | None = None

    def sum_within(self, value: float, tol: float = 1e-9) -> bool:
        slack = tol * max(1.0, self.sum_upper)
        return self.sum_lower - slack <= value <= self.sum_upper + slack

    def prod_within(self, value: float, tol: float = 1e-9) -> bool:
        slack = tol * max(1.0, self.prod_upper)
        return self.prod_lower - slack <= value <= self.prod_upper + slack


def _bounds(g: Graph, gbar: Graph, case: str) -> tuple[float, float, float, float]:
    n = g.n
    if case == TREE_TREE:
        return 9 / 2, 6.0, 81 / 16, 9.0
    if case == TREE_NONTREE:
        other = gbar if is_tree(g) else g
        m_o, lam_o = other.m, edge_connectivity(other)
        return (
            2 * (n - 1) ** 2 / (n * (n - 2)),
            (n - 1) * (n + 2 * (lam_o - 1)) / (2 * lam_o),
            0.0,
            m_o * (n - 1) / lam_o,
        )
    lam, lam_bar = edge_connectivity(g), edge_connectivity(gbar)
    return 0.0, g.m / lam + gbar.m / lam_bar, 0.0, g.m * gbar.m / (lam * lam_bar)


class NGWitness(NamedTuple):
    w_g: WeightFunction
    w_gbar: WeightFunction
    achieved: float
    achieved_prod: float


def _extreme(h: Graph, target: str) -> WeightFunction:
    if target == "sum_lower":
        return tree_min_weights(h) if is_tree(h) else spanning_tree_zero_weights(h)
    if target == "sum_upper":
        return tree_max_weights(h) if is_tree(h) else mincut_weights(h)
    raise ValueError(f"target must be 'sum_lower' or 'sum_upper', got {target!r}")


def ng_witnesses(g: Graph, target: str) -> NGWitness:
    """Weight G and its complement with the matching single-graph extremal constructions.

    For brooms both sum bounds are attained; for other trees the achieved
    value is only a measurement.
    """
    case = classify_pair(g)
    if case == COMPLEMENT_DISCONNECTED:
        raise CaseUnsupported("complement is disconnected")
    gbar = complement(g)
    w, wbar = _extreme(g, target), _extreme(gbar, target)
    a, abar = avec(g, w), avec(gbar, wbar)
    return NGWitness(w, wbar, a + abar, a * abar)


def ng_bounds(g: Graph, target: str | None = None) -> NGReport:
    case = classify_pair(g)
    if case == COMPLEMENT_DISCONNECTED:
        raise ComplementDisconnected("complement is disconnected; no bounds apply")
    gbar = complement(g)
    bounds = _bounds(g, gbar, case)
    tree_is_complement = case == TREE_NONTREE and not is_tree(g)
    if target is None:
        return NGReport(case, *bounds, tree_is_complement=tree_is_complement)
    wit = ng_witnesses(g, target)
    return NGReport(
        case,
        *bounds,
        tree_is_complement=tree_is_complement,
        target=target,
        witness_g=wit.w_g,
        witness_gbar=wit.w_gbar,
        achieved_sum=wit.achieved,
        achieved_prod=wit.achieved_prod,
    )


def attains(report: NGReport) -> bool:
    """Whether the witness sum equals the targeted bound."""
    if report.achieved_sum is None:
        return False
    bound = report.sum_lower if report.target == "sum_lower" else report.sum_upper
    return close(report.achieved_sum, bound)
