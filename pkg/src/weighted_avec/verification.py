"""Sweeps that check every bound on exhaustive families with random weightings.

Each sweep returns a :class:`SweepResult`; a non-empty ``violations`` list
holds counterexample dumps (graph, weights, measured value, bound).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import families
from .connectivity import edge_connectivity, min_edge_cut
from .errors import ScopeTooLarge
from .extremal import (
    close,
    mincut_weights,
    spanning_tree_zero_weights,
    tree_avec_min_formula,
    tree_max_weights,
    tree_min_weights,
)
from .graph import (
    Graph,
    WeightFunction,
    broom_graph,
    complement,
    is_connected,
    is_tree,
    path_graph,
    tree_profile,
)
from .metrics import eccentricity_profile, leaf_distance_identity_check
from .nordhaus_gaddum import COMPLEMENT_DISCONNECTED, classify_pair, ng_bounds, ng_witnesses
from .oracles import brute_force_edge_connectivity, is_minimal_cut

TOL = 1e-9
SCOPE_LIMITS = {"trees": 10, "graphs": 6, "ng": 10}


def _le(a: float, b: float) -> bool:
    return a <= b + TOL * max(1.0, abs(b))


@dataclass
class SweepResult:
    scope: str
    checks: int = 0
    structures: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def check(self, cond: bool, what: str, g: Graph, w: WeightFunction | None = None, **info):
        self.checks += 1
        if not cond:
            self.violations.append(
                {
                    "check": what,
                    "n": g.n,
                    "edges": [list(e) for e in g.edges],
                    "weights": None if w is None else list(w.values),
                    **info,
                }
            )


def _check_limit(scope: str, max_n: int) -> None:
    if max_n > SCOPE_LIMITS[scope]:
        raise ScopeTooLarge(f"scope {scope!r} supports max_n <= {SCOPE_LIMITS[scope]}")


def verify_trees(max_n: int, samples: int, seed: int) -> SweepResult:
    _check_limit("trees", max_n)
    rng = np.random.default_rng(seed)
    res = SweepResult("trees")
    for n in range(2, max_n + 1):
        for g in families.trees(n):
            res.structures += 1
            upper = float(n - 1)
            for e in g.edges:
                v = eccentricity_profile(g, tree_max_weights(g, e)).avec
                res.check(v == upper, "tree_max_weights attains n-1", g, value=v, bound=upper)
            if n >= 3:
                t = tree_profile(g).t
                lower = tree_avec_min_formula(n, t)
                wmin = tree_min_weights(g)
                v = eccentricity_profile(g, wmin).avec
                res.check(close(v, lower), "tree_min_weights attains lower bound", g, wmin, value=v, bound=lower)
            for _ in range(samples):
                w = families.random_weights(g, rng)
                prof = eccentricity_profile(g, w)
                res.check(_le(prof.avec, upper), "avec <= n-1", g, w, value=prof.avec, bound=upper)
                if max(w.values) <= upper - 1e-3:
                    res.check(prof.avec < upper, "strictly below n-1", g, w, value=prof.avec, bound=upper)
                if n < 3:
                    continue
                res.check(_le(lower, prof.avec), "avec >= (n-1)(n+t)/(nt)", g, w, value=prof.avec, bound=lower)
                floor = (n - 1) / t
                res.check(
                    all(_le(floor, x) for x in prof.ecc), "every e_w(v) >= (n-1)/t", g, w, bound=floor
                )
                leaf_sum = sum(prof.ecc[v] for v in range(n) if g.degree(v) == 1)
                res.check(_le(2 * (n - 1), leaf_sum), "leaf eccentricities sum >= 2(n-1)", g, w, value=leaf_sum)
                lhs, rhs = leaf_distance_identity_check(g, w)
                res.check(close(lhs, rhs, rtol=TOL), "leaf-pair distance identity", g, w, lhs=lhs, rhs=rhs)
    return res


def verify_graphs(max_n: int, samples: int, seed: int) -> SweepResult:
    _check_limit("graphs", max_n)
    rng = np.random.default_rng(seed)
    res = SweepResult("graphs")
    for n in range(3, max_n + 1):
        for g in families.connected_nontrees(n):
            res.structures += 1
            lam = edge_connectivity(g)
            res.check(lam == brute_force_edge_connectivity(g), "edge connectivity vs brute force", g, lam=lam)
            cut = min_edge_cut(g)
            res.check(cut.lam == lam and is_minimal_cut(g, cut.edges), "min_edge_cut is a minimal cut", g)
            upper = g.m / lam
            v0 = eccentricity_profile(g, spanning_tree_zero_weights(g)).avec
            res.check(v0 == 0.0, "spanning-tree-zero weighting gives 0", g, value=v0)
            v1 = eccentricity_profile(g, mincut_weights(g)).avec
            res.check(close(v1, upper), "min-cut weighting attains m/lam", g, value=v1, bound=upper)
            for _ in range(samples):
                w = families.random_weights(g, rng)
                v = eccentricity_profile(g, w).avec
                res.check(0.0 <= v and _le(v, upper), "0 <= avec <= m/lam", g, w, value=v, bound=upper)
    return res


def verify_ng(max_n: int, samples: int, seed: int) -> SweepResult:
    _check_limit("ng", max_n)
    rng = np.random.default_rng(seed)
    res = SweepResult("ng")

    def sample_pairs(g: Graph) -> None:
        rep = ng_bounds(g)
        gbar = complement(g)
        for target in ("sum_lower", "sum_upper"):
            wit = ng_witnesses(g, target)
            res.check(rep.sum_within(wit.achieved), f"{target} witness within sum bounds", g, value=wit.achieved)
        for _ in range(samples):
            w, wbar = families.random_weights(g, rng), families.random_weights(gbar, rng)
            a, abar = eccentricity_profile(g, w).avec, eccentricity_profile(gbar, wbar).avec
            res.check(rep.sum_within(a + abar), f"{rep.case} sum bounds", g, w, value=a + abar,
                      lower=rep.sum_lower, upper=rep.sum_upper)
            res.check(rep.prod_within(a * abar), f"{rep.case} product bounds", g, w, value=a * abar,
                      lower=rep.prod_lower, upper=rep.prod_upper)

    for n in range(4, max_n + 1):
        for g in families.trees(n):
            if classify_pair(g) == COMPLEMENT_DISCONNECTED:
                continue
            res.structures += 1
            sample_pairs(g)
        if n >= 5:
            b = broom_graph(n)
            rep = ng_bounds(b)
            lo, hi = ng_witnesses(b, "sum_lower"), ng_witnesses(b, "sum_upper")
            res.check(close(lo.achieved, rep.sum_lower), "broom attains sum lower bound", b, value=lo.achieved)
            res.check(close(hi.achieved, rep.sum_upper), "broom attains sum upper bound", b, value=hi.achieved)
            res.check(close(rep.sum_upper, n * (n - 1) / 2), "broom sum upper = n(n-1)/2", b)
    if max_n >= 4:
        p4 = path_graph(4)
        for target, bound, pbound in (("sum_lower", 4.5, 81 / 16), ("sum_upper", 6.0, 9.0)):
            wit = ng_witnesses(p4, target)
            res.check(close(wit.achieved, bound) and close(wit.achieved_prod, pbound), f"P4 {target}", p4)
    for n in range(5, min(max_n, SCOPE_LIMITS["graphs"]) + 1):
        for g in families.connected_graphs(n):
            if is_tree(g) or not is_connected(complement(g)):
                continue
            res.structures += 1
            sample_pairs(g)
    return res


SWEEPS = {"trees": verify_trees, "graphs": verify_graphs, "ng": verify_ng}


def run_sweep(scope: str, max_n: int, samples: int, seed: int) -> SweepResult:
    try:
        sweep = SWEEPS[scope]
    except KeyError:
        raise ValueError(f"unknown scope {scope!r}; choose from {sorted(SWEEPS)}") from None
    return sweep(max_n, samples, seed)
