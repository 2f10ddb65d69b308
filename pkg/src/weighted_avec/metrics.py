"""Weighted distances and eccentricity statistics.

``eccentricity_profile`` runs one label-setting (Dijkstra) pass per vertex.
``distance_matrix`` is a dense Floyd-Warshall route over numpy arrays; the
optimizer uses it in its inner loop and the tests use it as a second,
independent route to the same distances.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import NotATree
from .graph import Edge, Graph, WeightFunction, components, edge_key, is_tree, require_connected


@dataclass(frozen=True)
class EccentricityProfile:
    ecc: tuple[float, ...]
    EX: float
    avec: float

    @property
    def n(self) -> int:
        return len(self.ecc)


def _sssp(g: Graph, values: Sequence[float], source: int) -> list[float]:
    dist = [math.inf] * g.n
    dist[source] = 0.0
    heap = [(0.0, source)]
    index = g._index
    while heap:
        d, u = heapq.heappop(heap)
        if d > dist[u]:
            continue
        for v in g.adjacency[u]:
            nd = d + values[index[(u, v) if u < v else (v, u)]]
            if nd < dist[v]:
                dist[v] = nd
                heapq.heappush(heap, (nd, v))
    return dist


def distances_from(g: Graph, w: WeightFunction, source: int) -> list[float]:
    require_connected(g)
    return _sssp(g, w.values, source)


def weighted_distance(g: Graph, w: WeightFunction, u: int, v: int) -> float:
    return distances_from(g, w, u)[v]


def eccentricity_profile(g: Graph, w: WeightFunction) -> EccentricityProfile:
    require_connected(g)
    ecc = tuple(max(_sssp(g, w.values, v)) for v in range(g.n))
    total = 0.0
    for x in ecc:
        total += x
    return EccentricityProfile(ecc, total, total / g.n)


def avec(g: Graph, w: WeightFunction) -> float:
    return eccentricity_profile(g, w).avec


def distance_matrix(g: Graph, values: Sequence[float]) -> np.ndarray:
    """All-pairs weighted distances by Floyd-Warshall (no connectivity check)."""
    d = np.full((g.n, g.n), np.inf)
    if g.m:
        us, vs = np.array(g.edges).T
        x = np.asarray(values, dtype=float)
        d[us, vs] = x
        d[vs, us] = x
    np.fill_diagonal(d, 0.0)
    for k in range(g.n):
        np.minimum(d, d[:, k, None] + d[None, k, :], out=d)
    return d


def avec_dense(g: Graph, values: Sequence[float]) -> float:
    return float(distance_matrix(g, values).max(axis=1).mean())


def _require_tree(g: Graph) -> None:
    if not is_tree(g):
        raise NotATree("operation needs a tree")


def leaf_pair_count(t_graph: Graph, e: Edge) -> int:
    """Number of ordered leaf pairs whose connecting path uses ``e``: ``2 * n1 * n2``."""
    _require_tree(t_graph)
    key = edge_key(*e)
    t_graph.edge_index(key)
    leaves = {v for v in range(t_graph.n) if t_graph.degree(v) == 1}
    side = components(t_graph.without_edges([key]))
    n1, n2 = (sum(1 for v in comp if v in leaves) for comp in side)
    return 2 * n1 * n2


def leaf_distance_identity_check(t_graph: Graph, w: WeightFunction) -> tuple[float, float]:
    """Both sides of: sum over ordered leaf pairs of d_w = sum over edges of c(e) w(e)."""
    _require_tree(t_graph)
    if t_graph.n < 3:
        raise NotATree("identity check needs a tree with n >= 3")
    leaves = [v for v in range(t_graph.n) if t_graph.degree(v) == 1]
    lhs = 0.0
    for u in leaves:
        d = _sssp(t_graph, w.values, u)
        lhs += math.fsum(d[v] for v in leaves if v != u)
    rhs = math.fsum(leaf_pair_count(t_graph, e) * x for e, x in zip(t_graph.edges, w.values))
    return lhs, rhs
