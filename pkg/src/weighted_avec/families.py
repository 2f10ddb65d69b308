"""Exhaustive families of small graphs and random normalized weightings.

Unlabeled enumeration comes from networkx (non-isomorphic tree generator and
the graph atlas, which lists every graph on up to 7 vertices). Labeled
enumeration over edge subsets is done here directly.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterator

import networkx as nx
import numpy as np

from .errors import ScopeTooLarge
from .graph import Graph, WeightFunction, is_connected, is_tree, make_graph, make_weights

ATLAS_MAX_N = 7


def _from_nx(h: nx.Graph) -> Graph:
    return make_graph(h.number_of_nodes(), h.edges())


def trees(n: int) -> Iterator[Graph]:
    """One representative of every isomorphism class of trees on ``n`` vertices."""
    if n < 2:
        return
    for h in nx.nonisomorphic_trees(n):
        yield _from_nx(h)


def connected_graphs(n: int) -> Iterator[Graph]:
    """Every connected graph on ``n`` vertices up to isomorphism (``n <= 7``)."""
    if n > ATLAS_MAX_N:
        raise ScopeTooLarge(f"unlabeled graph enumeration only up to n={ATLAS_MAX_N}")
    for h in nx.graph_atlas_g():
        if h.number_of_nodes() == n:
            g = _from_nx(h)
            if is_connected(g):
                yield g


def connected_nontrees(n: int) -> Iterator[Graph]:
    return (g for g in connected_graphs(n) if not is_tree(g))


def labeled_connected_graphs(n: int) -> Iterator[Graph]:
    """Every connected labeled graph on vertex set ``0..n-1``; 2^(n(n-1)/2) candidates."""
    pairs = list(combinations(range(n), 2))
    if len(pairs) > 15:
        raise ScopeTooLarge("labeled enumeration limited to n <= 6")
    for mask in range(1 << len(pairs)):
        g = Graph(n, tuple(p for i, p in enumerate(pairs) if mask >> i & 1))
        if is_connected(g):
            yield g


def random_weights(g: Graph, rng: np.random.Generator) -> WeightFunction:
    """Uniform point of the normalized simplex (exponential draws rescaled to sum m)."""
    x = rng.exponential(size=g.m)
    return make_weights(g, (x * (g.m / x.sum())).tolist())
