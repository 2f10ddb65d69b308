"""Brute-force reference computations, deliberately naive.

None of these share code paths with the routines they check: no heaps, no
flows, no Floyd-Warshall. They are exponential and meant for tiny graphs.
"""

from __future__ import annotations

from collections import deque
from itertools import combinations

from .graph import Edge, Graph, WeightFunction, edge_key, is_connected


def simple_paths(g: Graph, u: int, v: int):
    """Yield every simple u-v path as a vertex list (DFS, exponential)."""
    stack = [(u, [u])]
    while stack:
        x, path = stack.pop()
        if x == v:
            yield path
            continue
        for y in g.adjacency[x]:
            if y not in path:
                stack.append((y, path + [y]))


def path_enumeration_distance(g: Graph, w: WeightFunction, u: int, v: int) -> float:
    """Weighted distance as the minimum over all simple u-v paths."""
    best = float("inf")
    for p in simple_paths(g, u, v):
        best = min(best, sum(w[edge_key(a, b)] for a, b in zip(p, p[1:])))
    return best


def path_enumeration_avec(g: Graph, w: WeightFunction) -> float:
    ecc = [
        max(path_enumeration_distance(g, w, u, v) for v in range(g.n))
        for u in range(g.n)
    ]
    return sum(ecc) / g.n


def bfs_avec(g: Graph) -> float:
    """Unweighted average eccentricity by breadth-first search."""
    total = 0
    for s in range(g.n):
        dist = {s: 0}
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in g.adjacency[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    queue.append(y)
        total += max(dist.values())
    return total / g.n


def disconnecting_sets(g: Graph, k: int):
    """All k-subsets of edges whose removal disconnects ``g``."""
    for subset in combinations(g.edges, k):
        if not is_connected(g.without_edges(subset)):
            yield subset


def brute_force_edge_connectivity(g: Graph) -> int:
    """Smallest k such that some k edges disconnect ``g`` (by exhaustive subsets)."""
    for k in range(0, g.m + 1):
        if next(disconnecting_sets(g, k), None) is not None:
            return k
    # only K1 gets here: nothing disconnects a single vertex
    return g.m


def is_minimal_cut(g: Graph, cut: tuple[Edge, ...]) -> bool:
    if is_connected(g.without_edges(cut)):
        return False
    return all(is_connected(g.without_edges([e for e in cut if e != f])) for f in cut)
