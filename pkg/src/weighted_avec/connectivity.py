"""Edge connectivity and minimum edge cuts by unit-capacity augmenting paths."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graph import Edge, Graph, require_connected


@dataclass(frozen=True)
class CutSet:
    edges: tuple[Edge, ...]
    source_side: frozenset

    @property
    def lam(self) -> int:
        return len(self.edges)


def max_flow(g: Graph, s: int, t: int) -> tuple[int, frozenset]:
    """Unit-capacity s-t max flow on an undirected graph.

    Returns the flow value and the set of vertices reachable from ``s`` in the
    final residual graph (the source side of a minimum s-t cut).
    """
    # flow[(u, v)] in {-1, 0, 1}, antisymmetric; residual capacity is 1 - flow
    flow: dict[tuple[int, int], int] = {}
    value = 0
    while True:
        parent = {s: None}
        queue = deque([s])
        while queue and t not in parent:
            u = queue.popleft()
            for v in g.adjacency[u]:
                if v not in parent and flow.get((u, v), 0) < 1:
                    parent[v] = u
                    queue.append(v)
        if t not in parent:
            return value, frozenset(parent)
        v = t
        while parent[v] is not None:
            u = parent[v]
            flow[(u, v)] = flow.get((u, v), 0) + 1
            flow[(v, u)] = flow.get((v, u), 0) - 1
            v = u
        value += 1


def min_edge_cut(g: Graph) -> CutSet:
    """Minimum edge cut from the scan s = 0, t = 1..n-1; the first minimum wins."""
    require_connected(g)
    best = None
    for t in range(1, g.n):
        value, side = max_flow(g, 0, t)
        if best is None or value < best[0]:
            best = (value, side)
    _, side = best
    crossing = tuple(e for e in g.edges if (e[0] in side) != (e[1] in side))
    return CutSet(crossing, side)


def edge_connectivity(g: Graph) -> int:
    require_connected(g)
    return min(max_flow(g, 0, t)[0] for t in range(1, g.n))
