"""Simple undirected graphs, the standard families, and edge weightings.

Vertices are the integers ``0..n-1``. Edges are stored as sorted pairs
``(u, v)`` with ``u < v``, kept in ascending order so that every derived
quantity (weight vectors, spanning trees, cut scans) is deterministic.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .errors import (
    Disconnected,
    DomainMismatch,
    DuplicateEdge,
    EdgeNotInGraph,
    LoopEdge,
    NegativeWeight,
    NotNormalized,
    OrderTooSmall,
    ParseError,
    VertexOutOfRange,
)

Edge = tuple[int, int]

#: relative tolerance for the normalization check (scaled by m)
NORM_RTOL = 1e-9


def edge_key(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[Edge, ...]
    adjacency: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)
    _index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        object.__setattr__(self, "adjacency", tuple(tuple(sorted(a)) for a in adj))
        object.__setattr__(self, "_index", {e: i for i, e in enumerate(self.edges)})

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adjacency)

    def has_edge(self, u: int, v: int) -> bool:
        return edge_key(u, v) in self._index

    def edge_index(self, e: Edge) -> int:
        try:
            return self._index[edge_key(*e)]
        except KeyError:
            raise EdgeNotInGraph(f"edge {e} is not in the graph") from None

    def without_edges(self, removed: Iterable[Edge]) -> "Graph":
        drop = {edge_key(*e) for e in removed}
        return Graph(self.n, tuple(e for e in self.edges if e not in drop))


def make_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Validate an edge list and build a :class:`Graph`.

    Loops, repeated pairs (in either orientation) and endpoints outside
    ``0..n-1`` raise instead of being silently cleaned up.
    """
    if n < 0:
        raise VertexOutOfRange(f"negative order {n}")
    seen: set[Edge] = set()
    for pair in edges:
        u, v = (int(x) for x in pair)
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRange(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise LoopEdge(f"loop at vertex {u}")
        key = edge_key(u, v)
        if key in seen:
            raise DuplicateEdge(f"edge {key} listed twice")
        seen.add(key)
    return Graph(n, tuple(sorted(seen)))


def path_graph(n: int) -> Graph:
    if n < 2:
        raise OrderTooSmall("path needs n >= 2")
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(n: int) -> Graph:
    """Star with centre 0 and leaves ``1..n-1``."""
    if n < 3:
        raise OrderTooSmall("star needs n >= 3")
    return make_graph(n, [(0, i) for i in range(1, n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise OrderTooSmall("cycle needs n >= 3")
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise OrderTooSmall("complete graph needs n >= 1")
    return make_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def broom_graph(n: int) -> Graph:
    """Single broom: path a-b-c (vertices 0, 1, 2) with leaves ``3..n-1`` hung on c."""
    if n < 4:
        raise OrderTooSmall("broom needs n >= 4")
    return make_graph(n, [(0, 1), (1, 2)] + [(2, i) for i in range(3, n)])


GENERATORS = {
    "path": path_graph,
    "star": star_graph,
    "cycle": cycle_graph,
    "complete": complete_graph,
    "broom": broom_graph,
}


def generate(kind: str, n: int) -> Graph:
    try:
        gen = GENERATORS[kind]
    except KeyError:
        raise ValueError(f"unknown graph family {kind!r}; choose from {sorted(GENERATORS)}") from None
    return gen(n)


def complement(g: Graph) -> Graph:
    return Graph(
        g.n,
        tuple((i, j) for i in range(g.n) for j in range(i + 1, g.n) if not g.has_edge(i, j)),
    )


def components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in g.adjacency[u]:
                if not seen[v]:
                    seen[v] = True
                    comp.append(v)
                    queue.append(v)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    # the empty graph on zero vertices counts as connected, like one vertex
    return len(components(g)) <= 1


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and is_connected(g)


def require_connected(g: Graph) -> None:
    """Guard shared by every metric: connected and at least two vertices."""
    if g.n < 2:
        raise OrderTooSmall("metric operations need n >= 2")
    if not is_connected(g):
        raise Disconnected("graph is not connected")


def bfs_spanning_tree(g: Graph, root: int = 0) -> list[Edge]:
    """Tree edges of a breadth-first search from ``root``, neighbours in ascending order."""
    seen = [False] * g.n
    seen[root] = True
    queue = deque([root])
    tree = []
    while queue:
        u = queue.popleft()
        for v in g.adjacency[u]:
            if not seen[v]:
                seen[v] = True
                tree.append(edge_key(u, v))
                queue.append(v)
    return tree


@dataclass(frozen=True)
class TreeProfile:
    is_tree: bool
    t: int
    end_edges: frozenset = frozenset()
    internal_edges: frozenset = frozenset()

    @property
    def leaves(self) -> int:
        return self.t


def tree_profile(g: Graph) -> TreeProfile:
    if not is_connected(g):
        raise Disconnected("tree_profile needs a connected graph")
    if not is_tree(g):
        return TreeProfile(False, 0)
    leaves = {v for v in range(g.n) if g.degree(v) == 1}
    end = frozenset(e for e in g.edges if e[0] in leaves or e[1] in leaves)
    internal = frozenset(e for e in g.edges if e not in end)
    return TreeProfile(True, len(leaves), end, internal)


@dataclass(frozen=True)
class WeightFunction:
    """Nonnegative edge lengths aligned with ``graph.edges``."""

    graph: Graph
    values: tuple[float, ...]

    def __getitem__(self, e: Edge) -> float:
        return self.values[self.graph.edge_index(e)]

    @property
    def total(self) -> float:
        return math.fsum(self.values)

    def as_dict(self) -> dict[Edge, float]:
        return dict(zip(self.graph.edges, self.values))

    def is_normalized(self) -> bool:
        return abs(self.total - self.graph.m) <= NORM_RTOL * max(self.graph.m, 1)

    def scaled(self, c: float) -> "WeightFunction":
        return WeightFunction(self.graph, tuple(c * x for x in self.values))


def make_weights(
    g: Graph,
    assignment: Mapping[Edge, float] | Sequence[float],
    require_normalized: bool = True,
) -> WeightFunction:
    """Build a weighting of ``g``.

    ``assignment`` is either a mapping keyed by edges (either orientation)
    or a sequence aligned with ``g.edges``. The domain must be exactly E(g).
    """
    if isinstance(assignment, Mapping):
        values = [None] * g.m
        for e, x in assignment.items():
            key = edge_key(*e)
            if key not in g._index:
                raise DomainMismatch(f"weight given for non-edge {key}")
            idx = g._index[key]
            if values[idx] is not None:
                raise DomainMismatch(f"edge {key} weighted twice")
            values[idx] = float(x)
        missing = [g.edges[i] for i, x in enumerate(values) if x is None]
        if missing:
            raise DomainMismatch(f"no weight for edges {missing}")
    else:
        values = [float(x) for x in assignment]
        if len(values) != g.m:
            raise DomainMismatch(f"expected {g.m} weights, got {len(values)}")
    for e, x in zip(g.edges, values):
        if not x >= 0.0 or math.isinf(x):
            raise NegativeWeight(f"edge {e} has invalid weight {x}")
    w = WeightFunction(g, tuple(values))
    if require_normalized and not w.is_normalized():
        raise NotNormalized(f"weights sum to {w.total!r}, expected m = {g.m}")
    return w


def ones(g: Graph) -> WeightFunction:
    return WeightFunction(g, (1.0,) * g.m)


# -- edge-list text format -------------------------------------------------


def parse_edge_list(text: str) -> tuple[Graph, WeightFunction]:
    """Parse ``n m`` followed by ``m`` lines ``u v [w]`` (``w`` defaults to 1.0).

    Blank lines and ``#`` comments are ignored. The returned weighting is not
    checked for normalization; callers decide.
    """
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ParseError("empty edge list")
    try:
        n, m = (int(x) for x in lines[0].split())
    except ValueError:
        raise ParseError(f"bad header {lines[0]!r}; expected 'n m'") from None
    body = lines[1:]
    if len(body) != m:
        raise ParseError(f"header announces {m} edges, found {len(body)}")
    pairs, weights = [], {}
    for ln in body:
        parts = ln.split()
        if len(parts) not in (2, 3):
            raise ParseError(f"bad edge line {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
            x = float(parts[2]) if len(parts) == 3 else 1.0
        except ValueError:
            raise ParseError(f"bad edge line {ln!r}") from None
        pairs.append((u, v))
        weights[edge_key(u, v)] = x
    g = make_graph(n, pairs)
    return g, make_weights(g, weights, require_normalized=False)


def parse_weights(g: Graph, text: str) -> WeightFunction:
    """Parse a weights file of ``u v w`` lines for an existing graph (unnormalized allowed)."""
    assignment = {}
    for ln in text.splitlines():
        ln = ln.split("#", 1)[0].strip()
        if not ln:
            continue
        parts = ln.split()
        if len(parts) != 3:
            raise ParseError(f"bad weight line {ln!r}; expected 'u v w'")
        try:
            e = edge_key(int(parts[0]), int(parts[1]))
            x = float(parts[2])
        except ValueError:
            raise ParseError(f"bad weight line {ln!r}") from None
        if e in assignment:
            raise ParseError(f"edge {e} weighted twice")
        assignment[e] = x
    return make_weights(g, assignment, require_normalized=False)


def format_edge_list(g: Graph, w: WeightFunction | None = None) -> str:
    out = [f"{g.n} {g.m}"]
    for i, (u, v) in enumerate(g.edges):
        out.append(f"{u} {v}" if w is None else f"{u} {v} {w.values[i]!r}")
    return "\n".join(out) + "\n"


def format_weights(w: WeightFunction) -> str:
    # repr round-trips floats exactly
    return "".join(f"{u} {v} {x!r}\n" for (u, v), x in zip(w.graph.edges, w.values))
