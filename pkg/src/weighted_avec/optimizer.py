"""Numerical search for avec_min / avec_max over normalized weightings.

Neither search assumes any closed form; both only evaluate avec. The grid
search enumerates every lattice point of the scaled simplex
``{w >= 0 : sum(w) = m}`` with step ``m / r``. The local search runs
pairwise mass transfers from random starting points.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .errors import TooManyEdges
from .graph import Graph, WeightFunction, make_weights, require_connected
from .metrics import avec, avec_dense

MAX_LATTICE_POINTS = 2_000_000


@dataclass(frozen=True)
class OptimizationResult:
    best_value: float
    best_weights: WeightFunction
    evaluations: int
    method: str
    direction: str
    trace: tuple[float, ...] = field(default=(), repr=False)


def _sign(direction: str) -> float:
    if direction == "min":
        return 1.0
    if direction == "max":
        return -1.0
    raise ValueError(f"direction must be 'min' or 'max', got {direction!r}")


def _finish(g, values, evaluations, method, direction, trace=()):
    values = np.asarray(values, dtype=float)
    values = values * (g.m / values.sum())
    w = make_weights(g, values.tolist())
    return OptimizationResult(avec(g, w), w, evaluations, method, direction, tuple(trace))


def lattice_size(m: int, r: int) -> int:
    return math.comb(r + m - 1, m - 1)


def compositions(total: int, parts: int):
    """All tuples of ``parts`` nonnegative ints summing to ``total`` (stars and bars)."""
    for bars in combinations(range(total + parts - 1), parts - 1):
        prev = -1
        out = []
        for b in bars:
            out.append(b - prev - 1)
            prev = b
        out.append(total + parts - 1 - prev - 1)
        yield out


def grid_search(g: Graph, direction: str, resolution: int) -> OptimizationResult:
    sign = _sign(direction)
    require_connected(g)
    if resolution < 1:
        raise ValueError("resolution must be >= 1")
    if lattice_size(g.m, resolution) > MAX_LATTICE_POINTS:
        raise TooManyEdges(
            f"{lattice_size(g.m, resolution)} lattice points for m={g.m}, r={resolution}"
        )
    step = g.m / resolution
    best, best_k, evals = math.inf, None, 0
    for k in compositions(resolution, g.m):
        f = sign * avec_dense(g, [step * x for x in k])
        evals += 1
        if f < best:
            best, best_k = f, k
    return _finish(g, [step * x for x in best_k], evals, "grid", direction)


def random_simplex_point(rng: np.random.Generator, m: int) -> np.ndarray:
    x = rng.exponential(size=m)
    return x * (m / x.sum())


def _descend(g, w, sign, min_delta, trace):
    f = sign * avec_dense(g, w)
    evals = 1
    delta = g.m / 4
    while delta >= min_delta:
        improved = False
        for a in range(g.m):
            for b in range(g.m):
                if a == b or w[a] <= 0.0:
                    continue
                step = min(delta, w[a])
                cand = w.copy()
                cand[a] -= step
                cand[b] += step
                fc = sign * avec_dense(g, cand)
                evals += 1
                if fc < f - 1e-13 * max(1.0, abs(f)):
                    w, f = cand, fc
                    improved = True
                    if trace is not None:
                        trace.append(sign * f)
        if not improved:
            delta /= 2
    return w, f, evals


def local_search(
    g: Graph,
    direction: str,
    restarts: int = 20,
    seed: int = 0,
    record_trace: bool = False,
) -> OptimizationResult:
    """Best of ``restarts`` descents, each from an exponential-draw simplex point.

    A descent tries moving ``delta`` units from edge a to edge b for every
    ordered pair, accepts strict improvements, and halves ``delta`` after a
    sweep with no improvement, stopping once ``delta < 1e-6 * m``.
    """
    sign = _sign(direction)
    require_connected(g)
    if restarts < 1:
        raise ValueError("restarts must be >= 1")
    rng = np.random.default_rng(seed)
    best_w, best_f, evals = None, math.inf, 0
    trace: list[float] | None = [] if record_trace else None
    for _ in range(restarts):
        w0 = random_simplex_point(rng, g.m)
        w, f, k = _descend(g, w0, sign, 1e-6 * g.m, trace)
        evals += k
        if f < best_f:
            best_w, best_f = w, f
    return _finish(g, best_w, evals, "local_search", direction, trace or ())
