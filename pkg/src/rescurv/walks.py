"""Simple random walks: exact law evolution and Monte Carlo passage times.

Monte Carlo runs draw from counter-based Philox streams keyed by
``(seed, kind, x, y, block)``, so an estimate depends only on its arguments
and never on how blocks are scheduled across workers.
"""

from __future__ import annotations

import csv
import io
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .errors import BadParams, SameVertex
from .graph import Graph

BLOCK = 4096
_COMMUTE, _HITTING = 0, 1


@dataclass(frozen=True)
class WalkEstimate:
    mean: float
    stderr: float
    samples: int
    seed: int

    def within(self, target: float, k: float) -> bool:
        return abs(self.mean - target) <= k * self.stderr


@dataclass(frozen=True)
class MixingCurve:
    start: int
    laziness: float
    tv: np.ndarray

    def to_csv(self, bound_constant: float | None = None) -> str:
        """``t,tv,bound`` rows; ``bound`` is ``bound_constant / t`` when given."""
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["t", "tv", "bound"])
        for t, v in enumerate(self.tv):
            if bound_constant is None:
                b = ""
            elif t == 0:
                b = "inf"
            else:
                b = repr(bound_constant / t)
            w.writerow([t, repr(float(v)), b])
        return buf.getvalue()


def stationary(g: Graph) -> np.ndarray:
    return np.asarray(g.degree, dtype=np.float64) / (2 * g.m)


def transition_matrix(g: Graph, laziness: float = 0.0) -> np.ndarray:
    """Row-stochastic matrix of the (optionally lazy) simple random walk."""
    if not 0.0 <= laziness < 1.0:
        raise BadParams("laziness must lie in [0, 1)")
    p = g.adjacency() / np.asarray(g.degree, dtype=np.float64)[:, None]
    return laziness * np.eye(g.n) + (1.0 - laziness) * p


def tv_distance(p: np.ndarray, q: np.ndarray) -> np.ndarray:
    """Total variation along the last axis."""
    return 0.5 * np.abs(p - q).sum(axis=-1)


def tv_curve(g: Graph, x: int, T: int, laziness: float = 0.0) -> MixingCurve:
    """Exact ``d_TV(law of X_t from x, pi)`` for ``t = 0..T``."""
    if T < 0:
        raise BadParams("horizon must be nonnegative")
    P = transition_matrix(g, laziness)
    pi = stationary(g)
    law = np.zeros(g.n)
    law[x] = 1.0
    tv = np.empty(T + 1)
    tv[0] = tv_distance(law, pi)
    for t in range(1, T + 1):
        law = law @ P
        tv[t] = tv_distance(law, pi)
    return MixingCurve(x, laziness, tv)


def tv_curves(g: Graph, T: int, laziness: float = 0.0) -> np.ndarray:
    """Exact TV curves from every start at once; shape ``(T + 1, n)``."""
    if T < 0:
        raise BadParams("horizon must be nonnegative")
    P = transition_matrix(g, laziness)
    pi = stationary(g)
    laws = np.eye(g.n)
    out = np.empty((T + 1, g.n))
    out[0] = tv_distance(laws, pi)
    for t in range(1, T + 1):
        laws = laws @ P
        out[t] = tv_distance(laws, pi)
    return out


def _csr(g: Graph):
    deg = np.asarray(g.degree, dtype=np.int64)
    indptr = np.concatenate(([0], np.cumsum(deg)))
    indices = np.fromiter((w for nb in g.neighbors for w in nb), dtype=np.int64)
    return indptr, indices, deg


def _stream(seed: int, kind: int, x: int, y: int, block: int) -> np.random.Generator:
    ss = np.random.SeedSequence(seed, spawn_key=(kind, x, y, block))
    return np.random.Generator(np.random.Philox(ss))


def _passage_block(csr, route, start, count, rng) -> np.ndarray:
    """Steps for ``count`` walkers from ``start`` to visit ``route`` in order."""
    indptr, indices, deg = csr
    route = np.asarray(route, dtype=np.int64)
    pos = np.full(count, start, dtype=np.int64)
    leg = np.zeros(count, dtype=np.int64)
    steps = np.zeros(count, dtype=np.int64)
    live = np.arange(count)
    while live.size:
        cur = pos[live]
        u = rng.random(live.size)
        nxt = indices[indptr[cur] + (u * deg[cur]).astype(np.int64)]
        pos[live] = nxt
        steps[live] += 1
        hit = nxt == route[leg[live]]
        leg[live[hit]] += 1
        live = live[leg[live] < route.size]
    return steps


def _estimate(g, kind, x, y, route, samples, seed, workers) -> WalkEstimate:
    if x == y:
        raise SameVertex("start and target coincide")
    if samples < 1:
        raise BadParams("samples must be >= 1")
    for v in (x, y):
        if not 0 <= v < g.n:
            raise BadParams(f"vertex index {v} out of range")
    csr = _csr(g)
    sizes = [min(BLOCK, samples - b) for b in range(0, samples, BLOCK)]

    def run(b):
        return _passage_block(csr, route, x, sizes[b], _stream(seed, kind, x, y, b))

    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            parts = list(pool.map(run, range(len(sizes))))
    else:
        parts = [run(b) for b in range(len(sizes))]
    steps = np.concatenate(parts).astype(np.float64)
    stderr = float(steps.std(ddof=1) / np.sqrt(samples)) if samples > 1 else 0.0
    return WalkEstimate(float(steps.mean()), stderr, samples, seed)


def estimate_commute(
    g: Graph, x: int, y: int, samples: int, seed: int, workers: int = 1
) -> WalkEstimate:
    """Monte Carlo round trip ``x -> y -> x`` length."""
    return _estimate(g, _COMMUTE, x, y, (y, x), samples, seed, workers)


def estimate_hitting(
    g: Graph, x: int, y: int, samples: int, seed: int, workers: int = 1
) -> WalkEstimate:
    """Monte Carlo first passage time from ``x`` to ``y``."""
    return _estimate(g, _HITTING, x, y, (y,), samples, seed, workers)
