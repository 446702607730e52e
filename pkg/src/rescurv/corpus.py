"""Frozen test corpus: family instances plus seeded random connected graphs."""

from __future__ import annotations

import hashlib
import json

import numpy as np

from .families import FamilySpec, generate
from .graph import Graph

CORPUS_SEED = 20240521
RANDOM_COUNT = 200
RANDOM_MAX_N = 40

FAMILY_SPECS = (
    [FamilySpec("complete", (n,)) for n in range(2, 9)]
    + [FamilySpec("cycle", (n,)) for n in range(3, 13)]
    + [FamilySpec("path", (n,)) for n in range(2, 7)]
    + [FamilySpec("hypercube", (d,)) for d in range(1, 5)]
    + [FamilySpec("torus", p) for p in [(2, 3), (2, 4), (2, 5), (3, 3)]]
    + [FamilySpec("petersen"), FamilySpec("wagner")]
    + [FamilySpec("antiprism", (n,)) for n in range(3, 7)]
)


def random_connected_graph(rng: np.random.Generator, n: int, density: float) -> Graph:
    """Uniform random recursive tree on ``n`` vertices plus each remaining
    pair independently with probability ``density``."""
    order = rng.permutation(n)
    edges = set()
    for k in range(1, n):
        parent = order[rng.integers(0, k)]
        a, b = int(order[k]), int(parent)
        edges.add((min(a, b), max(a, b)))
    for i in range(n):
        for j in range(i + 1, n):
            if (i, j) not in edges and rng.random() < density:
                edges.add((i, j))
    return Graph.from_edges(sorted(edges), labels=list(range(n)))


def random_graphs(
    count: int = RANDOM_COUNT, seed: int = CORPUS_SEED, max_n: int = RANDOM_MAX_N, min_n: int = 4
) -> list[Graph]:
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        n = int(rng.integers(min_n, max_n + 1))
        # dense draws are needed to get positively curved samples
        if rng.random() < 0.4:
            density = float(rng.uniform(0.0, 0.3))
        else:
            density = float(rng.uniform(0.6, 0.98))
        out.append(random_connected_graph(rng, n, density))
    return out


def corpus() -> list[tuple[str, Graph]]:
    items = [(str(s), generate(s)) for s in FAMILY_SPECS]
    items += [(f"random[{i}]", g) for i, g in enumerate(random_graphs())]
    return items


def digest(items: list[tuple[str, Graph]]) -> str:
    h = hashlib.sha256()
    for name, g in items:
        h.update(json.dumps([name, g.to_json()], sort_keys=True).encode())
    return h.hexdigest()
