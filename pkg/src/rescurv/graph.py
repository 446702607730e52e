"""Simple undirected connected graphs and their combinatorial queries.

Vertices are dense indices ``0..n-1``; the original tokens are kept in
``Graph.labels`` so that reports can speak in the caller's vocabulary.
"""

from __future__ import annotations

import io
import json
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Hashable, Iterable, Sequence, TextIO

import numpy as np

from .errors import (
    Disconnected,
    DuplicateEdge,
    EmptyInput,
    GraphError,
    MalformedLine,
    SelfLoop,
)


@dataclass(frozen=True)
class Graph:
    """Immutable simple connected graph.

    Build instances with :meth:`from_edges` or :func:`parse_edge_list`; the
    raw constructor trusts its arguments.
    """

    n: int
    edges: frozenset[tuple[int, int]]
    labels: tuple[str, ...]
    degree: tuple[int, ...] = field(compare=False)

    @classmethod
    def from_edges(
        cls,
        edges: Iterable[tuple[Hashable, Hashable]],
        labels: Sequence[Hashable] | None = None,
    ) -> "Graph":
        """Validate ``edges`` and build a graph.

        Without ``labels`` vertex tokens are indexed by first appearance.
        With ``labels``, endpoints must be members of ``labels`` and every
        listed vertex is kept, so isolated labels make the graph disconnected.
        """
        index: dict[Hashable, int] = {}
        if labels is not None:
            for tok in labels:
                if tok in index:
                    raise GraphError(f"duplicate label {tok!r}")
                index[tok] = len(index)
        pairs = []
        seen = set()
        for u, v in edges:
            for tok in (u, v):
                if tok not in index:
                    if labels is not None:
                        raise GraphError(f"unknown vertex {tok!r}")
                    index[tok] = len(index)
            i, j = index[u], index[v]
            if i == j:
                raise SelfLoop(f"self-loop at {u!r}")
            key = (min(i, j), max(i, j))
            if key in seen:
                raise DuplicateEdge(f"duplicate edge {u!r} {v!r}")
            seen.add(key)
            pairs.append(key)
        return cls._build(len(index), pairs, [str(t) for t in index])

    @classmethod
    def _build(cls, n, pairs, labels) -> "Graph":
        if n == 0:
            raise EmptyInput("graph has no vertices")
        deg = [0] * n
        for i, j in pairs:
            deg[i] += 1
            deg[j] += 1
        g = cls(n, frozenset(pairs), tuple(labels), tuple(deg))
        if n > 1 and not g.is_connected():
            raise Disconnected(f"graph has {len(g.components())} components")
        if n == 1:
            raise Disconnected("a single vertex has no resistance structure")
        return g

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def max_degree(self) -> int:
        return max(self.degree)

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for i, j in self.edges:
            adj[i].append(j)
            adj[j].append(i)
        return tuple(tuple(sorted(a)) for a in adj)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def adjacency(self) -> np.ndarray:
        a = np.zeros((self.n, self.n))
        for i, j in self.edges:
            a[i, j] = a[j, i] = 1.0
        return a

    def components(self, removed: Iterable[int] = ()) -> list[list[int]]:
        """Connected components of the graph with ``removed`` vertices deleted."""
        gone = set(removed)
        seen = [False] * self.n
        out = []
        for s in range(self.n):
            if seen[s] or s in gone:
                continue
            comp = [s]
            seen[s] = True
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for w in self.neighbors[u]:
                    if not seen[w] and w not in gone:
                        seen[w] = True
                        comp.append(w)
                        queue.append(w)
            out.append(comp)
        return out

    def is_connected(self) -> bool:
        return len(self.components()) == 1

    def with_edge(self, i: int, j: int) -> "Graph":
        """Return a copy with edge ``(i, j)`` added (indices, not labels)."""
        if i == j:
            raise SelfLoop(f"self-loop at {self.labels[i]!r}")
        key = (min(i, j), max(i, j))
        if key in self.edges:
            raise DuplicateEdge(f"edge {key} already present")
        return Graph._build(self.n, [*self.edges, key], self.labels)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "labels": list(self.labels),
            "edges": [list(e) for e in self.sorted_edges()],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Graph":
        n = int(data["n"])
        labels = data.get("labels") or [str(i) for i in range(n)]
        if len(labels) != n:
            raise GraphError("label count does not match n")
        pairs = []
        seen = set()
        for i, j in data["edges"]:
            i, j = int(i), int(j)
            if not (0 <= i < n and 0 <= j < n):
                raise GraphError(f"edge ({i}, {j}) out of range")
            if i == j:
                raise SelfLoop(f"self-loop at index {i}")
            key = (min(i, j), max(i, j))
            if key in seen:
                raise DuplicateEdge(f"duplicate edge {key}")
            seen.add(key)
            pairs.append(key)
        return cls._build(n, pairs, [str(t) for t in labels])


def parse_edge_list(source: str | TextIO) -> Graph:
    """Parse whitespace-separated edge-list text.

    Each non-blank line holds two vertex tokens; ``#`` starts a comment.
    Errors carry the offending line number.
    """
    stream = io.StringIO(source) if isinstance(source, str) else source
    index: dict[str, int] = {}
    pairs: list[tuple[int, int]] = []
    first_line: dict[tuple[int, int], int] = {}
    for lineno, raw in enumerate(stream, start=1):
        text = raw.split("#", 1)[0].strip()
        if not text:
            continue
        toks = text.split()
        if len(toks) != 2:
            raise MalformedLine(f"expected 2 tokens, got {len(toks)}", lineno)
        u, v = toks
        if u == v:
            raise SelfLoop(f"self-loop at {u!r}", lineno)
        for tok in toks:
            if tok not in index:
                index[tok] = len(index)
        i, j = index[u], index[v]
        key = (min(i, j), max(i, j))
        if key in first_line:
            raise DuplicateEdge(
                f"edge {u} {v} repeats line {first_line[key]}", lineno
            )
        first_line[key] = lineno
        pairs.append(key)
    if not pairs:
        raise EmptyInput("no edges found")
    return Graph._build(len(index), pairs, list(index))


def render_edge_list(g: Graph) -> str:
    # ordering by larger endpoint first keeps indices stable on re-parse
    # whenever every vertex has a lower-indexed neighbour
    order = sorted(g.edges, key=lambda e: (e[1], e[0]))
    return "".join(f"{g.labels[i]} {g.labels[j]}\n" for i, j in order)


def dumps_json(g: Graph) -> str:
    return json.dumps(g.to_json())


def laplacian(g: Graph) -> np.ndarray:
    """Kirchhoff Laplacian ``D - A`` as a dense float array."""
    lap = -g.adjacency()
    lap[np.diag_indices(g.n)] = g.degree
    return lap


@dataclass(frozen=True)
class DistanceTable:
    dist: np.ndarray
    diameter: int


def bfs_distances(g: Graph) -> DistanceTable:
    """All-pairs hop distances by one BFS per source."""
    dist = np.full((g.n, g.n), -1, dtype=np.int64)
    for s in range(g.n):
        row = dist[s]
        row[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.neighbors[u]:
                if row[w] < 0:
                    row[w] = row[u] + 1
                    queue.append(w)
    return DistanceTable(dist, int(dist.max()))


def is_bipartite(g: Graph) -> tuple[bool, list[int] | None]:
    """Return ``(True, colouring)`` for bipartite graphs, else ``(False, None)``."""
    color = [-1] * g.n
    color[0] = 0
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w in g.neighbors[u]:
            if color[w] < 0:
                color[w] = 1 - color[u]
                queue.append(w)
            elif color[w] == color[u]:
                return False, None
    return True, color
