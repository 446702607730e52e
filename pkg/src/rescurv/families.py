"""Named graph families and their exact curvature values."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .errors import BadParams, NoClosedForm
from .graph import Graph

KINDS = ("complete", "cycle", "path", "hypercube", "torus", "petersen", "wagner", "antiprism")

_ARITY = {
    "complete": 1, "cycle": 1, "path": 1, "hypercube": 1,
    "torus": 2, "petersen": 0, "wagner": 0, "antiprism": 1,
}
_MINIMA = {
    "complete": (2,), "cycle": (3,), "path": (2,), "hypercube": (1,),
    "torus": (2, 3), "antiprism": (3,),
}


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: tuple[int, ...] = ()

    def __post_init__(self):
        if self.kind not in KINDS:
            raise BadParams(f"unknown family {self.kind!r}; choose from {', '.join(KINDS)}")
        if len(self.params) != _ARITY[self.kind]:
            raise BadParams(f"{self.kind} takes {_ARITY[self.kind]} parameter(s)")
        for p, lo in zip(self.params, _MINIMA.get(self.kind, ())):
            if not isinstance(p, int) or p < lo:
                raise BadParams(f"{self.kind} parameters must be integers >= {_MINIMA[self.kind]}")

    @classmethod
    def parse(cls, kind: str, *params) -> "FamilySpec":
        try:
            ints = tuple(int(p) for p in params)
        except ValueError:
            raise BadParams(f"non-integer parameter in {params!r}") from None
        return cls(kind, ints)

    def __str__(self):
        if not self.params:
            return self.kind
        return f"{self.kind}({', '.join(map(str, self.params))})"


def _cycle_edges(vertices):
    k = len(vertices)
    return [(vertices[i], vertices[(i + 1) % k]) for i in range(k)]


def generate(spec: FamilySpec) -> Graph:
    kind, p = spec.kind, spec.params
    if kind == "complete":
        n = p[0]
        labels = [str(i) for i in range(n)]
        edges = [(str(i), str(j)) for i, j in itertools.combinations(range(n), 2)]
    elif kind == "cycle":
        labels = [str(i) for i in range(p[0])]
        edges = _cycle_edges(labels)
    elif kind == "path":
        labels = [str(i) for i in range(p[0])]
        edges = list(zip(labels, labels[1:]))
    elif kind == "hypercube":
        d = p[0]
        labels = [format(v, f"0{d}b") for v in range(2 ** d)]
        edges = [
            (labels[v], labels[v ^ (1 << b)])
            for v in range(2 ** d)
            for b in range(d)
            if v < v ^ (1 << b)
        ]
    elif kind == "torus":
        d, n = p
        cells = list(itertools.product(range(n), repeat=d))
        name = {c: "_".join(map(str, c)) for c in cells}
        labels = [name[c] for c in cells]
        edges = []
        for c in cells:
            for axis in range(d):
                nxt = list(c)
                nxt[axis] = (c[axis] + 1) % n
                edges.append((name[c], name[tuple(nxt)]))
    elif kind == "petersen":
        labels = [f"o{i}" for i in range(5)] + [f"i{i}" for i in range(5)]
        edges = _cycle_edges(labels[:5])
        edges += [(f"i{i}", f"i{(i + 2) % 5}") for i in range(5)]
        edges += [(f"o{i}", f"i{i}") for i in range(5)]
    elif kind == "wagner":
        labels = [str(i) for i in range(8)]
        edges = _cycle_edges(labels) + [(str(i), str(i + 4)) for i in range(4)]
    elif kind == "antiprism":
        n = p[0]
        top = [f"a{i}" for i in range(n)]
        bottom = [f"b{i}" for i in range(n)]
        labels = top + bottom
        edges = _cycle_edges(top) + _cycle_edges(bottom)
        edges += [(top[i], bottom[i]) for i in range(n)]
        edges += [(top[i], bottom[(i + 1) % n]) for i in range(n)]
    else:  # pragma: no cover - guarded by FamilySpec
        raise BadParams(kind)
    return Graph.from_edges(edges, labels=labels)


def vertex_count(spec: FamilySpec) -> int:
    kind, p = spec.kind, spec.params
    return {
        "complete": lambda: p[0],
        "cycle": lambda: p[0],
        "path": lambda: p[0],
        "hypercube": lambda: 2 ** p[0],
        "torus": lambda: p[1] ** p[0],
        "petersen": lambda: 10,
        "wagner": lambda: 8,
        "antiprism": lambda: 2 * p[0],
    }[kind]()


def edge_count(spec: FamilySpec) -> int:
    kind, p = spec.kind, spec.params
    return {
        "complete": lambda: p[0] * (p[0] - 1) // 2,
        "cycle": lambda: p[0],
        "path": lambda: p[0] - 1,
        "hypercube": lambda: p[0] * 2 ** (p[0] - 1),
        "torus": lambda: p[0] * p[1] ** p[0],
        "petersen": lambda: 15,
        "wagner": lambda: 12,
        "antiprism": lambda: 4 * p[0],
    }[kind]()


@dataclass(frozen=True)
class ThetaDescriptor:
    """An order-of-magnitude claim ``K = Theta(scale(n))`` with unknown constant."""

    expression: str
    scale: Callable[[int], float]

    def ratio(self, value: float, n: int) -> float:
        return value / self.scale(n)


def oracle_curvature(spec: FamilySpec) -> Fraction | ThetaDescriptor:
    """Exact constant curvature for complete graphs, cycles and hypercubes.

    Tori only get a :class:`ThetaDescriptor`; other families have no closed
    form and raise :class:`NoClosedForm`.
    """
    kind, p = spec.kind, spec.params
    if kind == "complete":
        return Fraction(p[0], 2 * p[0] - 2)
    if kind == "cycle":
        return Fraction(6, p[0] ** 2 - 1)
    if kind == "hypercube":
        d = p[0]
        return 1 / sum(Fraction(math.comb(d, k), k) for k in range(1, d + 1))
    if kind == "torus":
        d = p[0]
        if d == 2:
            return ThetaDescriptor("1/(n^2 ln n)", lambda n: 1.0 / (n * n * math.log(n)))
        return ThetaDescriptor(f"1/n^{d}", lambda n, d=d: float(n) ** -d)
    raise NoClosedForm(f"{kind} has no closed-form curvature")
