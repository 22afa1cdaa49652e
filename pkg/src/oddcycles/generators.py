"""Deterministic graph families and seeded random ensembles."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .graph import Graph, GraphError


class BadParameterError(GraphError):
    pass


def complete(n: int) -> Graph:
    if n < 1:
        raise BadParameterError("complete graph needs n >= 1")
    return Graph(n, [[u for u in range(n) if u != v] for v in range(n)])


def complete_bipartite(a: int, b: int) -> Graph:
    """Sides ``0..a-1`` and ``a..a+b-1``."""
    if a < 1 or b < 1:
        raise BadParameterError("both sides need at least one vertex")
    return Graph.from_edges(a + b, ((u, a + v) for u in range(a) for v in range(b)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise BadParameterError("cycle needs n >= 3")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def path(n: int) -> Graph:
    if n < 1:
        raise BadParameterError("path needs n >= 1")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def theta(l1: int, l2: int, l3: int) -> Graph:
    """Hubs 0 and 1 joined by three internally disjoint paths."""
    lengths = (l1, l2, l3)
    if min(lengths) < 1 or lengths.count(1) > 1:
        raise BadParameterError("theta needs lengths >= 1 with at most one equal to 1")
    edges = []
    nxt = 2
    for ell in lengths:
        prev = 0
        for _ in range(ell - 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, 1))
    return Graph.from_edges(nxt, edges)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


@dataclass(frozen=True)
class BlowupSpec:
    base: Graph
    t: int

    def __post_init__(self):
        if self.t < 1:
            raise BadParameterError("part size must be >= 1")


def blowup(spec: BlowupSpec | Graph, t: int | None = None) -> Graph:
    """Vertex ``v`` becomes ``v*t .. v*t+t-1``; edges become ``K_{t,t}`` blocks."""
    if isinstance(spec, Graph):
        spec = BlowupSpec(spec, 1 if t is None else t)
    base, t = spec.base, spec.t
    edges = [(u * t + i, v * t + j) for u, v in base.edges() for i in range(t) for j in range(t)]
    return Graph.from_edges(base.n * t, edges)


def cut_vertex_odd_family(m: int, l: int) -> Graph:
    """``K_{m,m}`` and ``C_l`` glued at vertex 0; the only odd cycle is the ``C_l``.

    Vertex 0 is a cut vertex. The ring vertices keep degree 2, so this does
    not give large minimum degree together with a unique odd cycle.
    """
    if m < 2 or l < 3 or l % 2 == 0:
        raise BadParameterError("need m >= 2 and odd l >= 3")
    edges = [(u, m + v) for u in range(m) for v in range(m)]
    ring = [0] + list(range(2 * m, 2 * m + l - 1))
    edges += [(ring[i], ring[(i + 1) % l]) for i in range(l)]
    return Graph.from_edges(2 * m + l - 1, edges)


def gnp(n: int, p: float, seed: int) -> Graph:
    if n < 0 or not 0 <= p <= 1:
        raise BadParameterError("need n >= 0 and 0 <= p <= 1")
    rng = random.Random(seed)
    rows: list[list[int]] = [[] for _ in range(n)]
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                rows[u].append(v)
                rows[v].append(u)
    return Graph(n, rows)
