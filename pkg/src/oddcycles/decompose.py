"""Preprocessing pipeline feeding the extractor.

Bipartition by local search, BFS layering of the cut subgraph, the odd base
cycle closed by a monochromatic edge, the densest pair of consecutive
layers, a long cycle with a chord inside it, and the Steiner subtree of the
BFS tree spanning the cycle's low-layer vertices.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from fractions import Fraction
from typing import Iterable, Sequence

from .graph import Graph, GraphError, InducedSubgraph, induced_subgraph
from .invariants import DisconnectedError, is_connected


class GraphIsBipartiteError(GraphError):
    pass


class NotBipartiteLayeringError(GraphError):
    pass


class YNotEvenLayerError(GraphError):
    pass


class NotAnEdgeError(GraphError):
    pass


class SingleLayerError(GraphError):
    pass


class NoChordFoundError(GraphError):
    pass


class TooSparseError(GraphError):
    pass


class TooFewLeavesError(GraphError):
    pass


class MixedLayersError(GraphError):
    pass


@dataclass(frozen=True)
class Bipartition:
    side: tuple[int, ...]
    cut_edges: int

    def cut_graph(self, g: Graph) -> Graph:
        """Spanning subgraph of bichromatic edges."""
        side = self.side
        return Graph(g.n, [[u for u in g.neighbors(v) if side[u] != side[v]] for v in range(g.n)])


def local_search_bipartition(g: Graph, initial: Sequence[int] | None = None) -> Bipartition:
    """Locally optimal cut whose cut subgraph is spanning and connected.

    Two moves, each strictly increasing the cut: flipping a vertex with more
    same-side than cross neighbours, and flipping a whole component of the
    cut subgraph that touches another component through a host edge.
    """
    if not is_connected(g):
        raise DisconnectedError("local_search_bipartition needs a connected graph")
    n = g.n
    if initial is not None:
        if len(initial) != n:
            raise GraphError("initial assignment has wrong length")
        side = [1 if s else 0 for s in initial]
    else:
        # greedy start: oppose the majority of already-placed neighbours
        side = [0] * n
        placed = [False] * n
        for v in range(n):
            ones = zeros = 0
            for u in g.neighbors(v):
                if placed[u]:
                    if side[u]:
                        ones += 1
                    else:
                        zeros += 1
            side[v] = 1 if zeros > ones else 0
            placed[v] = True

    same = [0] * n
    for v in range(n):
        sv = side[v]
        same[v] = sum(1 for u in g.neighbors(v) if side[u] == sv)

    while True:
        _flip_until_stable(g, side, same)
        comp = _cut_components(g, side)
        bridge = None
        for u, v in g.edges():
            if comp[u] != comp[v]:
                bridge = (u, v)
                break
        if bridge is None:
            break
        target = comp[bridge[1]]
        for v in range(n):
            if comp[v] == target:
                side[v] ^= 1
        for v in range(n):
            sv = side[v]
            same[v] = sum(1 for u in g.neighbors(v) if side[u] == sv)

    cut = sum(1 for u, v in g.edges() if side[u] != side[v])
    return Bipartition(tuple(side), cut)


def _flip_until_stable(g: Graph, side: list[int], same: list[int]) -> None:
    queue = deque(v for v in range(g.n) if 2 * same[v] > g.degree(v))
    queued = [False] * g.n
    for v in queue:
        queued[v] = True
    while queue:
        v = queue.popleft()
        queued[v] = False
        deg = g.degree(v)
        if 2 * same[v] <= deg:
            continue
        old = side[v]
        side[v] ^= 1
        same[v] = deg - same[v]
        for u in g.neighbors(v):
            if side[u] == old:
                same[u] -= 1
            else:
                same[u] += 1
                if 2 * same[u] > g.degree(u) and not queued[u]:
                    queued[u] = True
                    queue.append(u)


def _cut_components(g: Graph, side: list[int]) -> list[int]:
    comp = [-1] * g.n
    label = 0
    for s in range(g.n):
        if comp[s] >= 0:
            continue
        comp[s] = label
        stack = [s]
        while stack:
            v = stack.pop()
            for u in g.neighbors(v):
                if comp[u] < 0 and side[u] != side[v]:
                    comp[u] = label
                    stack.append(u)
        label += 1
    return comp


def find_odd_closure_edge(g: Graph, b: Bipartition) -> tuple[int, int]:
    """Lexicographically smallest monochromatic edge ``(x, y)``, ``x < y``."""
    for u, v in g.edges():
        if b.side[u] == b.side[v]:
            return (u, v)
    raise GraphIsBipartiteError("every edge crosses the bipartition")


@dataclass(frozen=True)
class BfsLayering:
    root: int
    parent: tuple[int, ...]  # -1 at the root
    depth: tuple[int, ...]
    layers: tuple[tuple[int, ...], ...]

    def path_to_root(self, v: int) -> list[int]:
        path = [v]
        while self.parent[path[-1]] >= 0:
            path.append(self.parent[path[-1]])
        return path

    def is_ancestor(self, a: int, v: int) -> bool:
        """True when ``a`` lies on the tree path from ``v`` to the root."""
        if self.depth[a] > self.depth[v]:
            return False
        while self.depth[v] > self.depth[a]:
            v = self.parent[v]
        return v == a

    def lca(self, a: int, b: int) -> int:
        while self.depth[a] > self.depth[b]:
            a = self.parent[a]
        while self.depth[b] > self.depth[a]:
            b = self.parent[b]
        while a != b:
            a, b = self.parent[a], self.parent[b]
        return a

    def tree_path(self, a: int, b: int) -> list[int]:
        """Vertices of the tree path from ``a`` to ``b``."""
        c = self.lca(a, b)
        up = [a]
        while up[-1] != c:
            up.append(self.parent[up[-1]])
        down = [b]
        while down[-1] != c:
            down.append(self.parent[down[-1]])
        return up + down[-2::-1]


def bfs_layering(gb: Graph, root: int) -> BfsLayering:
    n = gb.n
    parent = [-1] * n
    depth = [-1] * n
    depth[root] = 0
    layers: list[list[int]] = [[root]]
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for u in gb.neighbors(v):
            if depth[u] < 0:
                depth[u] = depth[v] + 1
                parent[u] = v
                if depth[u] == len(layers):
                    layers.append([])
                layers[depth[u]].append(u)
                queue.append(u)
            elif depth[u] == depth[v]:
                raise NotBipartiteLayeringError(f"edge ({v}, {u}) inside layer {depth[v]}")
    if any(d < 0 for d in depth):
        raise DisconnectedError("cut subgraph is not connected")
    return BfsLayering(root, tuple(parent), tuple(depth), tuple(tuple(sorted(layer)) for layer in layers))


def base_odd_cycle(g: Graph, layering: BfsLayering, edge: tuple[int, int]) -> tuple[int, ...]:
    """Tree path from the root ``x`` to ``y`` closed by the host edge ``xy``.

    Returned as the vertex sequence ``x, ..., y``; the closing edge is implicit.
    """
    u, v = edge
    if not g.has_edge(u, v):
        raise NotAnEdgeError(f"({u}, {v}) is not an edge")
    if u == layering.root:
        y = v
    elif v == layering.root:
        y = u
    else:
        raise NotAnEdgeError(f"edge ({u}, {v}) does not touch the root {layering.root}")
    dy = layering.depth[y]
    if dy < 2 or dy % 2:
        raise YNotEvenLayerError(f"{y} lies in layer {dy}")
    return tuple(reversed(layering.path_to_root(y)))


@dataclass(frozen=True)
class DenseLayerPair:
    index: int
    layer_graph: InducedSubgraph
    average: Fraction
    edges: int


def densest_layer_pair(layering: BfsLayering, gb: Graph) -> DenseLayerPair:
    layers = layering.layers
    if len(layers) < 2:
        raise SingleLayerError("layering has a single layer")
    depth = layering.depth
    best_i, best_avg, best_e = -1, Fraction(-1), 0
    for i in range(len(layers) - 1):
        e = sum(1 for v in layers[i + 1] for u in gb.neighbors(v) if depth[u] == i)
        avg = Fraction(2 * e, len(layers[i]) + len(layers[i + 1]))
        if avg > best_avg:
            best_i, best_avg, best_e = i, avg, e
    sub = induced_subgraph(gb, layers[best_i] + layers[best_i + 1])
    return DenseLayerPair(best_i, sub, best_avg, best_e)


@dataclass(frozen=True)
class ChordedCycle:
    """A cycle (cyclic vertex order) together with one designated chord."""

    vertices: tuple[int, ...]
    chord: tuple[int, int]
    core_min_degree: int | None = field(default=None, compare=False)

    def __post_init__(self):
        n = len(self.vertices)
        if n < 4:
            raise GraphError("a chorded cycle needs at least 4 vertices")
        if len(set(self.vertices)) != n:
            raise GraphError("cycle repeats a vertex")
        pos = self.position
        a, b = self.chord
        if a not in pos or b not in pos:
            raise GraphError("chord endpoints must lie on the cycle")
        gap = (pos[a] - pos[b]) % n
        if gap in (0, 1, n - 1):
            raise GraphError("chord joins consecutive cycle vertices")

    @property
    def length(self) -> int:
        return len(self.vertices)

    @cached_property
    def position(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    def colour(self, v: int) -> int:
        """Parity class of ``v`` along the cycle."""
        return self.position[v] % 2

    @property
    def two_colouring(self) -> tuple[frozenset[int], frozenset[int]]:
        return (frozenset(self.vertices[0::2]), frozenset(self.vertices[1::2]))

    @property
    def is_bipartite(self) -> bool:
        """Whether cycle plus chord is bipartite."""
        if self.length % 2:
            return False
        pos = self.position
        return (pos[self.chord[0]] - pos[self.chord[1]]) % 2 == 1

    def relabel(self, mapping: Sequence[int]) -> ChordedCycle:
        return ChordedCycle(
            tuple(mapping[v] for v in self.vertices),
            (mapping[self.chord[0]], mapping[self.chord[1]]),
            self.core_min_degree,
        )

    def validate(self, g: Graph) -> bool:
        vs = self.vertices
        return all(g.has_edge(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))) and g.has_edge(*self.chord)


def peel(g: Graph, threshold: int) -> set[int]:
    """Vertices surviving repeated deletion of vertices with degree < threshold."""
    deg = [g.degree(v) for v in range(g.n)]
    alive = [True] * g.n
    stack = [v for v in range(g.n) if deg[v] < threshold]
    for v in stack:
        alive[v] = False
    while stack:
        v = stack.pop()
        for u in g.neighbors(v):
            if alive[u]:
                deg[u] -= 1
                if deg[u] < threshold:
                    alive[u] = False
                    stack.append(u)
    return {v for v in range(g.n) if alive[v]}


def chorded_cycle(layer_graph: Graph, min_len: int = 4, max_starts: int = 16) -> ChordedCycle:
    """Long cycle with a chord via peeling plus maximal-path closure.

    The core keeps vertices of degree at least ``ceil(avg / 2)``. A path is
    grown greedily and, when stuck, rotated until its end has all neighbours
    on the path; closing at the farthest such neighbour gives a cycle of
    length at least ``deg(end) + 1`` with a chord to any other neighbour.
    Up to ``max_starts`` start vertices are tried (stopping early once
    ``min_len`` is reached) and the longest cycle wins.
    """
    if layer_graph.m == 0 or layer_graph.n < 4:
        raise TooSparseError("layer graph has no room for a chorded cycle")
    avg = Fraction(2 * layer_graph.m, layer_graph.n)
    half = -(-avg.numerator // (2 * avg.denominator))
    # a chord needs an end vertex of degree >= 3
    core = peel(layer_graph, max(3, half))
    if not core:
        raise NoChordFoundError("no subgraph of minimum degree 3")
    sub = induced_subgraph(layer_graph, core)
    h = sub.graph
    delta = h.min_degree()

    best_cyc: tuple[int, ...] = ()
    best_chord = (-1, -1)
    for start in range(min(max_starts, h.n)):
        cyc, chord = _close_maximal_path(h, start)
        if len(cyc) > len(best_cyc) or (len(cyc) == len(best_cyc) and cyc < best_cyc):
            best_cyc, best_chord = cyc, chord
        if len(best_cyc) >= min_len:
            break
    mapping = sub.to_host
    return ChordedCycle(
        tuple(mapping[v] for v in best_cyc), (mapping[best_chord[0]], mapping[best_chord[1]]), delta
    )


def _close_maximal_path(h: Graph, start: int) -> tuple[tuple[int, ...], tuple[int, int]]:
    path = [start]
    index = {start: 0}
    rotations = 0
    while True:
        end = path[-1]
        nxt = next((u for u in h.neighbors(end) if u not in index), None)
        if nxt is not None:
            index[nxt] = len(path)
            path.append(nxt)
            continue
        # Posa rotation: end ~ path[i] makes path[i+1] a new end
        if rotations < len(path):
            rotated = False
            for u in h.neighbors(end):
                i = index[u]
                if i >= len(path) - 2:
                    continue
                cand = path[i + 1]
                if any(w not in index for w in h.neighbors(cand)):
                    path[i + 1:] = path[:i:-1]
                    for j in range(i + 1, len(path)):
                        index[path[j]] = j
                    rotations += 1
                    rotated = True
                    break
            if rotated:
                continue
        break
    end = path[-1]
    nbr_idx = sorted(index[u] for u in h.neighbors(end))
    first = nbr_idx[0]
    cyc = tuple(path[first:])
    inner = [path[i] for i in nbr_idx[1:] if i < len(path) - 2]
    if not inner:
        raise NoChordFoundError("path end has fewer than three neighbours")
    return cyc, (end, min(inner))


@dataclass(frozen=True)
class SteinerSubtree:
    root: int
    depth: int
    leaves: frozenset[int]
    parent: dict[int, int]  # every subtree vertex except the root
    branches: int

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self.parent) | {self.root}

    def path_to_root(self, v: int) -> list[int]:
        path = [v]
        while path[-1] != self.root:
            path.append(self.parent[path[-1]])
        return path

    def leaves_below(self, w: int) -> frozenset[int]:
        return frozenset(leaf for leaf in self.leaves if w in self.path_to_root(leaf))


def steiner_subtree(layering: BfsLayering, leaves: Iterable[int]) -> SteinerSubtree:
    leaf_set = frozenset(leaves)
    if len(leaf_set) < 2:
        raise TooFewLeavesError("need at least two leaves")
    depths = {layering.depth[v] for v in leaf_set}
    if len(depths) != 1:
        raise MixedLayersError(f"leaves span layers {sorted(depths)}")
    parent: dict[int, int] = {}
    frontier = set(leaf_set)
    steps = 0
    while len(frontier) > 1:
        nxt = set()
        for v in frontier:
            p = layering.parent[v]
            parent[v] = p
            nxt.add(p)
        frontier = nxt
        steps += 1
    (z,) = frontier
    branches = sum(1 for v, p in parent.items() if p == z)
    return SteinerSubtree(z, steps, leaf_set, parent, branches)
