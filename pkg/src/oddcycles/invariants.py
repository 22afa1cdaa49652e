"""Structural predicates with checkable certificates.

Negative answers always carry a witness: an odd cycle for non-bipartite
graphs, a cut vertex (or a size/connectivity reason) for graphs that are
not 2-connected.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graph import Graph, GraphError


class DisconnectedError(GraphError):
    pass


@dataclass(frozen=True)
class BipartiteWitness:
    """Exactly one of ``sides`` (proper 2-colouring) or ``odd_cycle`` is set."""

    sides: tuple[int, ...] | None = None
    odd_cycle: tuple[int, ...] | None = None

    @property
    def is_bipartite(self) -> bool:
        return self.sides is not None

    def verify(self, g: Graph) -> bool:
        if (self.sides is None) == (self.odd_cycle is None):
            return False
        if self.sides is not None:
            return len(self.sides) == g.n and all(self.sides[u] != self.sides[v] for u, v in g.edges())
        cyc = self.odd_cycle
        return (
            len(cyc) % 2 == 1
            and len(set(cyc)) == len(cyc)
            and all(g.has_edge(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc)))
        )


@dataclass(frozen=True)
class TwoConnectivity:
    ok: bool
    reason: str | None = None  # "too_small" | "disconnected" | "cut_vertex"
    cut_vertex: int | None = None

    def __bool__(self) -> bool:
        return self.ok

    def describe(self) -> str:
        if self.ok:
            return "2-connected"
        if self.reason == "cut_vertex":
            return f"cut vertex {self.cut_vertex}"
        return self.reason.replace("_", " ")


def bfs_order(g: Graph, root: int) -> tuple[list[int], list[int]]:
    """Return ``(parent, depth)`` lists; unreachable vertices get depth -1."""
    parent = [-1] * g.n
    depth = [-1] * g.n
    depth[root] = 0
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for u in g.neighbors(v):
            if depth[u] < 0:
                depth[u] = depth[v] + 1
                parent[u] = v
                queue.append(u)
    return parent, depth


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    _, depth = bfs_order(g, 0)
    return all(d >= 0 for d in depth)


def _tree_cycle(parent: list[int], depth: list[int], u: int, v: int) -> tuple[int, ...]:
    """Cycle formed by the non-tree edge ``uv`` and the tree paths to their LCA."""
    left, right = [u], [v]
    a, b = u, v
    while depth[a] > depth[b]:
        a = parent[a]
        left.append(a)
    while depth[b] > depth[a]:
        b = parent[b]
        right.append(b)
    while a != b:
        a, b = parent[a], parent[b]
        left.append(a)
        right.append(b)
    right.pop()  # LCA already in left
    return tuple(left + right[::-1])


def bipartite_check(g: Graph) -> BipartiteWitness:
    if g.n == 0:
        return BipartiteWitness(sides=())
    parent, depth = bfs_order(g, 0)
    if any(d < 0 for d in depth):
        raise DisconnectedError("bipartite_check needs a connected graph")
    # scan in BFS depth order so the first conflict gives a short cycle
    order = sorted(range(g.n), key=lambda v: (depth[v], v))
    for v in order:
        for u in g.neighbors(v):
            if depth[u] == depth[v]:
                return BipartiteWitness(odd_cycle=_tree_cycle(parent, depth, v, u))
    return BipartiteWitness(sides=tuple(d % 2 for d in depth))


def articulation_points(g: Graph) -> list[int]:
    """All cut vertices, ascending, via iterative low-link DFS."""
    disc = [-1] * g.n
    low = [0] * g.n
    cut = set()
    clock = 0
    for root in range(g.n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = clock
        clock += 1
        root_children = 0
        stack = [(root, -1, iter(g.neighbors(root)))]
        while stack:
            v, par, it = stack[-1]
            advanced = False
            for u in it:
                if disc[u] < 0:
                    disc[u] = low[u] = clock
                    clock += 1
                    if v == root:
                        root_children += 1
                    stack.append((u, v, iter(g.neighbors(u))))
                    advanced = True
                    break
                if u != par:
                    low[v] = min(low[v], disc[u])
            if advanced:
                continue
            stack.pop()
            if par >= 0:
                low[par] = min(low[par], low[v])
                if par != root and low[v] >= disc[par]:
                    cut.add(par)
        if root_children >= 2:
            cut.add(root)
    return sorted(cut)


def is_two_connected(g: Graph) -> TwoConnectivity:
    if g.n < 3:
        return TwoConnectivity(False, "too_small")
    if not is_connected(g):
        return TwoConnectivity(False, "disconnected")
    cuts = articulation_points(g)
    if cuts:
        return TwoConnectivity(False, "cut_vertex", cuts[0])
    return TwoConnectivity(True)


def girth(g: Graph) -> int | None:
    """Length of a shortest cycle, or ``None`` for a forest."""
    best: int | None = None
    for root in range(g.n):
        if best == 3:
            break
        depth = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            v = queue.popleft()
            # a cycle through a deeper vertex cannot beat the current best
            if best is not None and 2 * depth[v] + 1 >= best:
                break
            for u in g.neighbors(v):
                if u not in depth:
                    depth[u] = depth[v] + 1
                    parent[u] = v
                    queue.append(u)
                elif u != parent[v]:
                    length = depth[u] + depth[v] + 1
                    if best is None or length < best:
                        best = length
    return best


def odd_girth(g: Graph) -> int | None:
    """Length of a shortest odd cycle, or ``None`` when ``g`` is bipartite."""
    best: int | None = None
    for root in range(g.n):
        if best == 3:
            break
        depth = {root: 0}
        queue = deque([root])
        while queue:
            v = queue.popleft()
            if best is not None and 2 * depth[v] + 1 >= best:
                break
            for u in g.neighbors(v):
                if u not in depth:
                    depth[u] = depth[v] + 1
                    queue.append(u)
                elif depth[u] == depth[v]:
                    length = 2 * depth[v] + 1
                    if best is None or length < best:
                        best = length
    return best


def chromatic_number(g: Graph) -> int:
    """Exact chromatic number by backtracking; meant for small graphs."""
    if g.n == 0:
        return 0
    if g.m == 0:
        return 1
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    for k in range(2, g.n + 1):
        if _colourable(g, order, k):
            return k
    return g.n


def _colourable(g: Graph, order: list[int], k: int) -> bool:
    colour = [-1] * g.n

    def place(idx: int, used: int) -> bool:
        if idx == len(order):
            return True
        v = order[idx]
        taken = {colour[u] for u in g.neighbors(v)}
        # symmetry: a fresh colour is only tried once
        for c in range(min(used + 1, k)):
            if c in taken:
                continue
            colour[v] = c
            if place(idx + 1, max(used, c + 1)):
                return True
            colour[v] = -1
        return False

    return place(0, 0)
