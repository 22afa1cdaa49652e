"""Two vertex-disjoint connector paths from a hub set to a cycle.

Unit vertex capacities, found by two BFS augmentations in an implicit
split-vertex residual network. A path may leave the hub only at its start
and may touch the target cycle only at its end.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Sequence

from .graph import Graph, GraphError
from .paths import PathRecord


class NoTwoDisjointPathsError(GraphError):
    pass


class ReroutingFailedError(GraphError):
    pass


class ConnectorPreconditionError(GraphError):
    pass


_S, _T, _H = ("S",), ("T",), ("H",)


class _SplitFlow:
    """Unit-capacity flow on the split graph; nodes are ``(v, 0)``/``(v, 1)``."""

    def __init__(self, g: Graph, sources: dict[object, Sequence[int]], sinks: frozenset[int], hub: frozenset[int]):
        self.g = g
        self.sources = sources  # S -> key -> hub vertices; key is a vertex or _H
        self.sinks = sinks
        self.hub = hub
        self.flow: set[tuple[object, object]] = set()

    def _base_out(self, node):
        g = self.g
        if node == _S:
            for key in self.sources:
                yield key if key == _H else (key, 0)
        elif node == _H:
            for h in self.sources[_H]:
                yield (h, 0)
        elif node == _T:
            return
        else:
            v, half = node
            if half == 0:
                yield (v, 1)
            elif v in self.sinks:
                yield _T
            else:
                for u in g.neighbors(v):
                    if u not in self.hub:
                        yield (u, 0)

    def _residual_out(self, node, reverse_in):
        for nxt in self._base_out(node):
            if (node, nxt) not in self.flow:
                yield nxt
        for prev in reverse_in.get(node, ()):
            yield prev

    def augment(self) -> bool:
        reverse_in: dict[object, list[object]] = {}
        for a, b in self.flow:
            reverse_in.setdefault(b, []).append(a)
        pred = {_S: None}
        queue = deque([_S])
        while queue:
            node = queue.popleft()
            if node == _T:
                break
            for nxt in self._residual_out(node, reverse_in):
                if nxt not in pred:
                    pred[nxt] = node
                    queue.append(nxt)
        if _T not in pred:
            return False
        node = _T
        while pred[node] is not None:
            prev = pred[node]
            if (node, prev) in self.flow:
                self.flow.discard((node, prev))
            else:
                self.flow.add((prev, node))
            node = prev
        return True

    def paths(self) -> list[list[int]]:
        out: dict[object, list[object]] = {}
        for a, b in self.flow:
            out.setdefault(a, []).append(b)
        result = []
        for first in sorted(out.get(_S, []), key=repr):
            node = first
            verts: list[int] = []
            while node != _T:
                if node != _H and node[0] not in verts[-1:]:
                    verts.append(node[0])
                node = out[node].pop()
            result.append(verts)
        return result


def _max_two(g: Graph, sources, sinks, hub) -> list[list[int]]:
    flow = _SplitFlow(g, sources, sinks, hub)
    found = 0
    while found < 2 and flow.augment():
        found += 1
    return flow.paths() if found == 2 else []


def check_connectors(
    g: Graph, hub: frozenset[int], z: int, d_verts: frozenset[int], p: Sequence[int], q: Sequence[int]
) -> bool:
    """Post-verifier independent of the flow code."""
    for path in (p, q):
        if len(set(path)) != len(path):
            return False
        if any(not g.has_edge(path[i], path[i + 1]) for i in range(len(path) - 1)):
            return False
        if path[0] not in hub or path[-1] not in d_verts:
            return False
        if any(v in hub or v in d_verts for v in path[1:-1]):
            return False
        if len(path) > 1 and path[-1] in hub:
            return False
        if len(path) > 1 and path[0] in d_verts:
            return False
    return p[0] == z and q[0] != z and not set(p) & set(q)


def disjoint_connector_paths(
    g: Graph,
    hub: Iterable[int],
    z: int,
    d_cycle: Sequence[int],
    z_path: Sequence[int] | None = None,
) -> tuple[PathRecord, PathRecord, str]:
    """Disjoint ``P`` (from ``z``) and ``Q`` (from another hub vertex) into ``D``.

    Both paths are internally disjoint from ``hub`` and ``D``. Returns
    ``(P, Q, route)`` where ``route`` names how ``P`` was made to start at
    ``z``: ``"flow"`` (it already did), ``"spliced"`` (through the tree path
    ``z_path`` from ``z`` to ``D``), or ``"forced"`` (a flow pinning one unit
    at ``z``).
    """
    hub = frozenset(hub)
    d_verts = frozenset(d_cycle)
    if z not in hub:
        raise ConnectorPreconditionError(f"{z} is not a hub vertex")
    if d_verts & (hub - {z}):
        raise ConnectorPreconditionError("D meets the hub away from z")
    others = sorted(hub - {z})
    if not others:
        raise ConnectorPreconditionError("hub has no vertex besides z")

    plain = _max_two(g, {v: None for v in sorted(hub)}, d_verts, hub)
    if not plain:
        raise NoTwoDisjointPathsError("hub and D are separated by a single vertex")
    p0, q0 = plain
    if q0[0] == z:
        p0, q0 = q0, p0
    if p0[0] == z:
        return PathRecord(tuple(p0)), PathRecord(tuple(q0)), "flow"

    if z_path is not None:
        spliced = _splice(p0, q0, list(z_path), d_verts)
        if spliced is not None and check_connectors(g, hub, z, d_verts, *spliced):
            return PathRecord(tuple(spliced[0])), PathRecord(tuple(spliced[1])), "spliced"

    forced = _max_two(g, {z: None, _H: others}, d_verts, hub)
    if forced:
        p1, q1 = forced if forced[0][0] == z else forced[::-1]
        if check_connectors(g, hub, z, d_verts, p1, q1):
            return PathRecord(tuple(p1)), PathRecord(tuple(q1)), "forced"
    raise ReroutingFailedError("no disjoint pair with one path starting at z")


def _splice(p0, q0, z_path, d_verts):
    """Follow ``z_path`` until it first meets ``P0``, ``Q0`` or ``D``."""
    on_p, on_q = set(p0), set(q0)
    for k in range(1, len(z_path)):
        v = z_path[k]
        if v in on_p:
            return z_path[:k] + p0[p0.index(v):], q0
        if v in on_q:
            return z_path[:k] + q0[q0.index(v):], p0
        if v in d_verts:
            return z_path[: k + 1], p0
    return None
