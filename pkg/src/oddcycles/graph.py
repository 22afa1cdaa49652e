"""Simple undirected graphs on dense integer ids, plus text I/O."""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Iterator, NamedTuple, Sequence

VertexSet = frozenset  # frozenset[int]; ids must lie in 0..n-1 of the host


class GraphError(ValueError):
    pass


class EmptyGraphError(GraphError):
    pass


class OutOfRangeError(GraphError):
    pass


class ParseError(GraphError):
    """Base class for edge-list parse failures; ``line`` is 1-based."""

    kind = "malformed"

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class SelfLoopError(ParseError):
    kind = "self_loop"


class DuplicateEdgeError(ParseError):
    kind = "duplicate_edge"


class MalformedError(ParseError):
    kind = "malformed"


class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    ``labels`` optionally records the original id of every vertex when the
    graph was read from a file with sparse ids. It takes no part in equality.
    """

    __slots__ = ("n", "m", "_adj", "_nbr", "labels")

    def __init__(self, n: int, adjacency: Sequence[Iterable[int]], labels: Sequence[int] | None = None):
        if len(adjacency) != n:
            raise GraphError(f"adjacency has {len(adjacency)} rows for n={n}")
        adj = tuple(tuple(sorted(set(row))) for row in adjacency)
        total = 0
        for v, row in enumerate(adj):
            for u in row:
                if not 0 <= u < n:
                    raise OutOfRangeError(f"neighbor {u} of {v} outside 0..{n - 1}")
                if u == v:
                    raise GraphError(f"self-loop at {v}")
            total += len(row)
        nbr = tuple(frozenset(row) for row in adj)
        for v, row in enumerate(adj):
            for u in row:
                if v not in nbr[u]:
                    raise GraphError(f"asymmetric adjacency {v}->{u}")
        self.n = n
        self.m = total // 2
        self._adj = adj
        self._nbr = nbr
        self.labels = tuple(labels) if labels is not None else None

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], labels: Sequence[int] | None = None) -> Graph:
        rows: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise OutOfRangeError(f"edge ({u}, {v}) outside 0..{n - 1}")
            if u == v:
                raise GraphError(f"self-loop at {u}")
            rows[u].add(v)
            rows[v].add(u)
        return cls(n, rows, labels)

    def neighbors(self, v: int) -> tuple[int, ...]:
        """Neighbors of ``v`` in ascending id order."""
        return self._adj[v]

    def neighbor_set(self, v: int) -> frozenset[int]:
        return self._nbr[v]

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and v in self._nbr[u]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def min_degree(self) -> int:
        return min((len(row) for row in self._adj), default=0)

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Each edge once as ``(u, v)`` with ``u < v``, lexicographically."""
        for u, row in enumerate(self._adj):
            for v in row:
                if v > u:
                    yield (u, v)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def average_degree(g: Graph) -> Fraction:
    if g.n == 0:
        raise EmptyGraphError("average degree of the empty graph")
    return Fraction(2 * g.m, g.n)


class InducedSubgraph(NamedTuple):
    graph: Graph
    to_host: tuple[int, ...]  # local id -> host id

    def to_local(self) -> dict[int, int]:
        return {h: i for i, h in enumerate(self.to_host)}


def induced_subgraph(g: Graph, s: Iterable[int]) -> InducedSubgraph:
    verts = sorted(set(s))
    if not verts:
        raise GraphError("induced subgraph of an empty vertex set")
    if verts[0] < 0 or verts[-1] >= g.n:
        raise OutOfRangeError(f"vertex set leaves 0..{g.n - 1}")
    local = {h: i for i, h in enumerate(verts)}
    rows = [[local[u] for u in g.neighbors(h) if u in local] for h in verts]
    return InducedSubgraph(Graph(len(verts), rows), tuple(verts))


_HEADER = re.compile(r"#\s*n\s*=\s*(\d+)\s*$")


def parse_edge_list(text: str, dedup: bool = False) -> Graph:
    """Parse whitespace-separated ``u v`` lines; ``#`` starts a comment line.

    A ``# n=N`` header fixes the vertex count (isolated vertices survive).
    Without it, ids are used as-is when they are exactly ``0..max_id``, and
    otherwise compacted in ascending order with ``Graph.labels`` holding the
    original ids.
    """
    header_n: int | None = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            match = _HEADER.match(line)
            if match:
                header_n = int(match.group(1))
            continue
        parts = line.split()
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise MalformedError(lineno, f"expected two non-negative integers, got {raw!r}")
        u, v = int(parts[0]), int(parts[1])
        if u == v:
            raise SelfLoopError(lineno, f"self-loop at {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            if dedup:
                continue
            raise DuplicateEdgeError(lineno, f"duplicate edge {key[0]} {key[1]}")
        seen.add(key)
        edges.append(key)
    return _assemble(edges, header_n)


def parse_dimacs(text: str, dedup: bool = False) -> Graph:
    """Parse DIMACS ``p edge n m`` / ``e u v`` input with 1-based ids."""
    n: int | None = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        if parts[0] == "p":
            if len(parts) != 4 or not parts[2].isdigit() or not parts[3].isdigit():
                raise MalformedError(lineno, f"bad problem line {raw!r}")
            n = int(parts[2])
            continue
        if parts[0] != "e" or len(parts) != 3 or not parts[1].isdigit() or not parts[2].isdigit():
            raise MalformedError(lineno, f"bad edge line {raw!r}")
        if n is None:
            raise MalformedError(lineno, "edge before problem line")
        u, v = int(parts[1]) - 1, int(parts[2]) - 1
        if not (0 <= u < n and 0 <= v < n):
            raise MalformedError(lineno, f"vertex id outside 1..{n}")
        if u == v:
            raise SelfLoopError(lineno, f"self-loop at {u + 1}")
        key = (min(u, v), max(u, v))
        if key in seen:
            if dedup:
                continue
            raise DuplicateEdgeError(lineno, f"duplicate edge {u + 1} {v + 1}")
        seen.add(key)
        edges.append(key)
    if n is None:
        raise MalformedError(1, "missing problem line")
    return Graph.from_edges(n, edges)


def looks_like_dimacs(text: str) -> bool:
    for raw in text.splitlines():
        parts = raw.split()
        if not parts:
            continue
        if parts[0] == "p" and len(parts) >= 2 and parts[1] == "edge":
            return True
        if parts[0] in ("c", "p", "e"):
            continue
        return False
    return False


def read_graph(text: str, dedup: bool = False) -> Graph:
    """Auto-detect DIMACS versus plain edge list."""
    if looks_like_dimacs(text):
        return parse_dimacs(text, dedup=dedup)
    return parse_edge_list(text, dedup=dedup)


def _assemble(edges: list[tuple[int, int]], header_n: int | None) -> Graph:
    if header_n is not None:
        for u, v in edges:
            if v >= header_n:
                raise OutOfRangeError(f"edge ({u}, {v}) exceeds header n={header_n}")
        return Graph.from_edges(header_n, edges)
    ids = sorted({x for e in edges for x in e})
    if not ids:
        return Graph(0, [])
    if ids[-1] + 1 == len(ids):
        return Graph.from_edges(len(ids), edges)
    local = {h: i for i, h in enumerate(ids)}
    return Graph.from_edges(len(ids), [(local[u], local[v]) for u, v in edges], labels=ids)


def emit_graph(g: Graph) -> str:
    lines = [f"# n={g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
