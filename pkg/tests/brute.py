"""Independent brute-force oracles used only by the tests."""

from __future__ import annotations

import itertools

import networkx as nx

from oddcycles.graph import Graph


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def nx_cycle_lengths(g: Graph) -> list[int]:
    """Length of every simple cycle, via networkx's undirected enumerator."""
    return sorted(len(c) for c in nx.simple_cycles(to_nx(g)) if len(c) >= 3)


def all_simple_paths_adj(adj: dict[int, set[int]]) -> set[tuple[int, ...]]:
    """Every oriented simple path with at least one edge, by plain DFS."""
    found = set()

    def walk(path):
        if len(path) > 1:
            found.add(tuple(path))
        for u in sorted(adj[path[-1]]):
            if u not in path:
                path.append(u)
                walk(path)
                path.pop()

    for v in adj:
        walk([v])
    return found


def chorded_adj(n: int, chord: tuple[int, int]) -> dict[int, set[int]]:
    adj = {v: {(v - 1) % n, (v + 1) % n} for v in range(n)}
    a, b = chord
    adj[a].add(b)
    adj[b].add(a)
    return adj


def ab_lengths_brute(n: int, chord: tuple[int, int], a: set[int], b: set[int]) -> set[int]:
    return {
        len(p) - 1
        for p in all_simple_paths_adj(chorded_adj(n, chord))
        if (p[0] in a and p[-1] in b) or (p[0] in b and p[-1] in a)
    }


def max_cut_brute(g: Graph) -> int:
    best = 0
    for bits in itertools.product((0, 1), repeat=g.n):
        best = max(best, sum(1 for u, v in g.edges() if bits[u] != bits[v]))
    return best


def is_valid_cycle(g: Graph, cyc) -> bool:
    n = len(cyc)
    return n >= 3 and len(set(cyc)) == n and all(g.has_edge(cyc[i], cyc[(i + 1) % n]) for i in range(n))
