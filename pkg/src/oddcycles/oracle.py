"""Ground truth by exhaustive cycle enumeration.

``enumerate_cycles`` lists every simple cycle once (canonical form: least
vertex first, then the smaller of its two cycle neighbours). For graphs too
rich to list, ``count_cycles_by_length`` counts exactly by dynamic
programming over vertex subsets, which is feasible up to about 20 vertices.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .graph import Graph, GraphError

DEFAULT_CAP = 10**6


class BadModulusError(GraphError):
    pass


@dataclass
class Spectrum:
    counts: dict[int, int] = field(default_factory=dict)
    total: int = 0
    truncated: bool = False
    cycles: list[tuple[int, ...]] | None = None

    @property
    def lengths(self) -> list[int]:
        return sorted(self.counts)

    def to_dict(self) -> dict:
        return {
            "lengths": {str(k): self.counts[k] for k in sorted(self.counts)},
            "total": self.total,
            "truncated": self.truncated,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: dict) -> Spectrum:
        counts = {int(k): int(v) for k, v in data["lengths"].items()}
        return cls(counts, int(data["total"]), bool(data["truncated"]))


def iter_cycles(g: Graph) -> Iterator[tuple[int, ...]]:
    """Yield every simple cycle exactly once, canonically oriented."""
    for s in range(g.n):
        nbrs_s = g.neighbor_set(s)
        path = [s]
        on_path = [False] * g.n
        on_path[s] = True
        stack = [iter([u for u in g.neighbors(s) if u > s])]
        while stack:
            v = next(stack[-1], None)
            if v is None:
                stack.pop()
                last = path.pop()
                on_path[last] = False
                continue
            path.append(v)
            on_path[v] = True
            if len(path) >= 3 and v in nbrs_s and path[1] < v:
                yield tuple(path)
            stack.append(iter([u for u in g.neighbors(v) if u > s and not on_path[u]]))
        # the start itself was popped with the last exhausted iterator


def enumerate_cycles(g: Graph, cap: int = DEFAULT_CAP, keep: bool = False) -> Spectrum:
    spec = Spectrum(cycles=[] if keep else None)
    for cyc in iter_cycles(g):
        if spec.total >= cap:
            spec.truncated = True
            break
        spec.counts[len(cyc)] = spec.counts.get(len(cyc), 0) + 1
        spec.total += 1
        if keep:
            spec.cycles.append(cyc)
    return spec


def count_cycles_by_length(g: Graph, max_n: int = 22) -> Spectrum:
    """Exact per-length cycle counts by path-counting over vertex subsets.

    For each least vertex ``s``, counts paths from ``s`` through vertices
    above ``s``; every cycle is seen once per direction.
    """
    if g.n > max_n:
        raise GraphError(f"subset DP limited to {max_n} vertices")
    doubled: dict[int, int] = {}
    for s in range(g.n):
        back = g.neighbor_set(s)
        level: dict[tuple[int, int], int] = {}
        for u in g.neighbors(s):
            if u > s:
                level[(1 << u, u)] = 1
        size = 1
        while level:
            nxt: dict[tuple[int, int], int] = {}
            for (mask, v), cnt in level.items():
                if size >= 2 and v in back:
                    doubled[size + 1] = doubled.get(size + 1, 0) + cnt
                for u in g.neighbors(v):
                    if u > s and not mask >> u & 1:
                        key = (mask | 1 << u, u)
                        nxt[key] = nxt.get(key, 0) + cnt
            level = nxt
            size += 1
    counts = {length: c // 2 for length, c in sorted(doubled.items())}
    return Spectrum(counts, sum(counts.values()), False)


def _lengths_of(s: Spectrum | Iterable[int]) -> set[int]:
    if isinstance(s, Spectrum):
        return {length for length, c in s.counts.items() if c > 0}
    return set(s)


def residue_coverage(s: Spectrum | Iterable[int], k: int) -> frozenset[int]:
    if k < 2:
        raise BadModulusError(f"modulus must be >= 2, got {k}")
    return frozenset(length % k for length in _lengths_of(s))


def longest_consecutive_odd_run(s: Spectrum | Iterable[int]) -> int:
    present = {length for length in _lengths_of(s) if length % 2}
    best = 0
    for length in present:
        if length - 2 in present:
            continue
        run = 1
        while length + 2 * run in present:
            run += 1
        best = max(best, run)
    return best


@dataclass(frozen=True)
class ResidueReport:
    k: int
    covered: frozenset[int]
    missing: frozenset[int]
    truncated: bool = False

    @property
    def complete(self) -> bool:
        return not self.missing


def check_all_residues(s: Spectrum | Iterable[int], k: int) -> ResidueReport:
    covered = residue_coverage(s, k)
    truncated = isinstance(s, Spectrum) and s.truncated
    return ResidueReport(k, covered, frozenset(range(k)) - covered, truncated)


def cycle_space_bound(g: Graph, components: int = 1) -> int:
    """Upper bound ``2**(m - n + c) - 1`` on the number of simple cycles."""
    return 2 ** max(0, g.m - g.n + components) - 1
