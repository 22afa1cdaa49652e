"""(A, B)-paths of every length in a cycle with one chord.

With a single chord every simple path is either an arc of the cycle or
arc + chord + arc, so all candidates can be listed directly. The atlas keeps,
for each length, the lexicographically smallest path oriented from its
A-end to its B-end, with the remaining candidates kept as alternates.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator

from .decompose import ChordedCycle
from .graph import GraphError


class NotAPartitionError(GraphError):
    pass


class MaxLenTooLargeError(GraphError):
    pass


class LemmaViolation(AssertionError):
    """A length promised by the chorded-cycle path lemma is missing."""


@dataclass(frozen=True)
class PathRecord:
    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def ends(self) -> tuple[int, int]:
        return (self.vertices[0], self.vertices[-1])


@dataclass
class LengthAtlas:
    paths: dict[int, PathRecord] = field(default_factory=dict)
    alternates: dict[int, list[PathRecord]] = field(default_factory=dict)

    def lengths(self) -> list[int]:
        return sorted(self.paths)

    def candidates(self, length: int) -> list[PathRecord]:
        """Every stored path of ``length``, preferred one first."""
        return [self.paths[length], *self.alternates.get(length, [])] if length in self.paths else []

    def __getitem__(self, length: int) -> PathRecord:
        return self.paths[length]

    def __contains__(self, length: int) -> bool:
        return length in self.paths


class BipartitionException(GraphError):
    """(A, B) is the bipartition of the chorded cycle; only odd lengths exist."""

    def __init__(self, atlas: LengthAtlas):
        super().__init__("(A, B) is the bipartition of the chorded cycle")
        self.atlas = atlas


def chorded_paths(c: ChordedCycle, max_len: int | None = None) -> Iterator[tuple[int, ...]]:
    """Every oriented simple path (length >= 1) in cycle plus chord.

    Arcs are produced from every start in both directions; chord paths as
    arc into one chord end, the chord, then an arc out of the other end.
    Some chord paths are produced twice; callers deduplicate.
    """
    vs = c.vertices
    n = len(vs)
    limit = n - 1 if max_len is None else min(max_len, n - 1)
    for s in range(n):
        for d in (1, -1):
            for ell in range(1, limit + 1):
                yield tuple(vs[(s + d * i) % n] for i in range(ell + 1))
    pos = c.position
    for a, b in (c.chord, c.chord[::-1]):
        pa, pb = pos[a], pos[b]
        for d1 in (1, -1):
            # first arc runs s -> a moving in direction d1; it must avoid b
            for l1 in range(0, n):
                head = [(pa - d1 * (l1 - i)) % n for i in range(l1 + 1)]
                if pb in head:
                    break
                if l1 + 1 > limit:
                    break
                used = set(head)
                used.add(pb)
                for d2 in (1, -1):
                    tail = [pb]
                    while l1 + 1 + len(tail) - 1 <= limit:
                        yield tuple(vs[i] for i in head) + tuple(vs[i] for i in tail)
                        nxt = (tail[-1] + d2) % n
                        if nxt in used or nxt in tail:
                            break
                        tail.append(nxt)


@lru_cache(maxsize=64)
def _path_list(vertices: tuple[int, ...], chord: tuple[int, int], max_len: int | None) -> tuple[tuple[int, ...], ...]:
    # atlases over one cycle differ only in the endpoint filter
    return tuple(set(chorded_paths(ChordedCycle(vertices, chord), max_len)))


def _build_atlas(
    c: ChordedCycle, a: frozenset[int], b: frozenset[int], max_len: int | None, parity: int | None
) -> LengthAtlas:
    buckets: dict[int, set[tuple[int, ...]]] = {}
    for p in _path_list(c.vertices, c.chord, max_len):
        length = len(p) - 1
        if parity is not None and length % 2 != parity:
            continue
        if p[0] in a and p[-1] in b:
            buckets.setdefault(length, set()).add(p)
    atlas = LengthAtlas()
    for length in sorted(buckets):
        ordered = sorted(buckets[length])
        atlas.paths[length] = PathRecord(ordered[0])
        if len(ordered) > 1:
            atlas.alternates[length] = [PathRecord(p) for p in ordered[1:]]
    return atlas


def _check_partition(c: ChordedCycle, a: Iterable[int], b: Iterable[int]) -> tuple[frozenset[int], frozenset[int]]:
    a, b = frozenset(a), frozenset(b)
    verts = frozenset(c.vertices)
    if not a or not b or a & b or (a | b) != verts:
        raise NotAPartitionError("(A, B) must be a nontrivial partition of the cycle's vertices")
    return a, b


def _is_cycle_bipartition(c: ChordedCycle, a: frozenset[int]) -> bool:
    return c.is_bipartite and a in c.two_colouring


def ab_paths_all_lengths(c: ChordedCycle, a: Iterable[int], b: Iterable[int]) -> LengthAtlas:
    a, b = _check_partition(c, a, b)
    atlas = _build_atlas(c, a, b, None, None)
    if _is_cycle_bipartition(c, a):
        if any(length % 2 == 0 for length in atlas.paths):
            raise LemmaViolation("even (A, B)-path across the bipartition")
        raise BipartitionException(atlas)
    missing = set(range(1, c.length)) - set(atlas.paths)
    if missing:
        raise LemmaViolation(f"lengths {sorted(missing)} missing")
    return atlas


def even_ab_paths_up_to(
    c: ChordedCycle, a: Iterable[int], b: Iterable[int], max_len: int
) -> LengthAtlas:
    """Even-length (A, B)-paths of lengths 2, 4, ..., <= ``max_len``.

    On a bipartite chorded cycle the B-end of every even path shares the
    colour class of its A-end; this is checked.
    """
    a, b = _check_partition(c, a, b)
    if max_len >= c.length:
        raise MaxLenTooLargeError(f"max_len {max_len} >= |C| = {c.length}")
    if _is_cycle_bipartition(c, a):
        raise BipartitionException(_build_atlas(c, a, b, max_len, None))
    atlas = _build_atlas(c, a, b, max_len, 0)
    wanted = set(range(2, max_len + 1, 2))
    if wanted - set(atlas.paths):
        raise LemmaViolation(f"even lengths {sorted(wanted - set(atlas.paths))} missing")
    if c.is_bipartite:
        for length in atlas.lengths():
            for rec in atlas.candidates(length):
                s, e = rec.ends
                if c.colour(s) != c.colour(e):
                    raise LemmaViolation("even path changed colour class")
    return atlas


def odd_w_paths_up_to(c: ChordedCycle, w: int, max_len: int) -> LengthAtlas:
    """Odd-length paths from ``w`` of lengths 1, 3, ..., <= ``max_len``.

    On a bipartite chorded cycle each ends in the colour class opposite ``w``.
    """
    if w not in c.position:
        raise NotAPartitionError(f"{w} is not a cycle vertex")
    if max_len >= c.length:
        raise MaxLenTooLargeError(f"max_len {max_len} >= |C| = {c.length}")
    a = frozenset([w])
    b = frozenset(c.vertices) - a
    atlas = _build_atlas(c, a, b, max_len, 1)
    wanted = set(range(1, max_len + 1, 2))
    if wanted - set(atlas.paths):
        raise LemmaViolation(f"odd lengths {sorted(wanted - set(atlas.paths))} missing")
    if c.is_bipartite:
        for length in atlas.lengths():
            for rec in atlas.candidates(length):
                if c.colour(rec.ends[1]) == c.colour(w):
                    raise LemmaViolation("odd path stayed in its colour class")
    return atlas
