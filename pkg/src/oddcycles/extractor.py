"""Extraction of cycles with consecutive odd lengths.

The pipeline: hypothesis checks, local-search bipartition, odd closure edge
``xy``, BFS layering of the cut subgraph from ``x``, base odd cycle ``D``,
densest layer pair, chorded cycle ``C`` there, Steiner subtree ``T'`` over
the low-layer vertices of ``C``, then one of four assemblies depending on
how ``D`` meets ``C`` and ``T'``:

* ``1a``/``1b``: ``D`` avoids ``C`` and ``T'`` (except possibly the subtree
  root ``z``); two disjoint connectors ``P``, ``Q`` and an arc ``R`` of ``D``
  close the paths from ``C``.
* ``2a``/``2b``: ``D`` runs through ``C`` or ``T'``; ``D`` itself minus a
  tree segment closes the paths.

``a`` subcases use even paths inside ``C`` between leaves on two sides of a
vertex ``w`` of ``T'``; ``b`` subcases use odd paths from a vertex ``w`` of
``C`` in the upper layer, climbed to ``z``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Sequence

from .decompose import (
    BfsLayering,
    ChordedCycle,
    SteinerSubtree,
    base_odd_cycle,
    bfs_layering,
    chorded_cycle,
    densest_layer_pair,
    find_odd_closure_edge,
    local_search_bipartition,
    steiner_subtree,
)
from .graph import Graph, GraphError, average_degree
from .invariants import (
    BipartiteWitness,
    TwoConnectivity,
    bipartite_check,
    girth,
    is_connected,
    is_two_connected,
)
from .paths import LengthAtlas, PathRecord, even_ab_paths_up_to, odd_w_paths_up_to
from .routing import disjoint_connector_paths

DEFAULT_C = 456


class ExtractionError(GraphError):
    """Base class; ``trace`` holds whatever intermediate state was reached."""

    reason = "extraction failed"

    def __init__(self, message: str, trace: dict | None = None):
        super().__init__(message)
        self.trace = trace or {}


class HypothesisError(ExtractionError):
    """The input does not meet what the construction needs."""


class BipartiteError(HypothesisError):
    reason = "bipartite"

    def __init__(self, witness: BipartiteWitness, trace: dict | None = None):
        super().__init__("graph is bipartite", trace)
        self.witness = witness


class NotTwoConnectedError(HypothesisError):
    def __init__(self, certificate: TwoConnectivity, trace: dict | None = None):
        super().__init__(f"graph is not 2-connected: {certificate.describe()}", trace)
        self.certificate = certificate
        self.reason = certificate.describe()


class DegreeTooLowError(HypothesisError):
    reason = "average degree below c*k"


class CycleTooShortError(HypothesisError):
    reason = "chorded cycle shorter than 2(t+1)"


class NoChordError(HypothesisError):
    reason = "no chorded cycle"


class AssemblyOverlapError(ExtractionError):
    reason = "assembly overlap"


class CaseHypothesisViolated(ExtractionError):
    reason = "case hypothesis violated"


@dataclass(frozen=True)
class ExtractionConfig:
    k: int
    c: int = DEFAULT_C
    mode: str = "relaxed"  # "strict" | "relaxed"
    seed: int = 0
    max_starts: int = 16

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("k must be >= 1")
        if self.c < 1:
            raise ValueError("c must be >= 1")
        if self.mode not in ("strict", "relaxed"):
            raise ValueError(f"unknown mode {self.mode!r}")

    @property
    def thresholds(self) -> dict[str, Fraction]:
        """Degree bounds the proof tracks: host, cut subgraph, layer pair."""
        ck = Fraction(self.c * self.k)
        return {"host": ck, "cut": ck / 2, "layer": ck / 4}


@dataclass
class ExtractionResult:
    cycles: list[tuple[int, ...]]
    case: str
    t_target: int
    t_achieved: int
    trace: dict[str, Any] = field(default_factory=dict)

    @property
    def lengths(self) -> list[int]:
        return [len(c) for c in self.cycles]

    def to_dict(self) -> dict[str, Any]:
        return {
            "t_target": self.t_target,
            "t_achieved": self.t_achieved,
            "case": self.case,
            "cycles": [{"length": len(c), "vertices": list(c)} for c in self.cycles],
        }

    def to_json(self, pretty: bool = False) -> str:
        if pretty:
            return json.dumps(self.to_dict(), indent=2)
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> ExtractionResult:
        cycles = [tuple(int(v) for v in entry["vertices"]) for entry in data["cycles"]]
        res = cls(cycles, str(data["case"]), int(data["t_target"]), int(data["t_achieved"]))
        res.trace["declared_lengths"] = [int(entry["length"]) for entry in data["cycles"]]
        return res


def target_count(k: int, g: int | None) -> int:
    """``k ** floor((g - 1) / 2)``; forests count as girth 3."""
    g = 3 if g is None else g
    return k ** ((g - 1) // 2)


# --- assembly helpers -----------------------------------------------------


def _join(segments: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Concatenate walk segments sharing endpoints into a closed vertex cycle."""
    out = list(segments[0])
    for seg in segments[1:]:
        if not seg:
            continue
        if seg[0] != out[-1]:
            raise AssemblyOverlapError(f"segments do not meet: {out[-1]} vs {seg[0]}")
        out.extend(seg[1:])
    if out[0] != out[-1]:
        raise AssemblyOverlapError("assembled walk is not closed")
    return tuple(out[:-1])


def _is_simple_cycle(g: Graph, cyc: Sequence[int]) -> bool:
    n = len(cyc)
    return n >= 3 and len(set(cyc)) == n and all(g.has_edge(cyc[i], cyc[(i + 1) % n]) for i in range(n))


def cycle_arcs(cyc: Sequence[int], p: int, q: int) -> tuple[list[int], list[int]]:
    """The two arcs of ``cyc`` from ``p`` to ``q`` (forward, backward)."""
    n = len(cyc)
    i, j = cyc.index(p), cyc.index(q)
    fwd = [cyc[(i + s) % n] for s in range((j - i) % n + 1)]
    bwd = [cyc[(i - s) % n] for s in range((i - j) % n + 1)]
    return fwd, bwd


def _arc_with_parity(d_cycle: Sequence[int], p: int, q: int, parity: int) -> list[int]:
    if p == q:
        raise AssemblyOverlapError("connector ends coincide on D")
    fwd, bwd = cycle_arcs(d_cycle, p, q)
    # |D| odd: the two arcs always have opposite parities
    assert (len(fwd) - 1) % 2 != (len(bwd) - 1) % 2
    return fwd if (len(fwd) - 1) % 2 == parity else bwd


def _assemble(g: Graph, atlas: LengthAtlas, lengths: Sequence[int], build) -> list[tuple[int, ...]]:
    """Close each atlas path with ``build(path)``, trying alternates on overlap."""
    cycles = []
    for length in lengths:
        for rec in atlas.candidates(length):
            try:
                cyc = build(rec)
            except AssemblyOverlapError:
                continue
            if _is_simple_cycle(g, cyc):
                cycles.append(cyc)
                break
        else:
            raise AssemblyOverlapError(f"no atlas path of length {length} closes to a simple cycle")
    return cycles


def _even_atlas(cc: ChordedCycle, tp: SteinerSubtree, w: int, count: int) -> tuple[frozenset, frozenset, LengthAtlas]:
    a_set = tp.leaves_below(w)
    b_star = tp.leaves - a_set
    if not b_star:
        raise CaseHypothesisViolated(f"every leaf of T' lies below {w}")
    atlas = even_ab_paths_up_to(cc, a_set, frozenset(cc.vertices) - a_set, 2 * count)
    for length in atlas.lengths():
        for rec in atlas.candidates(length):
            if rec.ends[1] not in b_star:
                raise AssemblyOverlapError("even path ended outside B*")
    return a_set, b_star, atlas


# --- the two cases --------------------------------------------------------


def case1_cycles(
    g: Graph,
    cc: ChordedCycle,
    tp: SteinerSubtree,
    d_cycle: Sequence[int],
    p_path: Sequence[int],
    q_path: Sequence[int],
    t: int,
) -> tuple[str, list[tuple[int, ...]]]:
    """``D`` avoids ``C`` and ``T'`` except ``z``; ``P`` from ``z``, ``Q`` from ``w``."""
    z = tp.root
    hub = frozenset(cc.vertices) | tp.vertices
    if set(d_cycle) & (hub - {z}):
        raise CaseHypothesisViolated("D meets C or T' away from z")
    w = q_path[0]
    if w == z or w not in hub:
        raise CaseHypothesisViolated(f"Q must start in the hub away from z, not at {w}")
    if p_path[0] != z:
        raise CaseHypothesisViolated("P must start at z")
    p, q = p_path[-1], q_path[-1]
    q_rev = list(reversed(q_path))

    if w in tp.vertices:
        _, _, atlas = _even_atlas(cc, tp, w, t)
        down_w = tp.path_to_root  # leaf -> ... -> w is a prefix of leaf -> z
        a_to_w = {a: _prefix_to(down_w(a), w) for a in tp.leaves_below(w)}
        aw = len(next(iter(a_to_w.values()))) - 1
        r = _arc_with_parity(d_cycle, p, q, (1 + aw + len(q_path) - 1 + len(p_path) - 1 + tp.depth) % 2)

        def build(rec: PathRecord):
            a, b = rec.ends
            return _join([rec.vertices, tp.path_to_root(b), p_path, r, q_rev, a_to_w[a][::-1]])

        return "1a", _assemble(g, atlas, range(2, 2 * t + 1, 2), build)

    atlas = odd_w_paths_up_to(cc, w, 2 * t - 1)
    r = _arc_with_parity(d_cycle, p, q, (len(p_path) - 1 + len(q_path) - 1 + tp.depth) % 2)

    def build(rec: PathRecord):
        u = rec.ends[1]
        if u not in tp.leaves:
            raise AssemblyOverlapError(f"odd path from {w} ended at {u}, not a leaf of T'")
        return _join([rec.vertices, tp.path_to_root(u), p_path, r, q_rev])

    return "1b", _assemble(g, atlas, range(1, 2 * t, 2), build)


def case2_cycles(
    g: Graph,
    cc: ChordedCycle,
    tp: SteinerSubtree,
    d_cycle: Sequence[int],
    layering: BfsLayering,
    t: int,
) -> tuple[str, list[tuple[int, ...]], dict[str, Any]]:
    """``D`` meets ``C`` or ``T'`` away from ``z``; ``D`` minus a tree segment closes."""
    z = tp.root
    hub = frozenset(cc.vertices) | tp.vertices
    touch = [v for v in d_cycle if v in hub and v != z]
    if not touch:
        raise CaseHypothesisViolated("D avoids C and T' away from z")
    y = d_cycle[-1]
    # D is the root-to-y tree path: the deepest touch vertex is closest to y
    w = min(touch, key=lambda v: (layering.depth[y] - layering.depth[v], v))
    info: dict[str, Any] = {"w": w}

    if w in tp.vertices:
        assert layering.is_ancestor(z, w)
        seg = layering.tree_path(w, z)
        assert seg == _prefix_to(tp.path_to_root(w), z)
        _, _, atlas = _even_atlas(cc, tp, w, t)
        closing = _other_arc(d_cycle, z, w, len(seg) - 1)

        def build(rec: PathRecord):
            a, b = rec.ends
            return _join([rec.vertices, tp.path_to_root(b), closing, _prefix_to(tp.path_to_root(a), w)[::-1]])

        return "2a", _assemble(g, atlas, range(2, 2 * t + 1, 2), build), info

    atlas = odd_w_paths_up_to(cc, w, 2 * t - 1)
    if layering.is_ancestor(z, w):
        seg = layering.tree_path(w, z)
        closing = _other_arc(d_cycle, z, w, len(seg) - 1)
        info["tree_segment"] = len(seg) - 1
    else:
        # w's tree parent lies off C, so z is not above w and D meets the hub
        # only at w: route z up the tree to D and close along an arc of D.
        z_up = _prefix_to(layering.path_to_root(z), layering.lca(z, y))
        r = _arc_with_parity(d_cycle, z_up[-1], w, (len(z_up) - 1 + tp.depth) % 2)
        closing = z_up + r[1:]
        info["rerouted"] = True
        info["P"] = tuple(z_up)

    def build(rec: PathRecord):
        u = rec.ends[1]
        if u not in tp.leaves:
            raise AssemblyOverlapError(f"odd path from {w} ended at {u}, not a leaf of T'")
        return _join([rec.vertices, tp.path_to_root(u), closing])

    return "2b", _assemble(g, atlas, range(1, 2 * t, 2), build), info


def _prefix_to(path: Sequence[int], stop: int) -> list[int]:
    return list(path[: list(path).index(stop) + 1])


def _other_arc(d_cycle: Sequence[int], z: int, w: int, seg_len: int) -> list[int]:
    """Arc of ``D`` from ``z`` to ``w`` that is not the tree segment."""
    fwd, bwd = cycle_arcs(d_cycle, z, w)
    return fwd if len(fwd) - 1 != seg_len else bwd


# --- orchestration --------------------------------------------------------


def extract_consecutive_odd(g: Graph, cfg: ExtractionConfig) -> ExtractionResult:
    trace: dict[str, Any] = {"mode": cfg.mode, "k": cfg.k, "c": cfg.c}

    if not is_connected(g):
        raise NotTwoConnectedError(TwoConnectivity(False, "disconnected"), trace)
    witness = bipartite_check(g)
    if witness.is_bipartite:
        raise BipartiteError(witness, trace)
    conn = is_two_connected(g)
    if not conn:
        raise NotTwoConnectedError(conn, trace)
    avg = average_degree(g)
    trace["avg_degree"] = avg
    bounds = cfg.thresholds
    if cfg.mode == "strict" and avg < bounds["host"]:
        raise DegreeTooLowError(f"average degree {avg} < {bounds['host']}", trace)

    gir = girth(g)
    t = target_count(cfg.k, gir)
    trace.update(girth=gir, t_target=t)

    bip = local_search_bipartition(g)
    gb = bip.cut_graph(g)
    x, y = find_odd_closure_edge(g, bip)
    layering = bfs_layering(gb, x)
    d_cycle = base_odd_cycle(g, layering, (x, y))
    trace.update(cut_edges=bip.cut_edges, xy=(x, y), D=d_cycle)

    pair = densest_layer_pair(layering, gb)
    trace.update(layer_index=pair.index, layer_avg=pair.average)
    if cfg.mode == "strict":
        cut_avg = average_degree(gb)
        if cut_avg < bounds["cut"] or pair.average < bounds["layer"]:
            raise DegreeTooLowError("cut or layer-pair degree fell below the proof's bound", trace)

    min_len = 2 * (t + 1)
    try:
        local_cc = chorded_cycle(pair.layer_graph.graph, min_len, cfg.max_starts)
    except GraphError as exc:
        raise NoChordError(str(exc), trace) from exc
    cc = local_cc.relabel(pair.layer_graph.to_host)
    t_ach = min(t, (cc.length - 2) // 2)
    trace.update(C=cc.vertices, chord=cc.chord, C_len=cc.length, core_min_degree=cc.core_min_degree)
    if cfg.mode == "strict" and cc.length < min_len:
        raise CycleTooShortError(f"|C| = {cc.length} < {min_len}", trace)

    low = frozenset(v for v in cc.vertices if layering.depth[v] == pair.index)
    tp = steiner_subtree(layering, low)
    trace.update(z=tp.root, j=tp.depth, T_prime=tuple(sorted(tp.vertices)))

    hub = frozenset(cc.vertices) | tp.vertices
    if set(d_cycle) & (hub - {tp.root}):
        case, cycles, info = case2_cycles(g, cc, tp, d_cycle, layering, t_ach)
        trace.update(info)
    else:
        z = tp.root
        z_path = _prefix_to(layering.path_to_root(z), layering.lca(z, y))
        p_rec, q_rec, route = disjoint_connector_paths(g, hub, z, d_cycle, z_path)
        trace.update(P=p_rec.vertices, Q=q_rec.vertices, w=q_rec.vertices[0], route=route)
        case, cycles = case1_cycles(g, cc, tp, d_cycle, p_rec.vertices, q_rec.vertices, t_ach)
    trace["case"] = case

    cycles.sort(key=len)
    result = ExtractionResult(cycles, case, t, t_ach, trace)
    report = verify_result(g, result)
    if not report.ok:
        raise AssemblyOverlapError(f"assembled cycles failed verification: {report.failures}", trace)
    return result


# --- independent verification ----------------------------------------------


@dataclass
class VerifyReport:
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_result(g: Graph, r: ExtractionResult) -> VerifyReport:
    """Re-check a result against ``g`` without touching the assembly code."""
    report = VerifyReport()
    declared = r.trace.get("declared_lengths")
    lengths = []
    for idx, cyc in enumerate(r.cycles):
        n = len(cyc)
        if any(not isinstance(v, int) or not 0 <= v < g.n for v in cyc):
            report.failures.append(f"cycle {idx}: UnknownVertex")
            lengths.append(n)
            continue
        if n < 3 or len(set(cyc)) != n:
            report.failures.append(f"cycle {idx}: NotSimple")
        for i in range(n):
            if not g.has_edge(cyc[i], cyc[(i + 1) % n]):
                report.failures.append(f"cycle {idx}: MissingEdge {cyc[i]}-{cyc[(i + 1) % n]}")
                break
        if declared is not None and declared[idx] != n:
            report.failures.append(f"cycle {idx}: LengthMismatch declared {declared[idx]} actual {n}")
        lengths.append(n)
    if any(n % 2 == 0 for n in lengths):
        report.failures.append("NotOdd")
    if any(b - a != 2 for a, b in zip(lengths, lengths[1:])):
        report.failures.append("NotConsecutive")
    if len(r.cycles) != r.t_achieved:
        report.failures.append(f"CountMismatch: {len(r.cycles)} cycles, t_achieved {r.t_achieved}")
    return report
