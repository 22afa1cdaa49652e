"""Command-line entry point: analyze, extract, verify, generate, experiment.

Exit codes: 0 success, 2 unreadable input or plan, 3 theorem hypothesis not
met, 4 fewer than k cycles delivered, 5 verification failure, 1 internal
error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Any

from . import generators as gen
from .extractor import (
    ExtractionConfig,
    ExtractionError,
    ExtractionResult,
    HypothesisError,
    extract_consecutive_odd,
    verify_result,
)
from .graph import Graph, GraphError, average_degree, emit_graph, read_graph
from .invariants import bipartite_check, girth, is_connected, is_two_connected, odd_girth
from .oracle import cycle_space_bound, enumerate_cycles, longest_consecutive_odd_run

EXIT_OK, EXIT_INTERNAL, EXIT_INPUT, EXIT_HYPOTHESIS, EXIT_SHORT, EXIT_VERIFY = 0, 1, 2, 3, 4, 5


class PlanError(ValueError):
    pass


def _dump(record: Any, pretty: bool) -> str:
    if pretty:
        return json.dumps(record, indent=2)
    return json.dumps(record, separators=(",", ":"))


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _load_graph(path: str, dedup: bool) -> Graph:
    return read_graph(Path(path).read_text(), dedup=dedup)


def analyze_record(g: Graph) -> dict[str, Any]:
    record: dict[str, Any] = {"n": g.n, "m": g.m, "avg": str(average_degree(g)) if g.n else None}
    if is_connected(g):
        record["bipartite"] = bipartite_check(g).is_bipartite
    else:
        record["bipartite"] = odd_girth(g) is None
    conn = is_two_connected(g)
    record["two_connected"] = conn.ok
    if not conn.ok:
        record["certificate"] = conn.describe()
    record["girth"] = girth(g)
    record["odd_girth"] = odd_girth(g)
    return record


def cmd_analyze(args) -> int:
    g = _load_graph(args.input, args.dedup)
    _emit(_dump(analyze_record(g), args.pretty) + "\n", args.out)
    return EXIT_OK


def cmd_extract(args) -> int:
    g = _load_graph(args.input, args.dedup)
    cfg = ExtractionConfig(k=args.k, c=args.c, mode=args.mode, seed=args.seed)
    try:
        result = extract_consecutive_odd(g, cfg)
    except HypothesisError as exc:
        record = {"status": "hypothesis_failed", "reason": exc.reason, "detail": str(exc)}
        _emit(_dump(record, args.pretty) + "\n", args.out)
        return EXIT_HYPOTHESIS
    except ExtractionError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    _emit(result.to_json(args.pretty) + "\n", args.out)
    return EXIT_OK if result.t_achieved >= args.k else EXIT_SHORT


def cmd_verify(args) -> int:
    g = _load_graph(args.graph, args.dedup)
    try:
        result = ExtractionResult.from_dict(json.loads(Path(args.result).read_text()))
    except (ValueError, KeyError, TypeError) as exc:
        print(f"error: cannot read result: {exc}", file=sys.stderr)
        return EXIT_INPUT
    report = verify_result(g, result)
    _emit(_dump({"pass": report.ok, "failures": report.failures}, args.pretty) + "\n", args.out)
    return EXIT_OK if report.ok else EXIT_VERIFY


def _parse_base(spec: str) -> Graph:
    family, _, arg = spec.partition(":")
    builders = {"cycle": gen.cycle, "complete": gen.complete, "path": gen.path}
    if family in builders and arg.isdigit():
        return builders[family](int(arg))
    if family == "petersen":
        return gen.petersen()
    return read_graph(Path(spec).read_text())


def build_family(family: str, params: dict[str, Any]) -> Graph:
    try:
        if family == "complete":
            return gen.complete(int(params["n"]))
        if family == "kbip":
            return gen.complete_bipartite(int(params["a"]), int(params["b"]))
        if family == "cycle":
            return gen.cycle(int(params["n"]))
        if family == "theta":
            l1, l2, l3 = (int(x) for x in str(params["lengths"]).split(","))
            return gen.theta(l1, l2, l3)
        if family == "blowup":
            return gen.blowup(gen.BlowupSpec(_parse_base(str(params["base"])), int(params["t"])))
        if family == "cutodd":
            return gen.cut_vertex_odd_family(int(params["m"]), int(params["l"]))
        if family == "gnp":
            return gen.gnp(int(params["n"]), float(params["p"]), int(params.get("seed", 0)))
    except KeyError as exc:
        raise gen.BadParameterError(f"family {family} needs parameter {exc.args[0]}") from exc
    raise gen.BadParameterError(f"unknown family {family!r}")


def cmd_generate(args) -> int:
    params = {k: v for k, v in vars(args).items() if v is not None}
    g = build_family(args.family, params)
    _emit(emit_graph(g), args.out)
    return EXIT_OK


# --- experiments ------------------------------------------------------------

CSV_HEADER = [
    "trial", "family", "params", "k", "seed", "status", "case",
    "t_target", "t_achieved", "c_len", "lengths", "sound", "oracle_run",
]


@dataclass(frozen=True)
class ExperimentPlan:
    family: str
    grid: tuple[dict[str, Any], ...]
    ks: tuple[int, ...]
    mode: str
    trials: int
    seed_base: int
    cap: int
    out: str | None = None

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> ExperimentPlan:
        try:
            family = str(data["family"])
            grid = tuple(dict(cell) for cell in data["grid"])
            ks = data.get("k", [2])
            ks = tuple(int(k) for k in (ks if isinstance(ks, list) else [ks]))
            plan = cls(
                family,
                grid,
                ks,
                str(data.get("mode", "relaxed")),
                int(data.get("trials", 1)),
                int(data.get("seed_base", 0)),
                int(data.get("cap", 20000)),
                data.get("out"),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise PlanError(f"bad plan: {exc}") from exc
        if plan.trials < 1:
            raise PlanError("trials must be >= 1")
        if not plan.grid:
            raise PlanError("grid must be nonempty")
        if not plan.ks or min(plan.ks) < 1:
            raise PlanError("k values must be >= 1")
        if plan.mode not in ("strict", "relaxed"):
            raise PlanError(f"unknown mode {plan.mode!r}")
        return plan


def run_trial(index: int, plan: ExperimentPlan, cell: dict[str, Any], k: int, seed: int) -> list[Any]:
    params = dict(cell)
    if plan.family == "gnp":
        params["seed"] = seed
    g = build_family(plan.family, params)
    row: list[Any] = [index, plan.family, json.dumps(params, sort_keys=True, separators=(",", ":")), k, seed]
    try:
        result = extract_consecutive_odd(g, ExtractionConfig(k=k, mode=plan.mode, seed=seed))
    except GraphError as exc:
        reason = exc.reason if isinstance(exc, ExtractionError) else type(exc).__name__
        return row + [f"failed:{reason}", "", "", "", "", "", "", _oracle_run(g, plan.cap)]
    sound = verify_result(g, result).ok
    lengths = " ".join(str(x) for x in result.lengths)
    status = "ok" if result.t_achieved >= k else "short"
    return row + [
        status, result.case, result.t_target, result.t_achieved, result.trace.get("C_len", ""),
        lengths, "pass" if sound else "FAIL", _oracle_run(g, plan.cap),
    ]


def _oracle_run(g: Graph, cap: int) -> str:
    if cycle_space_bound(g) > cap:
        return "skipped"
    return str(longest_consecutive_odd_run(enumerate_cycles(g, cap)))


def run_experiment(plan: ExperimentPlan) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    index = 0
    for cell in plan.grid:
        for k in plan.ks:
            for trial in range(plan.trials):
                writer.writerow(run_trial(index, plan, cell, k, plan.seed_base + trial))
                index += 1
    return buf.getvalue()


def cmd_experiment(args) -> int:
    try:
        plan = ExperimentPlan.from_dict(json.loads(Path(args.plan).read_text()))
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if args.cap is not None:
        plan = replace(plan, cap=args.cap)
    _emit(run_experiment(plan), args.out or plan.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--dedup", action="store_true", help="collapse duplicate edge lines")
    common.add_argument("--pretty", action="store_true", help="indented JSON output")
    common.add_argument("--out", metavar="PATH", help="write output here instead of stdout")

    parser = argparse.ArgumentParser(prog="oddcycles", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="basic structural report")
    p.add_argument("input")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("extract", parents=[common], help="extract cycles of consecutive odd lengths")
    p.add_argument("input")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--c", type=int, default=456)
    p.add_argument("--mode", choices=("strict", "relaxed"), default="relaxed")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("verify", parents=[common], help="re-check an extraction result")
    p.add_argument("graph")
    p.add_argument("result")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("generate", parents=[common], help="emit a graph family as an edge list")
    p.add_argument("--family", required=True, choices=("complete", "kbip", "cycle", "theta", "blowup", "cutodd", "gnp"))
    p.add_argument("--n", type=int)
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--lengths", help="theta path lengths, e.g. 1,2,3")
    p.add_argument("--base", help="blow-up base: cycle:7, complete:4, petersen or a file")
    p.add_argument("--t", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--l", type=int)
    p.add_argument("--p", type=float)
    p.add_argument("--seed", type=int)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("experiment", parents=[common], help="run a JSON experiment plan, emit CSV")
    p.add_argument("plan")
    p.add_argument("--cap", type=int, help="oracle enumeration cap (overrides the plan)")
    p.set_defaults(func=cmd_experiment)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
