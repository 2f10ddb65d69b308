"""Command-line entry point: ``weighted-avec <command> [options]``.

Commands: avec, extremal, optimize, verify, ng, gen. Output is a plain
table by default and a JSON document with ``--json``. Exit status is 0 when
every check passed, 1 on a bound violation, 2 on usage, parse or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass, field
from pathlib import Path

from . import errors
from .extremal import (
    bounds_for,
    closed_form_bounds,
    close,
    mincut_weights,
    spanning_tree_zero_weights,
    tree_max_weights,
    tree_min_weights,
)
from .graph import (
    GENERATORS,
    Graph,
    WeightFunction,
    format_edge_list,
    format_weights,
    generate,
    is_tree,
    ones,
    parse_edge_list,
    parse_weights,
    require_connected,
)
from .metrics import eccentricity_profile
from .nordhaus_gaddum import COMPLEMENT_DISCONNECTED, attains, classify_pair, ng_bounds
from .optimizer import grid_search, local_search
from .verification import run_sweep

EXIT_OK, EXIT_VIOLATION, EXIT_ERROR = 0, 1, 2


@dataclass
class RunReport:
    command: str
    inputs: dict
    results: dict = field(default_factory=dict)
    status: str = "ok"
    warnings: list = field(default_factory=list)

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "RunReport":
        data = json.loads(text)
        return cls(**data)

    @property
    def exit_code(self) -> int:
        return {"ok": EXIT_OK, "violation": EXIT_VIOLATION}.get(self.status, EXIT_ERROR)


def _weights_payload(w: WeightFunction) -> list:
    return [[u, v, x] for (u, v), x in zip(w.graph.edges, w.values)]


def _load_graph(path: str) -> tuple[Graph, WeightFunction]:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise errors.ParseError(f"cannot read {path}: {exc}") from None
    return parse_edge_list(text)


def _resolve_weights(g: Graph, inline: WeightFunction, spec: str | None) -> WeightFunction:
    if spec is None:
        return inline
    if spec == "all-ones":
        return ones(g)
    try:
        return parse_weights(g, Path(spec).read_text())
    except OSError as exc:
        raise errors.ParseError(f"cannot read {spec}: {exc}") from None


def cmd_avec(args) -> RunReport:
    g, inline = _load_graph(args.graph)
    w = _resolve_weights(g, inline, args.weights)
    report = RunReport("avec", {"graph": args.graph, "weights": args.weights or "inline"})
    require_connected(g)
    normalized = w.is_normalized()
    if not normalized:
        msg = f"weights sum to {w.total!r}, not m = {g.m}"
        if not args.allow_unnormalized:
            raise errors.NotNormalized(msg)
        report.warnings.append(msg + "; bound checks skipped")
    prof = eccentricity_profile(g, w)
    report.results = {"ecc": list(prof.ecc), "EX": prof.EX, "avec": prof.avec}
    if normalized:
        b = bounds_for(g, w)
        report.results["bounds"] = {
            "lower": b.lower,
            "upper": b.upper,
            "attains_lower": b.attains_lower,
            "attains_upper": b.attains_upper,
        }
        if not b.within():
            report.status = "violation"
    return report


def extremal_weights(g: Graph, direction: str) -> WeightFunction:
    if is_tree(g):
        if direction == "min" and g.n >= 3:
            return tree_min_weights(g)
        return tree_max_weights(g)
    return spanning_tree_zero_weights(g) if direction == "min" else mincut_weights(g)


def cmd_extremal(args) -> RunReport:
    g, _ = _load_graph(args.graph)
    require_connected(g)
    w = extremal_weights(g, args.direction)
    value = eccentricity_profile(g, w).avec
    lower, upper = closed_form_bounds(g)
    bound = lower if args.direction == "min" else upper
    report = RunReport("extremal", {"graph": args.graph, "direction": args.direction})
    report.results = {"weights": _weights_payload(w), "avec": value, "bound": bound}
    if not close(value, bound):
        report.status = "violation"
    if args.out:
        Path(args.out).write_text(format_weights(w))
        report.results["weights_file"] = args.out
    return report


def cmd_optimize(args) -> RunReport:
    g, _ = _load_graph(args.graph)
    if args.method == "grid":
        res = grid_search(g, args.direction, args.resolution)
    else:
        res = local_search(g, args.direction, args.restarts, args.seed)
    lower, upper = closed_form_bounds(g)
    bound = lower if args.direction == "min" else upper
    report = RunReport(
        "optimize",
        {
            "graph": args.graph,
            "direction": args.direction,
            "method": args.method,
            "resolution": args.resolution,
            "restarts": args.restarts,
            "seed": args.seed,
        },
    )
    gap = res.best_value - bound if args.direction == "min" else bound - res.best_value
    report.results = {
        "best_value": res.best_value,
        "best_weights": _weights_payload(res.best_weights),
        "evaluations": res.evaluations,
        "method": res.method,
        "direction": res.direction,
        "closed_form": bound,
        "gap": gap,
    }
    # a search result beyond the closed form would contradict the bound
    if gap < -1e-9 * max(1.0, abs(bound)):
        report.status = "violation"
    return report


def cmd_verify(args) -> RunReport:
    res = run_sweep(args.scope, args.max_n, args.samples, args.seed)
    report = RunReport(
        "verify",
        {"scope": args.scope, "max_n": args.max_n, "samples": args.samples, "seed": args.seed},
    )
    report.results = {
        "structures": res.structures,
        "checks": res.checks,
        "violations": res.violations[:20],
        "violation_count": len(res.violations),
    }
    report.status = "ok" if res.ok else "violation"
    return report


def cmd_ng(args) -> RunReport:
    g, _ = _load_graph(args.graph)
    report = RunReport("ng", {"graph": args.graph})
    case = classify_pair(g)
    report.results["case"] = case
    if case == COMPLEMENT_DISCONNECTED:
        report.warnings.append("complement is disconnected; no bounds apply")
        return report
    base = ng_bounds(g)
    report.results.update(
        {
            "sum_bounds": [base.sum_lower, base.sum_upper],
            "prod_bounds": [base.prod_lower, base.prod_upper],
            "tree_is_complement": base.tree_is_complement,
        }
    )
    for target in ("sum_lower", "sum_upper"):
        rep = ng_bounds(g, target)
        report.results[target] = {
            "achieved_sum": rep.achieved_sum,
            "achieved_prod": rep.achieved_prod,
            "attained": attains(rep),
            "weights_g": _weights_payload(rep.witness_g),
            "weights_gbar": _weights_payload(rep.witness_gbar),
        }
        if not (rep.sum_within(rep.achieved_sum) and rep.prod_within(rep.achieved_prod)):
            report.status = "violation"
    return report


def cmd_gen(args) -> RunReport:
    g = generate(args.kind, args.n)
    text = format_edge_list(g)
    if args.out:
        Path(args.out).write_text(text)
    report = RunReport("gen", {"kind": args.kind, "n": args.n})
    report.results = {"n": g.n, "m": g.m, "edges": [list(e) for e in g.edges], "edge_list": text}
    return report


def _fmt(x) -> str:
    if isinstance(x, bool) or x is None:
        return str(x)
    if isinstance(x, float):
        return f"{x:.12g}"
    if isinstance(x, list):
        return "[" + ", ".join(_fmt(y) for y in x) + "]"
    return str(x)


def render_table(report: RunReport) -> str:
    lines = [f"command: {report.command}", f"status:  {report.status}"]
    if report.command == "gen" and "edge_list" in report.results:
        return report.results["edge_list"].rstrip("\n")
    for key, val in report.results.items():
        if isinstance(val, dict):
            lines.append(f"{key}:")
            lines.extend(f"  {k:<16} {_fmt(v)}" for k, v in val.items())
        elif key in ("weights", "best_weights") or (key == "violations" and val):
            lines.append(f"{key}:")
            lines.extend(f"  {_fmt(row)}" for row in val)
        elif key == "ecc":
            lines.append("vertex  e_w")
            lines.extend(f"{i:<7} {_fmt(x)}" for i, x in enumerate(val))
        else:
            lines.append(f"{key:<18} {_fmt(val)}")
    lines.extend(f"warning: {msg}" for msg in report.warnings)
    return "\n".join(lines)


COMMANDS = {
    "avec": cmd_avec,
    "extremal": cmd_extremal,
    "optimize": cmd_optimize,
    "verify": cmd_verify,
    "ng": cmd_ng,
    "gen": cmd_gen,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON report")

    parser = argparse.ArgumentParser(prog="weighted-avec", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("avec", parents=[common], help="eccentricities, EX and avec")
    p.add_argument("--graph", required=True)
    p.add_argument("--weights", help="weights file of 'u v w' lines, or 'all-ones'")
    p.add_argument("--allow-unnormalized", action="store_true")

    p = sub.add_parser("extremal", parents=[common], help="extremal weighting and its avec")
    p.add_argument("--graph", required=True)
    p.add_argument("--direction", choices=["min", "max"], required=True)
    p.add_argument("--out", help="write the weighting to this file")

    p = sub.add_parser("optimize", parents=[common], help="numerical search over weightings")
    p.add_argument("--graph", required=True)
    p.add_argument("--direction", choices=["min", "max"], required=True)
    p.add_argument("--method", choices=["grid", "local"], default="local")
    p.add_argument("--resolution", type=int, default=8)
    p.add_argument("--restarts", type=int, default=20)
    p.add_argument("--seed", type=int, default=42)

    p = sub.add_parser("verify", parents=[common], help="check all bounds on exhaustive families")
    p.add_argument("--scope", choices=["trees", "graphs", "ng"], required=True)
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=42)

    p = sub.add_parser("ng", parents=[common], help="bounds for a graph and its complement")
    p.add_argument("--graph", required=True)

    p = sub.add_parser("gen", parents=[common], help="write a standard graph as an edge list")
    p.add_argument("kind", choices=sorted(GENERATORS))
    p.add_argument("n", type=int)
    p.add_argument("--out")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        report = COMMANDS[args.command](args)
    except errors.GraphError as exc:
        report = RunReport(args.command, {k: v for k, v in vars(args).items() if k != "command"})
        report.status = "error"
        report.results = {"error": type(exc).__name__, "message": str(exc)}
    if args.json:
        print(report.to_json())
    else:
        print(render_table(report))
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
