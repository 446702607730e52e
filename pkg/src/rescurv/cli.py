"""Command-line front end: ``rescurv <subcommand> ...``.

Exit status is 0 on success, 1 when ``verify`` finds a failing check and 2
for usage or input errors. Results go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

from .curvature import NEGATIVE, POSITIVE, curvature
from .errors import RescurvError
from .families import KINDS, FamilySpec, generate
from .graph import Graph, parse_edge_list, render_edge_list
from .resistance import omega_csv, resistance_matrix
from .verify import verify_all
from .walks import estimate_commute, estimate_hitting, tv_curve

SCHEMA = "rescurv/1"
DOT_FILL = {POSITIVE: "red", NEGATIVE: "blue"}


class UsageError(Exception):
    pass


def read_graph(source: str, stdin=None) -> Graph:
    if source == "-":
        text = (stdin or sys.stdin).read()
    else:
        with open(source, encoding="utf-8") as fh:
            text = fh.read()
    if text.lstrip().startswith("{"):
        return Graph.from_json(json.loads(text))
    return parse_edge_list(text)


def _dump(obj) -> str:
    return json.dumps({"schema": SCHEMA, **obj}, indent=2) + "\n"


def _vertex(g: Graph, token: str) -> int:
    try:
        return g.labels.index(token)
    except ValueError:
        raise UsageError(f"unknown vertex {token!r}") from None


def render_dot(g: Graph, signs) -> str:
    lines = ["graph G {", "  node [style=filled];"]
    for label, sign in zip(g.labels, signs):
        lines.append(f'  "{label}" [fillcolor={DOT_FILL.get(sign, "gray")}];')
    for i, j in g.sorted_edges():
        lines.append(f'  "{g.labels[i]}" -- "{g.labels[j]}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_curvature(args, g: Graph) -> tuple[int, str]:
    cr = curvature(resistance_matrix(g))
    if args.format == "json":
        return 0, _dump({"labels": list(g.labels), **cr.to_json()})
    if args.format == "csv":
        rows = ["label,kappa,sign"]
        rows += [f"{lab},{float(k)!r},{s}" for lab, k, s in zip(g.labels, cr.kappa, cr.signs)]
        return 0, "\n".join(rows) + "\n"
    width = max(len(lab) for lab in g.labels)
    out = [f"{lab:<{width}}  {float(k): .12g}  {s}" for lab, k, s in zip(g.labels, cr.kappa, cr.signs)]
    out.append(f"total {cr.total:.12g}  min {cr.kmin:.12g}  max {cr.kmax:.12g}  constant {cr.constant}")
    return 0, "\n".join(out) + "\n"


def cmd_verify(args, g: Graph) -> tuple[int, str]:
    report = verify_all(g, mixing=not args.no_mixing)
    code = 0 if report.passed else 1
    if args.format == "json":
        return code, _dump({k: v for k, v in report.to_json().items() if k != "schema"})
    out = []
    for r in report.records:
        if not r.applicable:
            out.append(f"SKIP  {r.name:<28} {r.reason}")
        else:
            verdict = "PASS" if r.passed else "FAIL"
            out.append(f"{verdict}  {r.name:<28} lhs={r.lhs:.10g} rhs={r.rhs:.10g} margin={r.margin:.3g}")
    out.append(f"{'all applicable checks pass' if report.passed else 'FAILURES present'}")
    return code, "\n".join(out) + "\n"


def cmd_family(args) -> tuple[int, str]:
    g = generate(FamilySpec.parse(args.kind, *args.params))
    if args.format == "json":
        return 0, json.dumps(g.to_json()) + "\n"
    return 0, render_edge_list(g)


def cmd_simulate(args, g: Graph) -> tuple[int, str]:
    if args.commute is not None:
        x, y = (_vertex(g, t) for t in args.commute)
        rd = resistance_matrix(g)
        est = estimate_commute(g, x, y, args.samples, args.seed, workers=args.workers)
        hit = estimate_hitting(g, x, y, args.samples, args.seed, workers=args.workers)
        return 0, _dump({
            "pair": list(args.commute),
            "exact_commute": 2 * g.m * float(rd.omega[x, y]),
            "commute": vars(est) | {"kind": "commute"},
            "hitting": vars(hit) | {"kind": "hitting"},
        })
    start = _vertex(g, args.mixing)
    horizon = args.horizon if args.horizon is not None else 10 * g.n ** 2
    curve = tv_curve(g, start, horizon, args.laziness)
    cr = curvature(resistance_matrix(g))
    bound = 4 / cr.kmin * g.m / g.n if cr.kmin > 0 else None
    return 0, curve.to_csv(bound)


def cmd_export(args, g: Graph) -> tuple[int, str]:
    if args.format == "json":
        return 0, json.dumps(g.to_json()) + "\n"
    if args.format == "edges":
        return 0, render_edge_list(g)
    rd = resistance_matrix(g)
    if args.format == "csv":
        return 0, omega_csv(g, rd)
    return 0, render_dot(g, curvature(rd).signs)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="rescurv", description="Resistance curvature of graphs.")
    sub = p.add_subparsers(dest="command", required=True, metavar="subcommand")

    def with_input(sp):
        sp.add_argument("source", nargs="?", help="edge-list or JSON graph file, '-' for stdin")
        sp.add_argument("--input", "-i", dest="input_flag", metavar="PATH")
        return sp

    sp = with_input(sub.add_parser("curvature", help="per-vertex curvature"))
    sp.add_argument("--format", "-f", choices=("json", "csv", "text"), default="text")

    sp = with_input(sub.add_parser("verify", help="run every theorem check"))
    sp.add_argument("--format", "-f", choices=("json", "text"), default="text")
    sp.add_argument("--no-mixing", action="store_true", help="skip the exact mixing check")

    sp = sub.add_parser("family", help="emit a named graph as an edge list")
    sp.add_argument("kind", choices=KINDS)
    sp.add_argument("params", nargs="*")
    sp.add_argument("--format", "-f", choices=("edges", "json"), default="edges")

    sp = with_input(sub.add_parser("simulate", help="Monte Carlo commute times or exact TV curves"))
    mode = sp.add_mutually_exclusive_group(required=True)
    mode.add_argument("--commute", nargs=2, metavar=("X", "Y"))
    mode.add_argument("--mixing", metavar="X", help="start vertex of the TV curve")
    sp.add_argument("--samples", type=int, default=20000)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--laziness", type=float, default=0.0)
    sp.add_argument("--horizon", "-T", type=int)

    sp = with_input(sub.add_parser("export", help="DOT, Omega CSV, or graph JSON"))
    fmt = sp.add_mutually_exclusive_group()
    fmt.add_argument("--format", "-f", choices=("dot", "csv", "json", "edges"))
    fmt.add_argument("--dot", dest="format", action="store_const", const="dot")
    fmt.add_argument("--csv", dest="format", action="store_const", const="csv")
    fmt.add_argument("--json", dest="format", action="store_const", const="json")
    return p


def run(argv=None, stdin=None) -> tuple[int, str, str]:
    """Execute one command; return ``(exit_code, stdout_text, stderr_text)``."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0), "", ""
    try:
        if args.command == "family":
            code, out = cmd_family(args)
            return code, out, ""
        if args.source and args.input_flag:
            raise UsageError("give the input either positionally or with --input, not both")
        source = args.source or args.input_flag
        if source is None:
            raise UsageError("no input given (use a path or '-')")
        g = read_graph(source, stdin)
        if args.command == "export" and args.format is None:
            args.format = "dot"
        handler = {
            "curvature": cmd_curvature,
            "verify": cmd_verify,
            "simulate": cmd_simulate,
            "export": cmd_export,
        }[args.command]
        code, out = handler(args, g)
        return code, out, ""
    except UsageError as exc:
        return 2, "", f"{parser.format_usage()}rescurv: error: {exc}\n"
    except (RescurvError, OSError, json.JSONDecodeError, KeyError, TypeError) as exc:
        return 2, "", f"rescurv: error: {exc}\n"


def main(argv=None) -> int:
    code, out, err = run(argv)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code


if __name__ == "__main__":
    sys.exit(main())
