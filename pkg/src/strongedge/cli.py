"""Command-line front end (``strongedge``)."""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .audit import cw_audit, sharpness_audit
from .coloring import (
    ColoringError,
    exact_strong_chromatic_index,
    format_coloring,
    parse_coloring,
    verify_strong_coloring,
)
from .density import mad
from .girth import girth_profile
from .graph import GraphError, SimpleGraph, format_graph, parse_graph
from .oddgraph import SubsetVertex, WalkError, format_walk, odd_graph
from .reduction import (
    AlgorithmMode,
    ExtensionError,
    PreconditionError,
    ReductionStuck,
    check_preconditions,
    strong_color_sparse,
)
from .walks import WalkRequest, construct_avoiding_walk, construct_prescribed_walk, dp_special_walk

EXIT_OK, EXIT_INPUT, EXIT_VERIFY, EXIT_FAILURE = 0, 1, 2, 3
VARIANTS = ("high-girth", "subcubic-girth41", "mad-based", "subcubic-mad")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


class _Failure(Exception):
    def __init__(self, code: int, message: str, payload: dict | None = None):
        super().__init__(message)
        self.code = code
        self.payload = payload or {}


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise _Failure(EXIT_INPUT, f"cannot read {path}: {exc.strerror}") from None


def _load_graph(path: str) -> SimpleGraph:
    return parse_graph(_read_text(path))


def _num(x):
    return None if x == float("inf") else x


def _emit(args, text: str, payload: dict) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True, default=str))
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


# -- commands -------------------------------------------------------------------

def cmd_invariants(args) -> int:
    g = _load_graph(args.file)
    prof = girth_profile(g)
    d = mad(g)
    delta = args.delta or g.max_degree
    variants = []
    for v in VARIANTS:
        try:
            mode = AlgorithmMode(v, delta)
        except ValueError:
            continue
        checks = check_preconditions(g, mode)
        variants.append({"variant": v, "delta": delta, "holds": all(c.ok for c in checks),
                         "checks": [{"name": c.name, "ok": c.ok, "measured": str(c.measured),
                                     "required": c.required} for c in checks]})
    payload = {"vertices": g.vertex_count, "edges": g.edge_count, "max_degree": g.max_degree,
               "girth": _num(prof.girth), "odd_girth": _num(prof.odd_girth),
               "even_girth": _num(prof.even_girth), "mad": str(d), "mad_witness": list(d.witness),
               "preconditions": variants}
    lines = [f"vertices     {g.vertex_count}", f"edges        {g.edge_count}",
             f"max degree   {g.max_degree}",
             f"girth        {prof.girth}", f"odd girth    {prof.odd_girth}",
             f"even girth   {prof.even_girth}",
             f"mad          {d}  (witness of {len(d.witness)} vertices)"]
    for v in variants:
        lines.append(f"{v['variant']} (delta={delta}): {'holds' if v['holds'] else 'fails'}")
        for c in v["checks"]:
            lines.append(f"  {'ok  ' if c['ok'] else 'FAIL'} {c['name']} = {c['measured']} ({c['required']})")
    if not variants:
        lines.append(f"no algorithm variant accepts delta={delta}")
    _emit(args, "\n".join(lines), payload)
    return EXIT_OK


def cmd_color(args) -> int:
    g = _load_graph(args.file)
    mode = AlgorithmMode(args.mode, args.delta)
    try:
        res = strong_color_sparse(g, mode, strict=args.strict)
    except PreconditionError as exc:
        raise _Failure(EXIT_FAILURE, f"precondition failed: {exc}",
                       {"error": "precondition", "message": str(exc)}) from None
    except ReductionStuck as exc:
        raise _Failure(EXIT_FAILURE, f"reduction stuck: {exc}",
                       {"error": "stuck", "message": str(exc), "graph": format_graph(exc.graph)}) from None
    except ExtensionError as exc:
        raise _Failure(EXIT_FAILURE, f"extension failed: {exc}",
                       {"error": "extension", "message": str(exc)}) from None
    coloring_text = format_coloring(res.coloring)
    trace_text = res.trace.format()
    if args.out:
        Path(args.out).write_text(coloring_text)
    if args.trace:
        Path(args.trace).write_text(trace_text)
    payload = {"colors_used": res.coloring.num_colors, "palette": res.coloring.palette,
               "coloring": coloring_text, "trace": trace_text,
               "checks": [{"name": c.name, "ok": c.ok, "measured": str(c.measured)} for c in res.checks]}
    text = ""
    if not args.out:
        text += coloring_text
    if not args.trace:
        text += trace_text
    if not text:
        text = f"{res.coloring.num_colors} colours used (palette {res.coloring.palette})"
    _emit(args, text, payload)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.file == "-" and args.coloring == "-":
        raise _Failure(EXIT_INPUT, "only one of FILE and COLORING may be '-'")
    g = _load_graph(args.file)
    c = parse_coloring(_read_text(args.coloring), g)
    bad = verify_strong_coloring(g, c)
    payload = {"valid": not bad, "palette": c.palette, "colors_used": c.num_colors,
               "violations": [[list(e), list(f)] for e, f in bad]}
    if bad:
        text = "INVALID\n" + "\n".join(f"conflict {e} {f} colour {c[e]}" for e, f in bad)
    else:
        text = f"OK {c.num_colors} colours"
    _emit(args, text, payload)
    return EXIT_VERIFY if bad else EXIT_OK


def cmd_chis(args) -> int:
    g = _load_graph(args.file)
    res = exact_strong_chromatic_index(g, args.budget)
    payload = {"value": res.value, "exact": res.exact, "lower_bound": res.lower_bound,
               "nodes": res.nodes, "coloring": format_coloring(res.coloring)}
    if res.exact:
        _emit(args, str(res.value), payload)
        return EXIT_OK
    _emit(args, f"inexact: between {res.lower_bound} and {res.value} (budget exhausted)", payload)
    return EXIT_FAILURE


def cmd_walk(args) -> int:
    start = SubsetVertex.parse(args.n, args.start)
    end = SubsetVertex.parse(args.n, args.end)
    mode = "avoiding" if args.mode == "avoiding" or args.avoid else "prescribed"
    req = WalkRequest(start, end, args.l1, args.l2, args.len, mode)
    if args.mode == "dp":
        walk = dp_special_walk(req)
        if walk is None:
            raise _Failure(EXIT_FAILURE, "no such walk exists", {"exists": False})
    elif mode == "avoiding":
        walk = construct_avoiding_walk(req)
    else:
        walk = construct_prescribed_walk(req)
    text = format_walk(walk)
    _emit(args, text, {"exists": True, "n": walk.n, "length": walk.length,
                       "vertices": [str(v) for v in walk.vertices], "labels": list(walk.labels),
                       "text": text})
    return EXIT_OK


def cmd_oddgraph(args) -> int:
    og = odd_graph(args.n)
    table = og.vertex_table()
    text = "".join(f"# v {row}\n" for row in table) + format_graph(og.graph)
    labels = og.edge_labelling()
    _emit(args, text, {"n": args.n, "graph": format_graph(og.graph),
                       "vertices": {i: str(v) for i, v in enumerate(og.vertices)},
                       "labels": [[u, v, lab] for (u, v), lab in sorted(labels.items())]})
    return EXIT_OK


def _audit_report(args, lines) -> int:
    ok = all(line.passed for line in lines)
    _emit(args, "\n".join(map(str, lines)), {"passed": ok, "lines": [ln.as_dict() for ln in lines]})
    return EXIT_OK if ok else EXIT_VERIFY


def cmd_repro_sharpness(args) -> int:
    return _audit_report(args, sharpness_audit(args.n))


def cmd_repro_cw(args) -> int:
    return _audit_report(args, cw_audit(args.kappa, args.delta, args.budget))


# -- parser --------------------------------------------------------------------

def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="strongedge", description="Strong edge colouring via special walks in odd graphs.")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--threads", type=_positive, default=1,
                   help="worker threads (computations are currently single-threaded)")
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("invariants", help="degree, girth profile, mad and theorem preconditions")
    s.add_argument("file")
    s.add_argument("--delta", type=_positive, help="degree bound for precondition checks (default: Δ(G))")
    s.set_defaults(func=cmd_invariants)

    s = sub.add_parser("color", help="strong (2Δ-1)-edge-colouring with a reduction trace")
    s.add_argument("file")
    s.add_argument("--delta", type=_positive, required=True)
    s.add_argument("--mode", choices=VARIANTS, required=True)
    s.add_argument("--strict", action="store_true", help="fail when a theorem precondition fails")
    s.add_argument("-o", "--out", help="write the colouring here instead of stdout")
    s.add_argument("--trace", help="write the trace here instead of stdout")
    s.set_defaults(func=cmd_color)

    s = sub.add_parser("verify", help="check a colouring; exit 0 iff it is strong")
    s.add_argument("file")
    s.add_argument("coloring")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("chis", help="exact strong chromatic index")
    s.add_argument("file")
    s.add_argument("--budget", type=_positive, default=2_000_000, help="search node limit")
    s.set_defaults(func=cmd_chis)

    s = sub.add_parser("walk", help="special walk in O_n with given ends and end labels")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--start", required=True, help="comma-separated subset, e.g. 1,2")
    s.add_argument("--end", required=True)
    s.add_argument("--l1", type=int, required=True, help="first edge label")
    s.add_argument("--l2", type=int, required=True, help="last edge label")
    s.add_argument("--len", type=_positive, required=True)
    s.add_argument("--mode", choices=("prescribed", "avoiding", "dp"), default="prescribed")
    s.add_argument("--avoid", action="store_true", help="with --mode dp: avoid the labels instead")
    s.set_defaults(func=cmd_walk)

    s = sub.add_parser("oddgraph", help="export O_n with its vertex table")
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(func=cmd_oddgraph)

    s = sub.add_parser("repro-sharpness", help="walk-length sharpness audit")
    s.add_argument("--n", type=int, choices=(3, 4), required=True)
    s.set_defaults(func=cmd_repro_sharpness)

    s = sub.add_parser("repro-cw", help="strong chromatic index of a cycle caterpillar")
    s.add_argument("--kappa", type=int, required=True)
    s.add_argument("--delta", type=int, required=True)
    s.add_argument("--budget", type=_positive, default=2_000_000)
    s.set_defaults(func=cmd_repro_cw)
    return p


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.ERROR,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except _Failure as exc:
        if args.json:
            print(json.dumps({"error": "failure", "message": str(exc), **exc.payload}, indent=2, sort_keys=True))
        print(f"strongedge: {exc}", file=sys.stderr)
        return exc.code
    except (GraphError, ColoringError, WalkError, ValueError) as exc:
        if args.json:
            print(json.dumps({"error": str(exc)}, indent=2))
        print(f"strongedge: invalid input: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
