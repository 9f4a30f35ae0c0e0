"""Command line entry point: ``upo check|compose|pipeline|enumerate|export-dot``.

Exit status: 0 when every requested check passes, 1 when a check fails,
2 when the input is unusable (parse, usage or precondition errors).
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from .axioms import CheckReport, check_admissible, check_Q, check_U
from .compose import compose
from .errors import ComposeError, NotAdmissibleUpo, ParseError, TooLarge, UpoError
from .io import UpgDocument, export_dot, parse_layers, parse_upg, read_text, serialize_upg, write_text
from .layers import pipeline
from .oracle import enumerate_upos

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _Usage(Exception):
    pass


def _load(path: str, need_order: bool = True) -> UpgDocument:
    try:
        doc = parse_upg(read_text(path))
    except OSError as exc:
        raise _Usage(f"{path}: {exc.strerror or exc}") from exc
    except ParseError as exc:
        raise _Usage(f"{path}: {exc}") from exc
    if need_order and doc.order is None:
        raise _Usage(f"{path}: no 'order' directive")
    return doc


def _print_report(name: str, report: CheckReport, doc: UpgDocument | None) -> None:
    for d in report.diagnostics:
        where = ""
        if doc is not None:
            lines = sorted({doc.source_span[w] for w in d.witness if w in doc.source_span})
            if lines:
                where = " (line " + ", ".join(map(str, lines)) + ")"
        print(f"  {name} {d.axiom} [{' '.join(d.witness)}]{where}: {d.message}")
    if report.truncated:
        print(f"  {name}: further diagnostics omitted")


def cmd_check(args: argparse.Namespace) -> int:
    doc = _load(args.file)
    g, order = doc.graph, doc.order
    reports: list[tuple[str, CheckReport]] = []
    if args.definition in ("u", "both"):
        reports.append(("U", check_U(g, order)))
    if args.definition in ("q", "both"):
        reports.append(("Q", check_Q(g, order)))
    if args.admissible:
        reports.append(("admissible", check_admissible(g, order)))
    print(", ".join(f"{name}: {'pass' if r.passed else 'fail'}" for name, r in reports))
    for name, r in reports:
        _print_report(name, r, doc)
    return EXIT_OK if all(r.passed for _, r in reports) else EXIT_FAIL


def cmd_compose(args: argparse.Namespace) -> int:
    upper, lower = _load(args.file1), _load(args.file2)
    try:
        result = compose((upper.graph, upper.order), (lower.graph, lower.order), check=not args.no_check)
    except NotAdmissibleUpo as exc:
        print(f"{args.file1 if exc.side == 'G1' else args.file2}: not an admissible UPO-graph", file=sys.stderr)
        _print_report(exc.side, exc.report, upper if exc.side == "G1" else lower)
        return EXIT_FAIL
    write_text(args.output, serialize_upg(UpgDocument(result.graph, result.order)))
    return EXIT_OK


def cmd_pipeline(args: argparse.Namespace) -> int:
    try:
        stack = parse_layers(read_text(args.layerfile))
    except OSError as exc:
        raise _Usage(f"{args.layerfile}: {exc.strerror or exc}") from exc
    except ParseError as exc:
        raise _Usage(f"{args.layerfile}: {exc}") from exc
    result = pipeline(stack)
    write_text(args.output, serialize_upg(UpgDocument(result.graph, result.order)))
    return EXIT_OK


def cmd_enumerate(args: argparse.Namespace) -> int:
    doc = _load(args.file, need_order=False)
    result = enumerate_upos(doc.graph, args.admissible, args.definition, args.limit, force=args.force)
    if args.count_only:
        print(len(result))
    else:
        for order in result.orders:
            print(" ".join(order))
    if not result.exhausted:
        print(f"# stopped after {args.limit} orders", file=sys.stderr)
    return EXIT_OK


def cmd_export_dot(args: argparse.Namespace) -> int:
    doc = _load(args.file, need_order=False)
    write_text(args.output, export_dot(doc))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="upo", description="Upward planar orders on progressive graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="verify the UPO axioms of a UPG file")
    p.add_argument("file")
    p.add_argument("--definition", choices=("u", "q", "both"), default="q")
    p.add_argument("--admissible", action="store_true", help="also check the boundary condition")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("compose", help="stack FILE2 below FILE1")
    p.add_argument("file1")
    p.add_argument("file2")
    p.add_argument("-o", "--output", default="-")
    p.add_argument("--no-check", action="store_true", help="skip the admissibility preconditions")
    p.set_defaults(func=cmd_compose)

    p = sub.add_parser("pipeline", help="compose a layer file top to bottom")
    p.add_argument("layerfile")
    p.add_argument("-o", "--output", default="-")
    p.set_defaults(func=cmd_pipeline)

    p = sub.add_parser("enumerate", help="list every UPO of a small graph")
    p.add_argument("file")
    p.add_argument("--admissible", action="store_true")
    p.add_argument("--definition", choices=("u", "q"), default="q")
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--limit", type=int, default=None)
    p.add_argument("--force", action="store_true", help="lift the edge-count cap")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("export-dot", help="write a graphviz rendering")
    p.add_argument("file")
    p.add_argument("-o", "--output", default="-")
    p.set_defaults(func=cmd_export_dot)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except _Usage as exc:
        print(f"upo: {exc}", file=sys.stderr)
    except (ComposeError, TooLarge) as exc:
        where = f" (stage {exc.stage})" if getattr(exc, "stage", None) is not None else ""
        print(f"upo: {exc}{where}", file=sys.stderr)
    except UpoError as exc:
        print(f"upo: {exc}", file=sys.stderr)
    return EXIT_USAGE
