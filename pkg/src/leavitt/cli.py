"""Command-line surface with deterministic text, JSON, and DOT output.

Exit codes: 0 success, 1 usage error, 2 input or validation error,
3 verification failure.  All diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import io
import json
import sys
from contextlib import redirect_stderr, redirect_stdout

from . import extremal, oracle, partitions, truncate
from .classify import classification, lpa_isomorphic, normalize_type
from .graphs import parse_graph, to_dot

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVALID = 2
EXIT_VERIFY_FAILED = 3

VERIFY_DEFAULT_TREE_N = 6


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _read_graph(path: str):
    if path == "-":
        return parse_graph(sys.stdin.read())
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph(fh.read())


def _parse_type(text: str):
    try:
        parts = [int(tok) for tok in text.split(",")]
    except ValueError:
        raise ValueError(f"bad type {text!r}: expected comma-separated integers")
    return normalize_type(parts)


def _write_dot(path: str | None, dot: str) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(dot)


def _cmd_classify(args) -> int:
    g = _read_graph(args.file)
    print(_dumps(classification(g)))
    return EXIT_OK


def _cmd_truncate(args) -> int:
    if args.type:
        t = _parse_type(args.type)
    else:
        t = classification(_read_graph(args.file))["type"]
    tree = truncate.truncated_tree(t)
    code = truncate.alpha_encode(t)
    dot = to_dot(tree.graph)
    _write_dot(args.dot, dot)
    if args.format == "json":
        print(
            _dumps(
                {
                    "type": list(normalize_type(t)),
                    "kappa": len(tree.graph.vertices),
                    "alpha": code,
                    "dot": dot,
                }
            )
        )
    else:
        print(f"type: {_dumps(list(normalize_type(t)))}")
        print(f"kappa: {len(tree.graph.vertices)}")
        print(f"alpha: {code}")
        print(dot, end="")
    return EXIT_OK


def _cmd_iso(args) -> int:
    g1 = _read_graph(args.file1)
    g2 = _read_graph(args.file2)
    same = lpa_isomorphic(g1, g2)
    if args.format == "json":
        print(
            _dumps(
                {
                    "isomorphic": same,
                    "type1": classification(g1)["type"],
                    "type2": classification(g2)["type"],
                }
            )
        )
    else:
        print("isomorphic" if same else "not isomorphic")
    return EXIT_OK


def _cmd_enum_truncated(args) -> int:
    types = truncate.enumerate_truncated_trees(args.n)
    width = args.n - 2
    codes = ["1" + (format(m, f"0{width}b") if width else "") + "0" for m in range(len(types))]
    if args.format == "json":
        print(_dumps([{"code": c, "type": list(t)} for c, t in zip(codes, types)]))
    else:
        for c, t in zip(codes, types):
            print(f"{c} {_dumps(list(t))}")
    return EXIT_OK


def _extremal_json(report) -> dict:
    return {
        "n": report.n,
        "s": report.s,
        "value": report.value,
        "witness_dot": to_dot(report.witness),
    }


def _cmd_extremal(args, minimize: bool) -> int:
    if args.sinks is not None:
        report = (
            extremal.min_dim_fixed_sinks(args.n, args.sinks)
            if minimize
            else extremal.max_dim_fixed_sinks(args.n, args.sinks)
        )
    else:
        report = extremal.min_dim(args.n) if minimize else extremal.max_dim(args.n)
    dot = to_dot(report.witness)
    _write_dot(args.dot, dot)
    if args.format == "json":
        print(_dumps(_extremal_json(report)))
    else:
        print(f"n: {report.n}")
        print(f"s: {report.s}")
        print(f"value: {report.value}")
        print(dot, end="")
    return EXIT_OK


def _cmd_line_count(args) -> int:
    count = partitions.line_algebra_count(args.n)
    if args.format == "json":
        print(_dumps({"n": args.n, "count": str(count)}))
    else:
        print(count)
    return EXIT_OK


def _cmd_line_types(args) -> int:
    types = partitions.enumerate_line_types(args.n)
    if args.format == "json":
        print(_dumps([list(t) for t in types]))
    else:
        for t in types:
            print(_dumps(list(t)))
    return EXIT_OK


def _verify_reports(tree_n: int):
    reports = []
    for n in range(2, 13):
        reports.append(oracle.verify_truncated_count(n))
    for n in range(2, 15):
        reports.append(oracle.verify_line_count(n))
    for n in range(3, tree_n + 1):
        reports.append(oracle.verify_max_formula(n))
        for s in range(1, n):
            reports.append(oracle.verify_max_formula(n, s))
    for n in range(3, tree_n + 1):
        reports.append(oracle.verify_min_formula(n))
        for s in range(1, n):
            reports.append(oracle.verify_min_formula(n, s))
    for n in range(2, tree_n + 1):
        reports.append(oracle.verify_truncation_minimality(n))
    for n in range(2, tree_n + 1):
        reports.append(oracle.verify_uniqueness(n))
    return reports


def _cmd_verify(args) -> int:
    if not 2 <= args.max_n <= oracle.TREE_ENUM_CAP:
        raise ValueError(f"--max-n must be in 2..{oracle.TREE_ENUM_CAP}")
    reports = _verify_reports(args.max_n)
    failed = sum(1 for r in reports if not r.passed)
    if args.format == "json":
        print(
            _dumps(
                [
                    {
                        "claim": r.claim,
                        "n": r.n,
                        "s": r.s,
                        "expected": r.expected,
                        "observed": r.observed,
                        "pass": r.passed,
                    }
                    for r in reports
                ]
            )
        )
    else:
        for r in reports:
            status = "PASS" if r.passed else "FAIL"
            where = f"n={r.n}" + (f" s={r.s}" if r.s is not None else "")
            print(
                f"{status} {r.claim} {where} expected={r.expected} observed={r.observed}"
            )
        print(f"{len(reports)} checks, {len(reports) - failed} passed, {failed} failed")
    return EXIT_VERIFY_FAILED if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="leavitt",
        description=(
            "Classify finite-dimensional Leavitt path algebras of acyclic "
            "multigraphs, build truncated trees, and check the extremal "
            "dimension formulas against brute force."
        ),
        epilog=(
            "Graph files: one declaration per line, 'v NAME' or "
            "'e NAME SRC DST', '#' comments; '-' reads stdin. Counts that "
            "can exceed 2**53 (line-count) are emitted as decimal strings "
            "in JSON."
        ),
    )
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")

    def add(name, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument(
            "--format", choices=("text", "json"), default="text", help="output format"
        )
        return p

    p = add("classify", "semisimple type, dimension, sinks, kappa (JSON)")
    p.add_argument("file", help="graph file, or - for stdin")

    p = add("truncate", "canonical single-source tree and its bit code")
    p.add_argument("file", nargs="?", help="graph file, or - for stdin")
    p.add_argument("--type", help="comma-separated multiset, e.g. 2,3,3")
    p.add_argument("--dot", help="also write the tree DOT to this path")

    p = add("iso", "do two graphs define isomorphic algebras")
    p.add_argument("file1")
    p.add_argument("file2")

    p = add("enum-truncated", "all truncated-tree codes and types on N vertices")
    p.add_argument("n", type=int)

    p = add("extremal-max", "maximum dimension over trees with N vertices")
    p.add_argument("n", type=int)
    p.add_argument("--sinks", type=int, help="fix the sink count")
    p.add_argument("--dot", help="write the witness DOT to this path")

    p = add("extremal-min", "minimum dimension over trees with N vertices")
    p.add_argument("n", type=int)
    p.add_argument("--sinks", type=int, help="fix the sink count")
    p.add_argument("--dot", help="write the witness DOT to this path")

    p = add("line-count", "number of algebra classes of N-vertex oriented paths")
    p.add_argument("n", type=int)

    p = add("line-types", "the types realizable on an N-vertex oriented path")
    p.add_argument("n", type=int)

    p = add("verify", "run every formula against brute-force enumeration")
    p.add_argument(
        "--max-n",
        type=int,
        default=VERIFY_DEFAULT_TREE_N,
        help=(
            "upper vertex count for the oriented-tree sweeps "
            f"(default {VERIFY_DEFAULT_TREE_N}, cap {oracle.TREE_ENUM_CAP}; "
            "7 enumerates ~1.1M trees and takes a while, 8 much longer)"
        ),
    )
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError("a subcommand is required (see --help)")
        if args.command == "truncate" and bool(args.file) == bool(args.type):
            raise UsageError("truncate needs exactly one of FILE or --type")
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        if args.command == "classify":
            return _cmd_classify(args)
        if args.command == "truncate":
            return _cmd_truncate(args)
        if args.command == "iso":
            return _cmd_iso(args)
        if args.command == "enum-truncated":
            return _cmd_enum_truncated(args)
        if args.command == "extremal-max":
            return _cmd_extremal(args, minimize=False)
        if args.command == "extremal-min":
            return _cmd_extremal(args, minimize=True)
        if args.command == "line-count":
            return _cmd_line_count(args)
        if args.command == "line-types":
            return _cmd_line_types(args)
        if args.command == "verify":
            return _cmd_verify(args)
        raise UsageError(f"unknown command {args.command!r}")
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


def run(argv: list[str], stdin: str = "") -> tuple[int, str, str]:
    """Run one invocation with captured stdio; returns (exit, stdout, stderr)."""
    out, err = io.StringIO(), io.StringIO()
    old_stdin = sys.stdin
    sys.stdin = io.StringIO(stdin)
    try:
        with redirect_stdout(out), redirect_stderr(err):
            try:
                code = main(argv)
            except SystemExit as exc:  # argparse --help exits directly
                code = int(exc.code or 0)
    finally:
        sys.stdin = old_stdin
    return code, out.getvalue(), err.getvalue()


def entry() -> None:
    sys.exit(main(sys.argv[1:]))
