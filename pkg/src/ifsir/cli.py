"""Command-line interface.

Subcommands::

    ifsir solve PROBLEM [--report OUT] [--dot OUT] [--format human|machine]
    ifsir validate PROBLEM
    ifsir scales list
    ifsir scales export NAME

Exit codes: 0 on success, 1 on validation or parse errors, 2 on internal
errors. Diagnostics go to stderr. Output files are only written after the
solve succeeded, so a failing run leaves no partial artifacts behind.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .engine import solve
from .errors import IfsirError, UnknownTerm
from .linguistic import builtin_scales, get_builtin, scale_to_document
from .problemfile import load_problem
from .report import emit_dot, emit_report, format_strata


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ifsir",
        description="Rank alternatives with the intuitionistic fuzzy "
        "superiority/inferiority ranking method.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    solve_cmd = sub.add_parser("solve", help="solve a problem file and report the ranking")
    solve_cmd.add_argument("problem", help="path to a problem JSON file")
    solve_cmd.add_argument("--report", metavar="OUT", help="write the report here instead of stdout")
    solve_cmd.add_argument("--dot", metavar="OUT", help="write the DOT decision map here")
    solve_cmd.add_argument(
        "--format",
        choices=("human", "machine"),
        default="human",
        help="report format (default: human)",
    )

    validate_cmd = sub.add_parser("validate", help="parse and validate a problem file")
    validate_cmd.add_argument("problem", help="path to a problem JSON file")

    scales_cmd = sub.add_parser("scales", help="inspect builtin linguistic scales")
    scales_sub = scales_cmd.add_subparsers(dest="scales_command", required=True)
    scales_sub.add_parser("list", help="list builtin scale names")
    export_cmd = scales_sub.add_parser("export", help="print a builtin scale as JSON")
    export_cmd.add_argument("name", help="builtin scale name")

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "solve":
            return _run_solve(args)
        if args.command == "validate":
            return _run_validate(args)
        if args.command == "scales":
            return _run_scales(args)
        raise AssertionError(f"unhandled command {args.command!r}")
    except IfsirError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    except Exception as err:  # pragma: no cover - defensive
        print(f"internal error: {type(err).__name__}: {err}", file=sys.stderr)
        return 2


def _run_solve(args: argparse.Namespace) -> int:
    problem = load_problem(args.problem)
    result = solve(problem)
    # render everything before touching the filesystem
    report_text = emit_report(result, args.format)
    dot_text = emit_dot(result) if args.dot else None

    if args.report:
        Path(args.report).write_text(report_text, encoding="utf-8")
    else:
        sys.stdout.write(report_text)
    if dot_text is not None:
        Path(args.dot).write_text(dot_text, encoding="utf-8")

    if args.report:
        outcome = result.outcome
        if outcome.complete is not None:
            print(f"complete ranking: {format_strata(outcome.complete)}")
        else:
            print("complete ranking: none (incomparable pairs remain)")
    return 0


def _run_validate(args: argparse.Namespace) -> int:
    problem = load_problem(args.problem)
    print(
        f"OK: {args.problem} ({len(problem.alternatives)} alternatives, "
        f"{len(problem.criteria)} criteria, {len(problem.experts)} experts)"
    )
    return 0


def _run_scales(args: argparse.Namespace) -> int:
    if args.scales_command == "list":
        for scale in builtin_scales():
            print(f"{scale.name} ({len(scale.entries)} terms)")
        return 0
    if args.scales_command == "export":
        try:
            scale = get_builtin(args.name)
        except UnknownTerm as err:
            print(f"error: {err}", file=sys.stderr)
            return 1
        print(json.dumps(scale_to_document(scale), indent=2))
        return 0
    raise AssertionError(f"unhandled scales command {args.scales_command!r}")


if __name__ == "__main__":
    sys.exit(main())
