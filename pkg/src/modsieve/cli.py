"""Command line front end.

    sieve check <file|->   batch-check types from a JSON-lines source
    sieve golden           recheck the embedded golden datasets
    sieve partitions <t>   print the grading partitions of one type

Exit codes: 0 clean, 1 parse errors (or golden mismatches), 2 internal
failure or unreadable input.
"""

import argparse
import json
import sys

from .batch import VERBOSITIES, emit_report, parse_input_line, run_batch
from .criterion import Mode
from .golden import run_golden
from .partitions import modular_partitions


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sieve",
        description="Exclusion sieve for integral modular fusion-category types.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser(
        "check", help="check types from a JSON-lines file, or stdin with '-'"
    )
    p_check.add_argument("input", help="path to a JSON-lines file, or '-' for stdin")
    p_check.add_argument(
        "--mode",
        choices=[m.value for m in Mode],
        default=Mode.PAPER.value,
        help="which blocks may act as the neutral block (default: paper)",
    )
    p_check.add_argument(
        "--jobs", type=int, default=1, help="worker processes (default: 1)"
    )
    p_check.add_argument(
        "--verbosity",
        choices=list(VERBOSITIES),
        default="witness",
        help="report detail level (default: witness)",
    )
    p_check.add_argument(
        "--no-timing",
        action="store_true",
        help="omit timing fields so reports are byte-stable",
    )

    sub.add_parser("golden", help="recheck the embedded golden datasets")

    p_parts = sub.add_parser(
        "partitions", help="print the grading partitions of one type"
    )
    p_parts.add_argument(
        "type_literal", help="a JSON array, flat like [1,1,2] or compact like [[1,2],[3,4]]"
    )
    return parser


def _cmd_check(args: argparse.Namespace) -> int:
    mode = Mode(args.mode)

    def consume(lines) -> dict:
        records = run_batch(lines, mode=mode, jobs=args.jobs)
        return emit_report(
            records,
            verbosity=args.verbosity,
            timing=not args.no_timing,
            out=sys.stdout,
        )

    if args.input == "-":
        summary = consume(sys.stdin)
    else:
        try:
            fh = open(args.input, encoding="utf-8")
        except OSError as e:
            print(f"sieve: cannot read input: {e}", file=sys.stderr)
            return 2
        with fh:
            summary = consume(fh)
    print(
        "checked {checked} types: {survived} survived, {excluded} excluded, "
        "{errors} errors".format(**summary),
        file=sys.stderr,
    )
    return 1 if summary["errors"] else 0


def _cmd_partitions(args: argparse.Namespace) -> int:
    try:
        t = parse_input_line(args.type_literal)
    except ValueError as e:
        print(f"sieve: {e}", file=sys.stderr)
        return 1
    partitions = modular_partitions(t)
    for p in partitions:
        sys.stdout.write(
            json.dumps([list(block) for block in p], separators=(",", ":")) + "\n"
        )
    print(
        f"type {list(t.dims)}: {len(partitions)} partitions "
        f"(pt={t.pt}, d={t.d})",
        file=sys.stderr,
    )
    return 0


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "check":
            return _cmd_check(args)
        if args.command == "golden":
            return 1 if run_golden() else 0
        return _cmd_partitions(args)
    except Exception as e:  # contract: internal failures exit 2, not a traceback
        print(f"sieve: internal error: {e}", file=sys.stderr)
        return 2
