"""Command line interface: `cmtensor run` and `cmtensor corpus`."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from ..errors import KernelError, ParseError
from ..invariants import NZD_RETRY_CAP
from ..polyring import DEFAULT_PRIME, PrimeField
from ..theorems import generate_corpus, run_all_checks
from .executor import ExecConfig, execute
from .parser import parse_session
from .report import VERSION


def _add_common(sub):
    sub.add_argument("--prime", type=int, default=DEFAULT_PRIME,
                     help=f"coefficient field modulus (default {DEFAULT_PRIME})")
    sub.add_argument("--seed", type=int, default=0, help="seed for randomized searches")
    sub.add_argument("--format", choices=("json", "text"), default="text")
    sub.add_argument("--gb-step-budget", type=int, default=None,
                     help="abort basis computations past this many reduction steps")
    sub.add_argument("--nzd-retries", type=int, default=NZD_RETRY_CAP,
                     help="random draws before the nonzerodivisor search gives up")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cmtensor",
        description="grade, height, and Cohen-Macaulay checks for tensor products "
        "of finitely presented algebras over a prime field",
    )
    parser.add_argument("--version", action="version", version=f"cmtensor {VERSION}")
    subs = parser.add_subparsers(dest="command", required=True)

    run = subs.add_parser("run", help="execute a session file")
    run.add_argument("file", help="session file to execute")
    _add_common(run)

    corpus = subs.add_parser("corpus", help="generate a corpus and run every applicable check")
    corpus.add_argument("--size", type=int, default=12, help="number of corpus instances")
    _add_common(corpus)

    return parser


def _cmd_run(args) -> int:
    try:
        text = Path(args.file).read_text(encoding="utf-8")
    except OSError as exc:
        print(f"cmtensor: cannot read {args.file}: {exc}", file=sys.stderr)
        return 2
    try:
        session = parse_session(text, args.prime)
    except ParseError as exc:
        print(f"{args.file}:{exc.line}:{exc.column}: syntax error: {exc.message}",
              file=sys.stderr)
        return 2
    config = ExecConfig(
        prime=args.prime,
        seed=args.seed,
        step_budget=args.gb_step_budget,
        nzd_retries=args.nzd_retries,
    )
    report = execute(session, config)
    if args.format == "json":
        sys.stdout.write(report.to_json())
    else:
        sys.stdout.write(report.to_text())
    return 0 if report.passed else 1


def _cmd_corpus(args) -> int:
    instances = generate_corpus(args.seed, args.size, PrimeField(args.prime))
    results = []
    failed = False
    for index, inst in enumerate(instances):
        try:
            reports = run_all_checks(
                inst,
                seed=args.seed + index,
                step_budget=args.gb_step_budget,
                nzd_retries=args.nzd_retries,
            )
        except KernelError as exc:
            results.append({"instance": inst.tag, "status": "error", "error": str(exc)})
            failed = True
            continue
        for rep in reports:
            entry = {"instance": inst.tag, "labels": list(inst.labels), **rep.to_dict()}
            results.append(entry)
            if rep.status == "fail":
                failed = True
    payload = {
        "version": VERSION,
        "mode": "corpus",
        "prime": args.prime,
        "seed": args.seed,
        "size": args.size,
        "results": results,
    }
    if args.format == "json":
        sys.stdout.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    else:
        for entry in results:
            status = entry.get("status", "?")
            check = entry.get("check", "-")
            lhs = entry.get("lhs")
            rhs = entry.get("rhs")
            line = f"[{status}] {entry['instance']} {check}"
            if status in ("pass", "fail"):
                line += f"  :: lhs={lhs} rhs={rhs}"
            if entry.get("detail"):
                line += f"  ({entry['detail']})"
            if entry.get("error"):
                line += f"  !! {entry['error']}"
            print(line)
        tally = {}
        for entry in results:
            tally[entry["status"]] = tally.get(entry["status"], 0) + 1
        summary = ", ".join(f"{v} {k}" for k, v in sorted(tally.items()))
        print(f"{len(results)} checks: {summary}")
        print("overall:", "FAIL" if failed else "PASS")
    return 1 if failed else 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "run":
        return _cmd_run(args)
    return _cmd_corpus(args)


if __name__ == "__main__":
    sys.exit(main())
