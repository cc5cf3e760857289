"""Batch verification runner.

    crossg2 verify [--seed N] [--trials N] [--filter GLOB] \
                   [--format text|json] [--no-timing]

Exit codes: 0 all selected checks pass, 1 at least one check failed,
2 usage error (including a filter that selects nothing).

Environment variables mirror the flags with the CROSSG2_ prefix
(CROSSG2_SEED, CROSSG2_TRIALS, CROSSG2_FILTER as a comma-separated list,
CROSSG2_FORMAT, CROSSG2_NO_TIMING); explicit flags win.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .checks import CheckResult, run_checks, select_checks

__all__ = ["main", "emit", "build_parser"]


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return default
    return int(raw)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="crossg2",
        description="exact verification suite for the cross-product algebra "
                    "and its triple-system catalogue")
    sub = parser.add_subparsers(dest="command", required=True)
    verify = sub.add_parser("verify", help="run the check suite")
    verify.add_argument("--seed", type=int,
                        default=_env_int("CROSSG2_SEED", 0),
                        help="seed for randomized checks and probes")
    verify.add_argument("--trials", type=int,
                        default=_env_int("CROSSG2_TRIALS", 25),
                        help="trial count for maximality probes (>= 1)")
    verify.add_argument("--filter", action="append", metavar="GLOB",
                        default=None,
                        help="check-id glob; may be repeated")
    verify.add_argument("--format", choices=("text", "json"),
                        default=os.environ.get("CROSSG2_FORMAT", "text"))
    verify.add_argument("--no-timing", action="store_true",
                        default=bool(os.environ.get("CROSSG2_NO_TIMING")),
                        help="zero the duration fields (reproducible output)")
    verify.add_argument("--corrupt", metavar="TAG", default=None,
                        help="testing aid: corrupt a fixture (e.g. cross-table) "
                             "to exercise the failure path")
    return parser


def emit(results: list[CheckResult], fmt: str) -> bytes:
    if fmt == "json":
        payload = [
            {"id": r.id, "anchor": r.anchor, "status": r.status,
             "witness": r.witness, "duration_ms": r.duration_ms}
            for r in results
        ]
        return (json.dumps(payload, indent=2) + "\n").encode("utf-8")
    lines = []
    for r in results:
        line = f"{r.status.upper():<7} {r.id}  {r.anchor}  {r.duration_ms}ms"
        if r.status != "pass" and r.witness:
            line += f"  | witness: {r.witness}"
        lines.append(line)
    return ("\n".join(lines) + "\n").encode("utf-8")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command != "verify":  # pragma: no cover - argparse enforces this
        parser.error("unknown command")
    if args.trials < 1:
        print("error: --trials must be at least 1", file=sys.stderr)
        return 2
    patterns = args.filter
    if patterns is None:
        env_filter = os.environ.get("CROSSG2_FILTER")
        if env_filter:
            patterns = [p.strip() for p in env_filter.split(",") if p.strip()]
    checks = select_checks(patterns)
    if not checks:
        print(f"error: filter {patterns!r} selects no checks", file=sys.stderr)
        return 2
    results = run_checks(checks, seed=args.seed, trials=args.trials,
                         corrupt=args.corrupt, timing=not args.no_timing)
    sys.stdout.write(emit(results, args.format).decode("utf-8"))
    sys.stdout.flush()
    return 0 if all(r.status == "pass" for r in results) else 1


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
