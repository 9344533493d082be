"""Command-line interface.

Exit status is 0 on success, 1 for usage errors and 2 when a numerical
contract fails (a certificate stage, a self-test suite) or output cannot be
written. Data goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass
from typing import IO, Sequence

import numpy as np

from . import checks
from ._validation import (
    BracketError,
    ConsistencyError,
    CounterexampleError,
    DomainError,
    UnsupportedCombinationError,
)
from .certify import M_MAX_LIMIT, build_certificate, solve_roots
from .series import SumKind, evaluate
from .spikes import jump_prediction, measure_jump, spike_height

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NUMERIC = 2

SUM_CODES = [kind.value for kind in SumKind]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


@dataclass(frozen=True)
class ScanResult:
    kind: SumKind
    n: int
    xs: np.ndarray
    ys: np.ndarray


def export_scan(result: ScanResult, fmt: str, sink: IO[str]) -> None:
    """Write a scan as CSV (``x,value`` rows) or JSON (``{"kind", "n", "points"}``)."""
    if fmt == "csv":
        lines = ["x,value"]
        lines.extend("%.17g,%.17g" % (x, y) for x, y in zip(result.xs, result.ys))
        sink.write("\n".join(lines) + "\n")
    elif fmt == "json":
        payload = {
            "kind": result.kind.label,
            "n": result.n,
            "points": [[float(x), float(y)] for x, y in zip(result.xs, result.ys)],
        }
        sink.write(json.dumps(payload) + "\n")
    else:
        raise ValueError(f"unknown format {fmt!r}")


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _finite(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a number, got {text!r}") from None
    if not math.isfinite(value):
        raise argparse.ArgumentTypeError(f"expected a finite number, got {text!r}")
    return value


def _points(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError("scan needs at least one point")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fejersums", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    angles = _Parser(add_help=False)
    angles.add_argument(
        "--pi-units", action="store_true", help="read angles as multiples of pi"
    )

    p = sub.add_parser("eval", parents=[angles], help="evaluate one sum at one point")
    p.add_argument("--sum", required=True, choices=SUM_CODES)
    p.add_argument("--n", required=True, type=_positive_int)
    p.add_argument("--x", required=True, type=_finite)

    p = sub.add_parser("scan", parents=[angles], help="evaluate a sum on a uniform grid")
    p.add_argument("--sum", required=True, choices=SUM_CODES)
    p.add_argument("--n", required=True, type=_positive_int)
    p.add_argument("--from", dest="x_from", required=True, type=_finite)
    p.add_argument("--to", dest="x_to", required=True, type=_finite)
    p.add_argument("--points", required=True, type=_points)
    p.add_argument("--format", choices=["csv", "json"], default="csv")

    p = sub.add_parser("certify", help="build the positivity certificate")
    p.add_argument("--m-max", required=True, type=_positive_int)
    p.add_argument("--format", choices=["json"], default="json")

    p = sub.add_parser("spike", help="spike height of S^(1), S^(2) or S^(3)")
    p.add_argument("--sum", required=True, choices=["1", "2", "3"])
    p.add_argument("--n", required=True, type=_positive_int)

    p = sub.add_parser("jump", help="jump of S^(4) across 2pi/3")
    p.add_argument("--n", required=True, type=_positive_int)

    p = sub.add_parser("table1", help="tail bounds and roots for m = 1..M")
    p.add_argument("--m-max", type=_positive_int, default=10)

    sub.add_parser("selftest", help="run the invariant suites")
    return parser


def _validate(args) -> None:
    if args.verb == "scan" and args.points > 1 and not args.x_from < args.x_to:
        raise UsageError("scan: --from must be smaller than --to")
    if args.verb in ("certify", "table1") and args.m_max > M_MAX_LIMIT:
        raise UsageError(f"{args.verb}: --m-max must be <= {M_MAX_LIMIT}")
    if args.verb == "jump" and args.n < 100:
        raise UsageError("jump: --n must be >= 100")


def _cmd_eval(args, out) -> int:
    scale = math.pi if args.pi_units else 1.0
    value = evaluate(SumKind(args.sum), args.n, args.x * scale)
    out.write("%.17g\n" % value)
    return EXIT_OK


def _cmd_scan(args, out) -> int:
    scale = math.pi if args.pi_units else 1.0
    xs = np.linspace(args.x_from * scale, args.x_to * scale, args.points)
    kind = SumKind(args.sum)
    ys = np.atleast_1d(evaluate(kind, args.n, xs))
    export_scan(ScanResult(kind, args.n, xs, ys), args.format, out)
    return EXIT_OK


def _cmd_certify(args, out) -> int:
    certificate = build_certificate(args.m_max)
    out.write(json.dumps(certificate.report(), indent=2) + "\n")
    return EXIT_OK if certificate.all_verified else EXIT_NUMERIC


def _cmd_spike(args, out) -> int:
    estimate = spike_height(SumKind(args.sum), args.n)
    out.write(json.dumps(estimate.record(), indent=2) + "\n")
    return EXIT_OK


def _cmd_jump(args, out) -> int:
    record = measure_jump(args.n).record()
    record["prediction"] = jump_prediction()
    out.write(json.dumps(record, indent=2) + "\n")
    return EXIT_OK


def _cmd_table1(args, out) -> int:
    out.write(f"{'m':>3}  {'B_m':>17}  {'x_m^-/pi':>17}  {'x_m^+/pi':>12}\n")
    for m in range(1, args.m_max + 1):
        roots = solve_roots(m)
        out.write(
            f"{m:>3}  {roots.bound:>17.10e}  {roots.x_minus_over_pi:>17.10e}  "
            f"{roots.x_plus_over_pi:>12.10f}\n"
        )
    return EXIT_OK


def _cmd_selftest(args, out) -> int:
    failed = 0
    for result in checks.run_all():
        status = "PASS" if result.passed else "FAIL"
        failed += not result.passed
        out.write(f"{status}  {result.name:<32} {result.seconds:6.2f}s  {result.detail}\n")
        out.flush()
    out.write(f"{len(checks.SUITES) - failed}/{len(checks.SUITES)} suites passed\n")
    return EXIT_OK if failed == 0 else EXIT_NUMERIC


_COMMANDS = {
    "eval": _cmd_eval,
    "scan": _cmd_scan,
    "certify": _cmd_certify,
    "spike": _cmd_spike,
    "jump": _cmd_jump,
    "table1": _cmd_table1,
    "selftest": _cmd_selftest,
}


def run(argv: Sequence[str] | None = None, out: IO[str] | None = None, err: IO[str] | None = None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        _validate(args)
    except UsageError as exc:
        print(exc, file=err)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return EXIT_OK if not exc.code else EXIT_USAGE
    try:
        return _COMMANDS[args.verb](args, out)
    except (DomainError, UnsupportedCombinationError) as exc:
        print(f"fejersums {args.verb}: {exc}", file=err)
        return EXIT_USAGE
    except (BracketError, ConsistencyError, CounterexampleError) as exc:
        print(f"fejersums {args.verb}: numerical failure: {exc}", file=err)
        return EXIT_NUMERIC
    except OSError as exc:
        print(f"fejersums {args.verb}: cannot write output: {exc}", file=err)
        return EXIT_NUMERIC


def main(argv: Sequence[str] | None = None) -> int:
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
