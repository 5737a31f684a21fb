"""Command-line front end.

Subcommands: count, census, expect, expect-length, triangle, poly,
approx, mc, verify.  Exact values are printed losslessly as integers or
"p/q" text; ``--decimal D`` adds an approximate rendering, ``--json``
switches to a machine-readable record on stdout.

Exit codes: 0 success, 1 domain/guard error, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from fractions import Fraction
from importlib.metadata import PackageNotFoundError, version
from typing import Optional, Union

from . import counting, expectation, montecarlo, oracle, verify
from .errors import DomainError, GuardExceeded

try:
    VERSION = version("subseq-census")
except PackageNotFoundError:  # running from a source tree
    VERSION = "0.1.0"

Exact = Union[int, Fraction]


def format_exact(v: Exact) -> str:
    if isinstance(v, Fraction) and v.denominator != 1:
        return f"{v.numerator}/{v.denominator}"
    return str(int(v))


def parse_exact(text: str) -> Fraction:
    return Fraction(text)


def to_decimal(v: Exact, digits: int) -> str:
    with localcontext() as ctx:
        ctx.prec = digits
        f = Fraction(v)
        return str(Decimal(f.numerator) / Decimal(f.denominator))


@dataclass
class OutputRecord:
    command: str
    parameters: dict
    results: list = field(default_factory=list)
    metadata: dict = field(default_factory=dict)

    def add(self, label: str, value, decimal: Optional[str] = None) -> None:
        entry = {"label": label, "value": value}
        if decimal is not None:
            entry["decimal_approx"] = decimal
        self.results.append(entry)

    def emit(self, as_json: bool) -> None:
        if as_json:
            payload = {
                "command": self.command,
                "parameters": self.parameters,
                "results": self.results,
                "metadata": {"version": VERSION, **self.metadata},
            }
            print(json.dumps(payload))
            return
        for entry in self.results:
            value = entry["value"]
            if isinstance(value, list):
                value = ",".join(str(v) for v in value)
            line = f"{entry['label']} = {value}"
            if "decimal_approx" in entry:
                line += f" (~ {entry['decimal_approx']})"
            print(line)


def _validate_string(s: str, alphabet: str) -> str:
    if alphabet == "binary":
        if any(c not in "01" for c in s):
            raise DomainError(
                "binary subcommands accept only '0'/'1'; pass --alphabet general"
            )
    elif len(set(s)) > 256:
        raise DomainError("alphabets larger than 256 symbols are not supported")
    return s


def _record_value(rec: OutputRecord, label: str, v: Exact, digits: Optional[int]) -> None:
    rec.add(label, format_exact(v), to_decimal(v, digits) if digits else None)


def cmd_count(args) -> OutputRecord:
    s = _validate_string(args.string, args.alphabet)
    rec = OutputRecord("count", {"string": s, "alphabet": args.alphabet})
    rec.add("total", format_exact(counting.count_total(s)))
    rec.add("census", [format_exact(c) for c in counting.census(s)])
    return rec


def cmd_census(args) -> OutputRecord:
    s = _validate_string(args.string, args.alphabet)
    rec = OutputRecord("census", {"string": s, "alphabet": args.alphabet})
    rec.add("census", [format_exact(c) for c in counting.census(s)])
    return rec


def cmd_expect(args) -> OutputRecord:
    rec = OutputRecord("expect", {"n": args.n})
    _record_value(rec, "expected_total", expectation.expected_total(args.n),
                  args.decimal or 6)
    return rec


def cmd_expect_length(args) -> OutputRecord:
    rec = OutputRecord("expect-length", {"n": args.n, "m": args.m})
    _record_value(rec, "expected_length", expectation.expected_length(args.n, args.m),
                  args.decimal or 6)
    return rec


def cmd_triangle(args) -> OutputRecord:
    tri = expectation.triangle(args.n_max)
    rec = OutputRecord("triangle", {"n_max": args.n_max, "format": args.format})
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["n", "m", "value"])
        for n in range(args.n_max + 1):
            for m, v in enumerate(tri.row(n)):
                writer.writerow([n, m, format_exact(v)])
        text = buf.getvalue()
    else:
        entries = [
            {"n": n, "m": m, "value": format_exact(v)}
            for n in range(args.n_max + 1)
            for m, v in enumerate(tri.row(n))
        ]
        text = json.dumps({"n_max": args.n_max, "entries": entries})
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        rec.add("written", args.out)
    else:
        rec.add("triangle", text)
    return rec


def cmd_poly(args) -> OutputRecord:
    poly = expectation.deficiency_polynomial(args.m)
    rec = OutputRecord("poly", {"m": args.m})
    rec.add("coefficients", [format_exact(c) for c in poly.coefficients])
    return rec


def cmd_approx(args) -> OutputRecord:
    report = expectation.binomial_approximation_report(args.n, args.m)
    rec = OutputRecord("approx", {"n": args.n, "m": args.m})
    digits = args.decimal or 6
    _record_value(rec, "approximation", report.approximation, digits)
    _record_value(rec, "exact", report.exact, digits)
    _record_value(rec, "error", report.error, digits)
    return rec


def cmd_mc(args) -> OutputRecord:
    if args.target == "total":
        est = montecarlo.estimate_expected_total(
            args.n, args.samples, args.seed, workers=args.workers)
    else:
        if args.m is None:
            raise DomainError("mc length requires --m")
        est = montecarlo.estimate_expected_length(
            args.n, args.m, args.samples, args.seed, workers=args.workers)
    rec = OutputRecord(
        "mc",
        {"target": args.target, "n": args.n, "m": args.m,
         "samples": args.samples, "workers": est.workers},
        metadata={"rng_id": est.rng_id, "seed": args.seed},
    )
    rec.add("mean", str(est.mean))
    rec.add("std_error", str(est.std_error))
    rec.add("ci95_low", str(est.ci95_low))
    rec.add("ci95_high", str(est.ci95_high))
    return rec


def cmd_verify(args) -> OutputRecord:
    bounds = verify.QUICK if args.quick else verify.FULL
    rec = OutputRecord("verify", {"bounds": "quick" if args.quick else "full"})
    failed = False
    for result in verify.run_all(bounds):
        status = "pass" if result.passed else "FAIL"
        if args.json:
            rec.add(result.name, status, None)
        else:
            print(f"{status:4}  {result.name:28} {result.detail}")
        failed = failed or not result.passed
    rec.metadata["passed"] = not failed
    if failed:
        raise DomainError("verification failed; see the table above")
    return rec


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="subseq-census",
        description="Exact distinct-subsequence counts and expectations",
    )
    parser.add_argument("--version", action="version", version=VERSION)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--json", action="store_true",
                       help="emit a machine-readable record on stdout")
        p.add_argument("--decimal", type=int, metavar="D",
                       help="also render exact values at D decimal digits")

    p = sub.add_parser("count", help="total and by-length counts of one string")
    p.add_argument("--string", required=True)
    p.add_argument("--alphabet", choices=["binary", "general"], default="binary")
    common(p)
    p.set_defaults(fn=cmd_count)

    p = sub.add_parser("census", help="by-length counts of one string")
    p.add_argument("--string", required=True)
    p.add_argument("--alphabet", choices=["binary", "general"], default="binary")
    common(p)
    p.set_defaults(fn=cmd_census)

    p = sub.add_parser("expect", help="expected total count at length n")
    p.add_argument("--n", type=int, required=True)
    common(p)
    p.set_defaults(fn=cmd_expect)

    p = sub.add_parser("expect-length", help="expected length-m count at length n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    common(p)
    p.set_defaults(fn=cmd_expect_length)

    p = sub.add_parser("triangle", help="expectation triangle up to n-max")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--out", metavar="PATH")
    common(p)
    p.set_defaults(fn=cmd_triangle)

    p = sub.add_parser("poly", help="deficiency polynomial coefficients")
    p.add_argument("--m", type=int, required=True)
    common(p)
    p.set_defaults(fn=cmd_poly)

    p = sub.add_parser("approx", help="binomial approximation and exact error")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    common(p)
    p.set_defaults(fn=cmd_approx)

    p = sub.add_parser("mc", help="Monte Carlo estimate of an expectation")
    p.add_argument("target", choices=["total", "length"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int)
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--workers", type=int)
    common(p)
    p.set_defaults(fn=cmd_mc)

    p = sub.add_parser("verify", help="run the self-verification suites")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--quick", action="store_true")
    g.add_argument("--full", action="store_true")
    common(p)
    p.set_defaults(fn=cmd_verify)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        record = args.fn(args)
    except (GuardExceeded, DomainError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    record.emit(args.json)
    return 0


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
