"""Command-line front end.

    balanced-pairing verify --range 5..1000 --checks all --jobs 8
    balanced-pairing show 29
    balanced-pairing search --n 14 --limit 1
    balanced-pairing table --range 5..200

Exit codes: 0 all passed / search answered, 1 a check failed / search
inconclusive, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import balanced_search as bs
from .identity_suite import CHECKS, run_checks
from .modular_core import alpha_beta, is_prime, primes_between, prime_context
from .pairing import batch_inversions, build_pairing, classify, gamma, gauss_count, partner_difference_check
from .quartic_counts import RESIDUE_TABLE, matches_table, table_row
from .report import CSV_FIELDS

JOBS_ENV = "BALANCED_PAIRING_JOBS"


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class ScanSpec:
    lo: int
    hi: int
    mod4_filter: str
    checks: tuple[str, ...]
    m_values: tuple[int, ...]
    output_format: str

    def __post_init__(self) -> None:
        if self.hi < self.lo:
            raise UsageError(f"empty range {self.lo}..{self.hi}")
        floor = 5 if self.mod4_filter == "1" else 3
        if self.lo < floor:
            raise UsageError(f"range must start at >= {floor} for --mod4 {self.mod4_filter}")

    def primes(self) -> list[int]:
        ps = primes_between(self.lo, self.hi)
        if self.mod4_filter == "any":
            return ps
        return [p for p in ps if p % 4 == int(self.mod4_filter)]


def parse_range(text: str) -> tuple[int, int]:
    try:
        lo, hi = text.split("..")
        return int(lo), int(hi)
    except ValueError:
        raise UsageError(f"bad range {text!r}; expected LO..HI") from None


def parse_int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(v) for v in text.split(",") if v.strip())
    except ValueError:
        raise UsageError(f"bad integer list {text!r}") from None


def parse_checks(text: str) -> tuple[str, ...]:
    if text == "all":
        return tuple(sorted(CHECKS))
    ids = tuple(c.strip() for c in text.split(",") if c.strip())
    unknown = [c for c in ids if c not in CHECKS]
    if unknown or not ids:
        raise UsageError(f"unknown check(s) {unknown}; choose from {', '.join(sorted(CHECKS))} or 'all'")
    return ids


def _run_prime(args: tuple[int, tuple[str, ...], tuple[int, ...]]):
    p, checks, ms = args
    return run_checks(p, checks, ms)


def _emit(reports, fmt: str, out, writer_state: dict) -> None:
    if fmt == "json-lines":
        for r in reports:
            out.write(r.to_json() + "\n")
    elif fmt == "csv":
        if "writer" not in writer_state:
            writer_state["writer"] = csv.DictWriter(out, fieldnames=CSV_FIELDS, lineterminator="\n")
            writer_state["writer"].writeheader()
        for r in reports:
            writer_state["writer"].writerow(r.to_csv_row())
    else:
        for r in reports:
            out.write(r.to_human() + "\n")


def cmd_verify(spec: ScanSpec, jobs: int = 1, out=None) -> int:
    """Run the selected checks at every prime in range; 0 iff all passed."""
    out = sys.stdout if out is None else out
    tasks = [(p, spec.checks, spec.m_values) for p in spec.primes()]
    failed = 0
    state: dict = {}
    if jobs > 1 and len(tasks) > 1:
        # compile the inversion kernel once so forked workers inherit it
        batch_inversions(np.ones((1, 1), dtype=np.int64))
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = pool.map(_run_prime, tasks, chunksize=max(1, len(tasks) // (4 * jobs)))
            for reports in results:
                _emit(reports, spec.output_format, out, state)
                failed += sum(not r.passed for r in reports)
    else:
        for task in tasks:
            reports = _run_prime(task)
            _emit(reports, spec.output_format, out, state)
            failed += sum(not r.passed for r in reports)
    out.flush()
    if failed:
        print(f"{failed} check(s) failed", file=sys.stderr)
    return 1 if failed else 0


def _row(label: str, values) -> str:
    return f"{label:<12}" + " ".join(f"{v:>4}" for v in values)


def cmd_show(p: int, out=None) -> int:
    out = sys.stdout if out is None else out
    if p < 5 or not is_prime(p) or p % 4 != 1:
        print(f"show: {p} is not a prime = 1 (mod 4)", file=sys.stderr)
        return 2
    ctx = prime_context(p)
    pairing = build_pairing(ctx)
    diff = partner_difference_check(pairing)
    counts = classify(pairing)
    sig = alpha_beta(p)
    lines = [
        f"p = {p}   t = {ctx.t}   g = {ctx.g}   L_p = {ctx.L_p}   M_p = {ctx.M_p}",
        "",
        _row("a", pairing.V),
        _row("abar", pairing.partners),
        "",
        _row("abar-a", diff.differences),
        _row("|abar+a|", diff.reduced_sums),
        "",
        f"counts (X,Y,Z) = {counts}",
        f"Gamma(t,p) = {gauss_count(ctx.t, p)}   gamma(t,p) = {gamma(ctx.t, p)}",
        f"alpha4 = {sig.alpha4}   beta4 = {sig.beta4}",
    ]
    out.write("\n".join(lines) + "\n")
    return 0


def cmd_search(n: int, limit: int, budget: int, exhaustive: bool, jobs: int = 1, out=None) -> int:
    out = sys.stdout if out is None else out
    if n < 2 or n % 2:
        print(f"search: n must be even and >= 2, got {n}", file=sys.stderr)
        return 2
    if exhaustive:
        try:
            result = bs.enumerate_all(n, jobs=jobs, limit=limit)
        except ValueError as exc:
            print(f"search: {exc}", file=sys.stderr)
            return 2
    else:
        result = bs.search(n, limit=limit, budget=budget)
    for m in result.found:
        extra = " difference-property" if m.has_difference_property() else ""
        out.write(m.serialize() + extra + "\n")
    out.write(result.summary() + "\n")
    return 0 if result.found or result.exhausted else 1


def cmd_table(lo: int, hi: int, out=None) -> int:
    out = sys.stdout if out is None else out
    bad = 0
    out.write("p p%32 alpha4 beta4 alpha4%16 beta4%M M match\n")
    for p in primes_between(max(lo, 5), hi):
        if p % 4 != 1:
            continue
        sig = alpha_beta(p)
        row, a16, bm = table_row(sig)
        ok = matches_table(sig)
        bad += not ok
        out.write(f"{p} {row} {sig.alpha4} {sig.beta4} {a16} {bm} {RESIDUE_TABLE[row][0]} "
                  f"{'yes' if ok else 'NO'}\n")
    return 1 if bad else 0


def _default_jobs() -> int:
    try:
        return max(1, int(os.environ.get(JOBS_ENV, "1")))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="balanced-pairing",
                                     description="Verify identities of the half-factorial pairing.")
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run identity checks over a prime range")
    v.add_argument("--range", required=True, help="inclusive prime range LO..HI")
    v.add_argument("--mod4", choices=["1", "3", "any"], default="any")
    v.add_argument("--checks", default="all", help="comma-separated check ids or 'all'")
    v.add_argument("--m", default="1,2,3", help="m (or x) values for parameterized checks")
    v.add_argument("--format", choices=["json-lines", "csv", "human"], default="json-lines")
    v.add_argument("--jobs", type=int, default=None, help=f"worker processes (default ${JOBS_ENV} or 1)")

    s = sub.add_parser("show", help="print the pairing tables for one prime")
    s.add_argument("p", type=int)

    q = sub.add_parser("search", help="search balanced matchings of 1..n")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--limit", type=int, default=1)
    q.add_argument("--budget", type=int, default=bs.DEFAULT_BUDGET)
    q.add_argument("--exhaustive", action="store_true")
    q.add_argument("--jobs", type=int, default=None)

    t = sub.add_parser("table", help="alpha4/beta4 residues against the mod-32 table")
    t.add_argument("--range", required=True)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    jobs = getattr(args, "jobs", None)
    jobs = _default_jobs() if jobs is None else max(1, jobs)
    try:
        if args.command == "verify":
            lo, hi = parse_range(args.range)
            spec = ScanSpec(lo, hi, args.mod4, parse_checks(args.checks),
                            parse_int_list(args.m), args.format)
            return cmd_verify(spec, jobs)
        if args.command == "show":
            return cmd_show(args.p)
        if args.command == "search":
            return cmd_search(args.n, args.limit, args.budget, args.exhaustive, jobs)
        lo, hi = parse_range(args.range)
        return cmd_table(lo, hi)
    except UsageError as exc:
        print(f"{parser.prog}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
