"""Command-line front end: analyze, scan, vandiver, micro, pairs.

Exit codes: 0 all checks pass, 2 identity violation, 1 usage error.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator, Sequence

from .arith import is_prime, primes_between
from .bernoulli import PrecisionExhausted, irregular_pairs
from .cache import ReportCache
from .milnor import MICRO_PRIMES, micro_check
from .report_io import (
    csv_row,
    render_csv,
    render_json,
    render_table,
    report_to_dict,
    table_header,
    table_row,
    vandiver_line,
)
from .residue import dim_V
from .structure import InvariantReport, invariant_report
from .vandiver import check_vandiver

log = logging.getLogger("vanlab")

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VIOLATION = 2

CACHE_ENV = "VANLAB_CACHE"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass(frozen=True)
class ScanConfig:
    lo: int
    hi: int
    jobs: int = 1
    cache_path: str | None = None
    output: str = "csv"
    max_aux: int = 10
    precision_cap: int | None = None

    def __post_init__(self):
        if self.lo < 3:
            raise UsageError("scan range must start at 3 or above")
        if self.hi < self.lo:
            raise UsageError("empty scan range")
        if self.jobs < 1:
            raise UsageError("--jobs must be >= 1")


def odd_prime(text: str) -> int:
    try:
        p = int(text)
    except ValueError:
        raise UsageError(f"{text!r} is not an odd prime") from None
    if p == 2 or not is_prime(p):
        raise UsageError(f"{p} is not an odd prime")
    return p


def parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        if not sep:
            raise ValueError
        return int(lo), int(hi)
    except ValueError:
        raise UsageError(f"range must look like LO..HI, got {text!r}") from None


def _report_worker(args: tuple[int, int, int | None]) -> InvariantReport:
    p, max_aux, cap = args
    return invariant_report(p, max_aux=max_aux, precision_cap=cap)


def scan_reports(config: ScanConfig, cache: ReportCache | None = None) -> Iterator[InvariantReport]:
    """Reports for every prime in the range, ascending, regardless of worker scheduling."""
    primes = primes_between(config.lo, config.hi)
    cached: dict[int, InvariantReport] = {}
    if cache is not None:
        for p in primes:
            try:
                hit = cache.get(p)
            except OSError as exc:
                log.warning("cache read failed for p=%d: %s", p, exc)
                hit = None
            if hit is not None:
                cached[p] = hit
    todo = [(p, config.max_aux, config.precision_cap) for p in primes if p not in cached]
    if config.jobs > 1 and len(todo) > 1:
        pool = ProcessPoolExecutor(max_workers=config.jobs)
        fresh = pool.map(_report_worker, todo, chunksize=max(1, len(todo) // (8 * config.jobs)))
    else:
        pool = None
        fresh = map(_report_worker, todo)
    try:
        for p in primes:
            if p in cached:
                yield cached[p]
                continue
            rep = next(fresh)
            if cache is not None:
                try:
                    cache.put(rep)
                except OSError as exc:
                    log.warning("cache write failed for p=%d: %s", p, exc)
            yield rep
    finally:
        if pool is not None:
            pool.shutdown(cancel_futures=True)


def _open_cache(path: str | None) -> ReportCache | None:
    path = path or os.environ.get(CACHE_ENV)
    return ReportCache(path) if path else None


def cmd_analyze(args, out) -> int:
    p = odd_prime(args.p)
    cache = _open_cache(args.cache)
    rep = cache.get(p) if cache else None
    if rep is None:
        rep = invariant_report(p, max_aux=args.max_aux, precision_cap=args.precision_cap)
        if cache:
            try:
                cache.put(rep)
            except OSError as exc:
                log.warning("cache write failed: %s", exc)
    if args.format == "json":
        out.write(render_json(rep) + "\n")
    elif args.format == "csv":
        out.write(render_csv([rep]))
    else:
        out.write(render_table(rep))
    return EXIT_VIOLATION if rep.identity_violation else EXIT_OK


def cmd_scan(args, out) -> int:
    lo, hi = parse_range(args.range)
    config = ScanConfig(
        lo=lo,
        hi=hi,
        jobs=args.jobs,
        cache_path=args.cache,
        output=args.format or "csv",
        max_aux=args.max_aux,
        precision_cap=args.precision_cap,
    )
    cache = _open_cache(config.cache_path)
    scanned = irregular = violations = inconclusive = 0
    if config.output == "csv":
        out.write(render_csv([], header=True))
    elif config.output == "table":
        out.write(table_header())
    for rep in scan_reports(config, cache):
        scanned += 1
        irregular += rep.index_of_irregularity > 0
        violations += rep.identity_violation
        inconclusive += any(not v.witnessed for v in rep.vandiver)
        if config.output == "csv":
            out.write(",".join(csv_row(rep)) + "\n")
        elif config.output == "json":
            out.write(json.dumps(report_to_dict(rep), separators=(",", ":")) + "\n")
        else:
            out.write(table_row(rep))
        out.flush()
    print(
        f"scanned={scanned} irregular={irregular} violations={violations} inconclusive={inconclusive}",
        file=sys.stderr,
    )
    return EXIT_VIOLATION if violations else EXIT_OK


def cmd_vandiver(args, out) -> int:
    p = odd_prime(args.p)
    verdicts = check_vandiver(p, args.max_aux)
    if args.format == "json":
        out.write(
            json.dumps(
                [{"k": v.k, "status": v.status, "q": v.q, "tried": list(v.tried)} for v in verdicts]
            )
            + "\n"
        )
    elif not verdicts:
        out.write(f"p={p} is regular: nothing to test\n")
    else:
        for v in verdicts:
            out.write(vandiver_line(v) + "\n")
    return EXIT_OK


def cmd_micro(args, out) -> int:
    p = odd_prime(args.p)
    if p not in MICRO_PRIMES:
        raise UsageError(f"UnsupportedPrime: micro is limited to p in {MICRO_PRIMES}")
    res = micro_check(p, trials=args.trials)
    v = res.V.describe(p)
    ok = res.ok and res.V.elementary_rank == dim_V(p)
    out.write(
        f"|U|={res.unit_order} |E1|={res.image_order} V={v} "
        f"E2-absorbed={'yes' if res.e2_absorbed else 'no'} "
        f"j2-additive={'yes' if res.j2_additive else 'no'} {'OK' if ok else 'FAIL'}\n"
    )
    return EXIT_OK if ok else EXIT_VIOLATION


def cmd_pairs(args, out) -> int:
    p = odd_prime(args.p)
    try:
        pairs = irregular_pairs(p, args.precision_cap)
    except PrecisionExhausted as exc:
        out.write(f"precision exhausted: {exc}\n")
        return EXIT_VIOLATION
    if args.format == "json":
        out.write(json.dumps([{"k": x.k, "e": x.e} for x in pairs]) + "\n")
    elif not pairs:
        out.write(f"p={p} is regular\n")
    else:
        for x in pairs:
            out.write(f"k={x.k} e={x.e}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "table"), default=None)
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--cache", default=None, help=f"report cache path (default ${CACHE_ENV})")
    common.add_argument("--max-aux", type=int, default=10, help="auxiliary primes tried per pair")
    common.add_argument("--precision-cap", type=int, default=None, help="largest p-adic precision m")

    parser = _Parser(prog="vanlab", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("analyze", parents=[common], help="full invariant report for one prime")
    s.add_argument("p")
    s.set_defaults(func=cmd_analyze)

    s = sub.add_parser("scan", parents=[common], help="report one row per prime in LO..HI")
    s.add_argument("range", metavar="LO..HI")
    s.set_defaults(func=cmd_scan)

    s = sub.add_parser("vandiver", parents=[common], help="auxiliary-prime witnesses")
    s.add_argument("p")
    s.set_defaults(func=cmd_vandiver)

    s = sub.add_parser("micro", parents=[common], help="brute-force checks for p in {3, 5, 7}")
    s.add_argument("p")
    s.add_argument("--trials", type=int, default=1000)
    s.set_defaults(func=cmd_micro)

    s = sub.add_parser("pairs", parents=[common], help="irregular pairs with eigenspace exponents")
    s.add_argument("p")
    s.set_defaults(func=cmd_pairs)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s")
    if args.max_aux < 1:
        parser.error("--max-aux must be >= 1")
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
