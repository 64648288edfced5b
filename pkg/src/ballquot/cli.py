"""Command line front end: run certificate suites and reproduce the tables."""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from . import tables
from .certificates import (CLAIMS, Certificate, RunConfig, UnknownClaimError,
                           _render, run_claims)
from .cyclo import InternalCheckError
from .qfield import fmt_rational
from .reidtai import (CASE_FAMILIES, case_analysis, c_min_red,
                      enumerate_exceptional_orders, enumerate_small_d)

EXIT_OK = 0
EXIT_FAILURES = 1
EXIT_USAGE = 2
EXIT_INCONSISTENT = 3


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ballquot",
        description="Exact-arithmetic certificates for ball-quotient "
                    "singularity bounds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run_p = sub.add_parser("run", help="run certificate suites")
    run_p.add_argument("--claims", action="append", default=None,
                       help="comma separated claim ids or globs (default: all)")
    run_p.add_argument("--r-limit", type=_positive_int, default=None,
                       help="order enumeration bound (claim-specific default)")
    run_p.add_argument("--d-limit", type=_positive_int, default=None,
                       help="isotypic-order enumeration bound")
    run_p.add_argument("--d-range", type=int, nargs=2, default=(5, 15),
                       metavar=("LO", "HI"),
                       help="|D| window for the field sweeps (default 5 15)")
    run_p.add_argument("--seed", type=int, default=0,
                       help="seed for the random property sweeps (default 0)")
    run_p.add_argument("--format", choices=("text", "json"), default="text")
    run_p.add_argument("--out", default=None, help="write the report to a file")
    run_p.add_argument("--perturb", action="store_true",
                       help="negative control: perturb expected values, "
                            "certificates must FAIL")

    sub.add_parser("show-tables", help="print the reproduced reference tables")
    sub.add_parser("list-claims", help="list registered claim ids")
    return parser


def _text_report(certs: List[Certificate], cfg: RunConfig) -> str:
    lines = []
    for cert in certs:
        lines.append(f"claim {cert.claim_id}: {cert.verdict}")
        if cert.bound_checked:
            lines.append(f"  checks: {cert.bound_checked}")
        if cert.search_bounds:
            lines.append(f"  bounds: {json.dumps(_render(cert.search_bounds), sort_keys=True)}")
        for item in cert.computed:
            value = json.dumps(_render(item["value"]), sort_keys=True)
            witness = ""
            if "witness" in item:
                witness = f"  [witness {json.dumps(_render(item['witness']), sort_keys=True)}]"
            lines.append(f"  {item['label']} = {value}{witness}")
    n_pass = sum(1 for c in certs if c.passed())
    lines.append(f"summary: {len(certs)} claims, {n_pass} PASS, "
                 f"{len(certs) - n_pass} FAIL (seed={cfg.seed})")
    return "\n".join(lines) + "\n"


def _json_report(certs: List[Certificate], cfg: RunConfig) -> str:
    doc = {
        "config": {
            "claims": list(cfg.claims),
            "d_range": list(cfg.d_range),
            "r_limit": cfg.r_limit,
            "d_limit": cfg.d_limit,
            "seed": cfg.seed,
            "perturb": cfg.perturb,
        },
        "certificates": [c.to_obj() for c in certs],
        "all_pass": all(c.passed() for c in certs),
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def run_command(cfg: RunConfig) -> int:
    try:
        certs = run_claims(cfg)
    except UnknownClaimError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InternalCheckError as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    report = _text_report(certs, cfg) if cfg.fmt == "text" else _json_report(certs, cfg)
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(report)
    else:
        sys.stdout.write(report)
    return EXIT_OK if all(c.passed() for c in certs) else EXIT_FAILURES


def show_tables() -> str:
    """Human-readable reproduction of every reference table."""
    out = []

    out.append("exceptional orders (coarse estimate below 1)")
    computed = enumerate_exceptional_orders(10 ** 5)
    expected = tables.expand_exceptional_families(10 ** 5)
    out.append("  computed : " + ", ".join(map(str, computed)))
    out.append("  expected : " + ", ".join(map(str, expected)))
    out.append(f"  agreement: {tuple(computed) == tuple(expected)}")

    out.append("")
    out.append("orders with half-orbit sums below 1")
    small = enumerate_small_d(10 ** 4)
    out.append("  computed : " + ", ".join(map(str, small)))
    out.append("  expected : " + ", ".join(map(str, tables.SMALL_D_EXPECTED)))
    out.append(f"  agreement: {tuple(small) == tuple(tables.SMALL_D_EXPECTED)}")

    out.append("")
    out.append("reduced shifted-orbit minima")
    for d in sorted(tables.CMINRED_EXPECTED, reverse=True):
        got = c_min_red(d)
        exp = tables.CMINRED_EXPECTED[d]
        out.append(f"  c_min_red({d}) = {fmt_rational(got)}"
                   f"  (expected {fmt_rational(exp)})")

    for case_id in sorted(CASE_FAMILIES):
        exp = tables.CASE_EXPECTED[case_id]
        report = case_analysis(case_id, exp["threshold_n"])
        out.append("")
        out.append(f"case {case_id}: contributions")
        for d in sorted(report.per_d_contribution):
            got = report.per_d_contribution[d]
            out.append(f"  {d} -> {fmt_rational(got)}"
                       f"  (expected {fmt_rational(exp['per_d'][d])})")
        out.append(f"  omega -> {fmt_rational(report.omega_contribution)}"
                   f"  (expected {fmt_rational(exp['omega'])})")
        out.append(f"  threshold: {report.threshold_desc}, i.e. n >= {report.threshold_n}"
                   f"  (expected {exp['threshold_desc']}, n >= {exp['threshold_n']})")
    return "\n".join(out) + "\n"


def list_claims() -> str:
    width = max(len(c) for c in CLAIMS)
    return "\n".join(f"{claim_id.ljust(width)}  {CLAIMS[claim_id].description}"
                     for claim_id in sorted(CLAIMS)) + "\n"


def main(argv: Optional[List[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command == "show-tables":
        sys.stdout.write(show_tables())
        return EXIT_OK
    if args.command == "list-claims":
        sys.stdout.write(list_claims())
        return EXIT_OK
    cfg = RunConfig(
        claims=tuple(args.claims) if args.claims else ("all",),
        d_range=tuple(args.d_range),
        r_limit=args.r_limit,
        d_limit=args.d_limit,
        seed=args.seed,
        fmt=args.format,
        out=args.out,
        perturb=args.perturb,
    )
    return run_command(cfg)


def entry() -> None:
    raise SystemExit(main())
