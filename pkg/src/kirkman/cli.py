"""Command-line interface.

Thin client over the same handlers the HTTP service uses: everything goes
through flags and files, output is byte-stable for identical inputs, and exit
codes follow 0 = success/pass, 1 = verification failure, 2 = usage or input
error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import io
from .core import design_stats
from .errors import KirkmanError, PreconditionFailed
from .factorization import factorize_even
from .kts import build_kts
from .kqs import build_kqs
from .placement import export_plan, plan_from_design
from .service import oracle_cross_check
from .verify import verify_design

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2


def _write_out(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w") as handle:
            handle.write(text)


def _read(path: str) -> str:
    with open(path) as handle:
        return handle.read()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kirkman",
        description="Construct, verify and apply Kirkman systems with maximum min-sum.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="construct a design")
    gen_sub = gen.add_subparsers(dest="kind", required=True)
    for kind, helptext in (("kts", "triple system of order 3^K"),
                           ("kqs", "quadruple system of order 4*2^K")):
        p = gen_sub.add_parser(kind, help=helptext)
        p.add_argument("--exponent", type=int, required=True, metavar="K")
        p.add_argument("--out", default=None, metavar="FILE")

    fac = sub.add_parser("factorize", help="1-factorization of an even order")
    fac.add_argument("--order", type=int, required=True, metavar="M")
    fac.add_argument("--out", default=None, metavar="FILE")

    ver = sub.add_parser("verify", help="full verification of a design file")
    ver.add_argument("--design", required=True, metavar="FILE")
    ver.add_argument("--json", action="store_true", help="machine-readable report")

    plan = sub.add_parser("plan", help="placement plan from a design and catalog")
    plan.add_argument("--design", required=True, metavar="FILE")
    plan.add_argument("--catalog", required=True, metavar="FILE")
    plan.add_argument("--format", choices=("table", "csv", "structured"),
                      default="table")
    plan.add_argument("--out", default=None, metavar="FILE")

    stats = sub.add_parser("stats", help="structural statistics of a design file")
    stats.add_argument("--design", required=True, metavar="FILE")

    orc = sub.add_parser("oracle", help="brute-force cross-check of a design file")
    orc.add_argument("--design", required=True, metavar="FILE")
    orc.add_argument("--samples", type=int, default=1000, metavar="N")
    orc.add_argument("--seed", type=int, default=0)

    return parser


def run(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK

    try:
        if args.command == "generate":
            builder = build_kts if args.kind == "kts" else build_kqs
            _write_out(io.dumps_design(builder(args.exponent)), args.out)
            return EXIT_OK

        if args.command == "factorize":
            _write_out(io.dumps_factorization(factorize_even(args.order)), args.out)
            return EXIT_OK

        if args.command == "verify":
            design = io.loads_design(_read(args.design))
            report = verify_design(design)
            if args.json:
                sys.stdout.write(json.dumps(report.to_dict(), separators=(",", ":")) + "\n")
            else:
                sys.stdout.write(report.format_human() + "\n")
            return EXIT_OK if report.passed else EXIT_VERIFY_FAILED

        if args.command == "plan":
            design = io.loads_design(_read(args.design))
            catalog = io.loads_catalog(_read(args.catalog))
            plan = plan_from_design(design, catalog)
            _write_out(export_plan(plan, args.format), args.out)
            return EXIT_OK

        if args.command == "stats":
            report = design_stats(io.loads_design(_read(args.design)))
            sys.stdout.write(json.dumps(report.to_dict(), separators=(",", ":")) + "\n")
            return EXIT_OK

        if args.command == "oracle":
            design = io.loads_design(_read(args.design))
            result = oracle_cross_check(design, args.samples, args.seed)
            sys.stdout.write(result.model_dump_json() + "\n")
            return EXIT_OK if not result.disagreements else EXIT_VERIFY_FAILED

    except PreconditionFailed as exc:
        sys.stderr.write(f"verification failure: {exc}\n")
        if exc.report is not None:
            sys.stderr.write(exc.report.format_human() + "\n")
        return EXIT_VERIFY_FAILED
    except (KirkmanError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE

    return EXIT_USAGE


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
