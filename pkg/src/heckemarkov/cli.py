"""Command-line front end.

Subcommands:

  table chi|sn|tau|molien|coinv --n K [--kind sym|ext|symext]
        [--format json|csv|latex] [--output PATH] [--force]
  verify duality|starkey|prop3|super-frobenius|examples|example1|example2|limit
        --n K [--N M] [--force]
  spec schur --partition a,b,c

Exit codes: 0 success / all checks pass, 1 verification failure,
2 usage error.  Default n cap is 6 (costs grow with p(n)^2 products in
the rational-function field); pass --force to exceed it.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import characters, graded, symfun, traces
from .partitions import parse_partition
from .serialize import table_to_csv, table_to_latex

N_MAX = 6

MOLIEN_KINDS = {"sym": "sym", "ext": "ext", "symext": "sym-ext"}

VERIFIERS = {
    "duality": lambda args: traces.verify_duality(args.n),
    "starkey": lambda args: traces.verify_starkey(args.n),
    "prop3": lambda args: traces.verify_prop3(args.n),
    "super-frobenius": lambda args: traces.verify_super_frobenius(args.n),
    "examples": lambda args: characters.example_checks(args.n),
    "example1": lambda args: traces.verify_example1_rows(args.n),
    "example2": lambda args: traces.verify_example2_trace(args.n),
    "limit": lambda args: traces.verify_limit(args.n, args.N),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="heckemarkov",
        description="Exact Hecke character tables, twisted Markov traces "
        "and Molien matrices for S_n.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    table = sub.add_parser("table", help="emit a partition-indexed matrix")
    table.add_argument(
        "target", choices=["chi", "sn", "tau", "molien", "coinv"]
    )
    table.add_argument("--n", type=int, required=True)
    table.add_argument(
        "--kind",
        choices=sorted(MOLIEN_KINDS),
        default="symext",
        help="graded-algebra kind for `table molien`",
    )
    table.add_argument(
        "--format", choices=["json", "csv", "latex"], default="json"
    )
    table.add_argument("--output", help="write to a file instead of stdout")
    table.add_argument(
        "--force", action="store_true", help=f"allow n > {N_MAX}"
    )

    verify = sub.add_parser("verify", help="run a named identity check")
    verify.add_argument("target", choices=sorted(VERIFIERS))
    verify.add_argument("--n", type=int, required=True)
    verify.add_argument(
        "--N", type=int, default=1, help="alphabet multiplier for `limit`"
    )
    verify.add_argument("--output", help="write to a file instead of stdout")
    verify.add_argument(
        "--force", action="store_true", help=f"allow n > {N_MAX}"
    )

    spec = sub.add_parser(
        "spec", help="closed-form principal super specializations"
    )
    spec.add_argument("target", choices=["schur"])
    spec.add_argument(
        "--partition", required=True, help='comma-separated, e.g. "3,1"'
    )

    return parser


def _check_n(args, parser) -> None:
    if args.n < 1:
        parser.error("--n must be at least 1")
    if args.n > N_MAX and not args.force:
        parser.error(
            f"--n {args.n} exceeds the default cap {N_MAX}; "
            "pass --force to proceed"
        )
    if getattr(args, "N", 1) < 1:
        parser.error("--N must be at least 1")


def _emit(text: str, output) -> None:
    if output:
        with open(output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _run_table(args, parser) -> int:
    _check_n(args, parser)
    if args.target == "chi":
        table = characters.hecke_char_table(args.n)
    elif args.target == "sn":
        table = characters.sn_char_table(args.n)
    elif args.target == "tau":
        table = traces.markov_trace_table(args.n)
    elif args.target == "molien":
        table = graded.graded_matrix(args.n, MOLIEN_KINDS[args.kind])
    else:
        table = graded.coinvariant_matrix(args.n)
    if args.format == "json":
        text = json.dumps(table.to_json(), indent=2, sort_keys=True) + "\n"
    elif args.format == "csv":
        text = table_to_csv(table)
    else:
        text = table_to_latex(table)
    _emit(text, args.output)
    return 0


def _run_verify(args, parser) -> int:
    _check_n(args, parser)
    report = VERIFIERS[args.target](args)
    text = json.dumps(report.to_json(), indent=2, sort_keys=True) + "\n"
    _emit(text, args.output)
    return 0 if report.passed else 1


def _run_spec(args, parser) -> int:
    try:
        gamma = parse_partition(args.partition)
    except ValueError as exc:
        parser.error(str(exc))
    sys.stdout.write(str(symfun.schur_spec_product(gamma)) + "\n")
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.verb == "table":
        return _run_table(args, parser)
    if args.verb == "verify":
        return _run_verify(args, parser)
    return _run_spec(args, parser)


if __name__ == "__main__":
    sys.exit(main())
