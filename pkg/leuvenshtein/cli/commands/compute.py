"""compute: one encrypted distance with its bootstrap report."""

import argparse
import json

from tabulate import tabulate

from leuvenshtein.core.config import Settings
from leuvenshtein.models.report import RunReport
from leuvenshtein.services.pipeline import run_pair
from .common import add_run_arguments, alphabet_from_args, band_from_args, params_from_args


def register(subparsers, settings: Settings) -> None:
    parser = subparsers.add_parser("compute", help="Compute the encrypted distance of two strings")
    parser.add_argument("--a", required=True, help="First string (always encrypted)")
    parser.add_argument("--b", required=True, help="Second string (plaintext with --preprocess)")
    add_run_arguments(parser, settings)
    parser.add_argument(
        "--threads",
        type=int,
        default=settings.kernel_threads,
        help="Worker threads per anti-diagonal (default: %(default)s)",
    )
    parser.add_argument("--timing", action="store_true", help="Include wall_time in the report")
    parser.set_defaults(handler=handle)


def render(report: RunReport) -> str:
    """Aligned two-column view of a report."""
    rows = [(key, value) for key, value in report.to_json_dict().items()]
    return tabulate(rows, headers=["field", "value"], tablefmt="simple")


def handle(args: argparse.Namespace, settings: Settings) -> int:
    report = run_pair(
        args.a,
        args.b,
        alphabet_from_args(args),
        band_from_args(args),
        params_from_args(args),
        encoding=args.key_encoding,
        preprocess=args.preprocess,
        subset=args.subset,
        threads=args.threads,
        trivial_boundaries=args.trivial_boundaries,
        timing=args.timing,
    )
    if args.json:
        print(json.dumps(report.to_json_dict()))
    else:
        print(f"distance: {report.distance}")
        print(render(report))
    return 0
