"""eqcost: PBS per character comparison for each equality technique."""

import argparse
import csv
import json
import sys

from leuvenshtein.core.config import Settings
from leuvenshtein.services.equality import eq_cost_table

COLUMNS = ["bits", "standard", "ours", "combined"]


def register(subparsers, settings: Settings) -> None:
    parser = subparsers.add_parser("eqcost", help="Equality PBS cost by character width, as CSV")
    parser.add_argument("--max-bits", type=int, default=16, help="Largest character width (default: %(default)s)")
    parser.add_argument("--json", action="store_true", help="JSON list instead of CSV")
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace, settings: Settings) -> int:
    if args.max_bits < 1:
        raise ValueError("--max-bits must be at least 1")
    rows = eq_cost_table(args.max_bits)
    if args.json:
        print(json.dumps(rows))
        return 0
    writer = csv.DictWriter(sys.stdout, fieldnames=COLUMNS, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return 0
