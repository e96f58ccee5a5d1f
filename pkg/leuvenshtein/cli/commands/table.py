"""table: dump a bootstrap lookup table as 16 `index<TAB>output` lines."""

import argparse
import sys

from leuvenshtein.core.config import Settings
from leuvenshtein.models.kernel import KeyEncoding
from leuvenshtein.services.equality import eq_lut
from leuvenshtein.services.kernel import build_min_lut

TABLES = {
    "minlut-original": lambda: build_min_lut(KeyEncoding.ORIGINAL),
    "minlut-negated": lambda: build_min_lut(KeyEncoding.NEGATED),
    "eqlut": lambda: eq_lut(1),
    "eqlut9": lambda: eq_lut(9),
}


def register(subparsers, settings: Settings) -> None:
    parser = subparsers.add_parser("table", help="Print a lookup table")
    parser.add_argument("which", choices=sorted(TABLES), help="Table to print")
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace, settings: Settings) -> int:
    sys.stdout.write(TABLES[args.which]().dump())
    return 0
