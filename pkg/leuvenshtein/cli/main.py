"""
Leuvenshtein CLI

Entry point wiring the subcommands together, configuring logging and
mapping library errors to exit codes:

    0  success
    2  invalid flags, alphabet violations, unknown table, unreadable files
    3  band too narrow for the string lengths
"""

import argparse
import logging
import sys
from typing import List, Optional

from pydantic import ValidationError

from leuvenshtein import __app_name__, __version__
from leuvenshtein.core.config import Settings, get_settings
from leuvenshtein.core.errors import BandTooNarrow, LeuvenshteinError
from .commands import batch, bench, compute, eqcost, table

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_BAND = 3

COMMANDS = (compute, batch, table, eqcost, bench)


def build_parser(settings: Optional[Settings] = None) -> argparse.ArgumentParser:
    """Top-level parser; defaults that come from the environment are read from `settings`."""
    settings = settings or get_settings()
    parser = argparse.ArgumentParser(
        prog="leuvenshtein",
        description="Encrypted edit distance on a simulated TFHE backend.",
    )
    parser.add_argument("--version", action="version", version=f"{__app_name__} {__version__}")
    parser.add_argument(
        "--log-level",
        default=settings.effective_log_level,
        help="Logging level for stderr (default: %(default)s)",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    for command in COMMANDS:
        command.register(subparsers, settings)
    return parser


def _configure_logging(level: str) -> None:
    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.WARNING),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
    )


def main(argv: Optional[List[str]] = None) -> int:
    """Run the CLI and return the process exit code."""
    settings = get_settings()
    parser = build_parser(settings)
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    _configure_logging(args.log_level)
    for problem in settings.validate_config():
        logger.warning(f"Configuration: {problem}")

    try:
        return args.handler(args, settings)
    except BandTooNarrow as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_BAND
    except ValidationError as e:
        print(f"error: invalid arguments: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (LeuvenshteinError, ValueError, KeyError, OSError) as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_USAGE
