"""
Shared Flags

Argument groups used by every subcommand that computes distances, and the
conversion of parsed flags into library objects.
"""

import argparse

from leuvenshtein.core.config import KEY_ENCODINGS, Settings
from leuvenshtein.models.alphabet import AlphabetSpec
from leuvenshtein.models.kernel import BandMode, BandSpec
from leuvenshtein.models.noise import NoiseParams


def add_run_arguments(parser: argparse.ArgumentParser, settings: Settings) -> None:
    """Flags describing how a distance is computed."""
    parser.add_argument(
        "--mode",
        choices=[m.value for m in BandMode],
        default=BandMode.EXACT.value,
        help="Band: exact, skip (half band), approx (needs --ell) or fixed (needs --half-width)",
    )
    parser.add_argument("--ell", type=int, default=None, help="Accuracy threshold for approx mode")
    parser.add_argument("--half-width", type=int, default=None, help="Explicit half-width for fixed mode")
    parser.add_argument(
        "--encoding",
        default=settings.default_alphabet,
        help="Alphabet: ascii7, lower26, dna4 or custom:<file> (default: %(default)s)",
    )
    parser.add_argument(
        "--budget",
        type=float,
        default=settings.budget,
        help="Noise budget in fresh-PBS variance units (default: %(default)s, env LEUVEN_BUDGET)",
    )
    parser.add_argument(
        "--key-encoding",
        choices=list(KEY_ENCODINGS),
        default=settings.key_encoding,
        help="Packed key layout (default: %(default)s)",
    )
    parser.add_argument("--preprocess", action="store_true", help="Treat the second string as plaintext and prebuild the equality table")
    parser.add_argument("--subset", default=None, help="Characters covered by the equality table (default: whole alphabet)")
    parser.add_argument(
        "--trivial-boundaries",
        action="store_true",
        default=settings.trivial_boundaries,
        help="Use noiseless boundary differentials",
    )
    parser.add_argument("--json", action="store_true", help="Machine-readable output")


def band_from_args(args: argparse.Namespace) -> BandSpec:
    """BandSpec for the parsed flags; raises ValidationError on missing mode arguments."""
    return BandSpec(mode=args.mode, ell=args.ell, half_width=args.half_width)


def params_from_args(args: argparse.Namespace) -> NoiseParams:
    return NoiseParams(max_variance_budget=args.budget)


def alphabet_from_args(args: argparse.Namespace) -> AlphabetSpec:
    return AlphabetSpec.resolve(args.encoding)
