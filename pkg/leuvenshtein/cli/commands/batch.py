"""
batch: JSONL in, JSONL out.

Every input line {"a": ..., "b": ...} gets one output line, in input
order. Lines that fail produce {"line": k, "error": "<Type>: <message>"}
and the run continues. Each line runs on its own backend; the per-line
statistics are merged at the end.
"""

import argparse
import json
import logging
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Any, Dict, List, Tuple

from pydantic import ValidationError

from leuvenshtein.core.config import Settings
from leuvenshtein.core.errors import LeuvenshteinError
from leuvenshtein.models.report import BatchItem
from leuvenshtein.services.backend import BackendStats, SimBackend
from leuvenshtein.services.pipeline import run_pair
from .common import add_run_arguments, alphabet_from_args, band_from_args, params_from_args

logger = logging.getLogger(__name__)


def register(subparsers, settings: Settings) -> None:
    parser = subparsers.add_parser("batch", help="Compute distances for every line of a JSONL file")
    parser.add_argument("input", help="JSONL file with {\"a\": ..., \"b\": ...} per line, or - for stdin")
    parser.add_argument("--output", default=None, help="Write JSONL here instead of stdout")
    add_run_arguments(parser, settings)
    parser.add_argument(
        "--threads",
        type=int,
        default=settings.batch_threads,
        help="Worker threads over lines (default: %(default)s)",
    )
    parser.add_argument("--timing", action="store_true", help="Include wall_time per line")
    parser.set_defaults(handler=handle)


def _read_lines(source: str) -> List[Tuple[int, str]]:
    if source == "-":
        text = sys.stdin.read()
    else:
        text = Path(source).read_text(encoding="utf-8")
    return [(k, line) for k, line in enumerate(text.splitlines(), 1) if line.strip()]


def handle(args: argparse.Namespace, settings: Settings) -> int:
    if args.threads < 1:
        raise ValueError("--threads must be positive")
    spec = alphabet_from_args(args)
    band = band_from_args(args)
    params = params_from_args(args)
    lines = _read_lines(args.input)
    totals = BackendStats()

    def run_line(item: Tuple[int, str]) -> Dict[str, Any]:
        k, raw = item
        backend = SimBackend(params)
        try:
            pair = BatchItem.model_validate_json(raw)
            report = run_pair(
                pair.a,
                pair.b,
                spec,
                band,
                params,
                encoding=args.key_encoding,
                preprocess=args.preprocess,
                subset=args.subset,
                trivial_boundaries=args.trivial_boundaries,
                timing=args.timing,
                backend=backend,
            )
            return report.to_json_dict()
        except (LeuvenshteinError, ValidationError, ValueError, KeyError) as e:
            logger.debug(f"line {k} failed: {e}")
            return {"line": k, "error": f"{type(e).__name__}: {e}"}
        finally:
            totals.merge(backend.stats)

    if args.threads > 1:
        with ThreadPoolExecutor(max_workers=args.threads) as pool:
            results = list(pool.map(run_line, lines))
    else:
        results = [run_line(item) for item in lines]

    out = "".join(json.dumps(r) + "\n" for r in results)
    if args.output:
        Path(args.output).write_text(out, encoding="utf-8")
    else:
        sys.stdout.write(out)
    logger.info(f"Batch merged: {len(results)} lines, {totals.pbs_count} PBS")
    return 0
