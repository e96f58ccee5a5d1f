"""
bench: measured bootstraps of seeded random runs next to the cost model.

Wall-clock figures depend on a real FHE runtime; PBS counts do not, so the
report compares those.
"""

import argparse
import json
import random
import string
from typing import Any, Dict, List

from tabulate import tabulate

from leuvenshtein.core.config import Settings
from leuvenshtein.models.alphabet import AlphabetSpec
from leuvenshtein.models.kernel import BandMode, BandSpec
from leuvenshtein.models.noise import NoiseParams
from leuvenshtein.services.cost_model import baseline_run_pbs, estimate_run_pbs, improvement_factors
from leuvenshtein.services.oracle import wf_distance
from leuvenshtein.services.pipeline import run_pair

BENCH_CHARS = string.ascii_letters + string.digits


def register(subparsers, settings: Settings) -> None:
    parser = subparsers.add_parser("bench", help="PBS counts of random runs against the cost model")
    parser.add_argument("--lengths", default="8,16,32", help="Comma-separated string lengths (default: %(default)s)")
    parser.add_argument("--modes", default="exact,skip,approx", help="Comma-separated band modes (default: %(default)s)")
    parser.add_argument("--ell", type=int, default=10, help="Accuracy threshold for approx mode (default: %(default)s)")
    parser.add_argument("--budget", type=float, default=settings.budget, help="Noise budget (default: %(default)s)")
    parser.add_argument("--seed", type=int, default=settings.random_seed, help="Random seed (default: %(default)s)")
    parser.add_argument("--json", action="store_true", help="Machine-readable output")
    parser.set_defaults(handler=handle)


def _band(mode: str, ell: int) -> BandSpec:
    mode = BandMode(mode)
    if mode is BandMode.APPROX:
        return BandSpec.approx(ell)
    if mode is BandMode.FIXED:
        raise ValueError("bench does not take fixed bands")
    return BandSpec(mode=mode)


def run_bench(lengths: List[int], modes: List[str], ell: int, params: NoiseParams, seed: int) -> List[Dict[str, Any]]:
    """One random ascii7 pair per length, run under every mode."""
    rng = random.Random(seed)
    spec = AlphabetSpec.ascii7()
    rows = []
    for length in lengths:
        a = "".join(rng.choice(BENCH_CHARS) for _ in range(length))
        b = "".join(rng.choice(BENCH_CHARS) for _ in range(length))
        truth, _ = wf_distance(a, b)
        for mode in modes:
            band = _band(mode, ell)
            report = run_pair(a, b, spec, band, params)
            estimate = estimate_run_pbs(length, length, band)
            factors = improvement_factors(length, length, band)
            rows.append({
                "length": length,
                "mode": report.mode,
                "distance": report.distance,
                "true_distance": truth,
                "visited_cells": report.visited_cells,
                "pbs_equality": report.pbs_equality,
                "pbs_kernel": report.pbs_kernel,
                "refresh_count": report.refresh_count,
                "pbs_total": report.pbs_total,
                "estimate_total": estimate.total,
                "wf_total": baseline_run_pbs("wagner_fischer", length, length),
                "myers_total": baseline_run_pbs("myers", length, length),
                "vs_wf": round(factors["wagner_fischer_total"], 2),
                "vs_myers": round(factors["myers_total"], 2),
            })
    return rows


def handle(args: argparse.Namespace, settings: Settings) -> int:
    lengths = [int(x) for x in args.lengths.split(",") if x.strip()]
    modes = [x.strip() for x in args.modes.split(",") if x.strip()]
    if any(length < 0 for length in lengths):
        raise ValueError("--lengths must be non-negative")
    rows = run_bench(lengths, modes, args.ell, NoiseParams(max_variance_budget=args.budget), args.seed)
    if args.json:
        print(json.dumps(rows))
    else:
        print(tabulate(rows, headers="keys", tablefmt="github"))
    return 0
