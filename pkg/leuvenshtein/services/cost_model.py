"""
PBS Cost Model

First-order bootstrap counts for the encrypted edit-distance variants,
next to measured per-cell figures for textbook Wagner-Fischer and
bitsliced Myers implementations built on 2-bit message / 2-bit carry
integers with ASCII characters.
"""

from dataclasses import dataclass
from typing import Any, Dict, Optional
import logging

from leuvenshtein.models.kernel import BandSpec
from leuvenshtein.services.kernel import visited_cells

logger = logging.getLogger(__name__)


# Bootstraps per cell, split into the equality check and the cell update.
# The baseline figures are measured averages, not exact counts.
PBS_PER_CELL = {
    "wagner_fischer": {
        "equality": 5,
        "kernel": 28,
    },
    "myers": {
        "equality": 5,
        "kernel": 13,
    },
    "leuvenshtein": {
        "equality": 2,
        "kernel": 1,
    },
}

# Average cell-update bootstraps when counted without the equality phase
# and including carry maintenance.
KERNEL_ONLY_PBS = {
    "wagner_fischer": 94,
    "myers": 16,
    "leuvenshtein": 1,
}


@dataclass
class PbsEstimate:
    """Predicted bootstraps of one run, by phase."""

    equality: int = 0
    kernel: int = 0
    preprocessing: int = 0

    @property
    def total(self) -> int:
        return self.equality + self.kernel + self.preprocessing

    def to_dict(self) -> Dict[str, Any]:
        return {
            "equality": self.equality,
            "kernel": self.kernel,
            "preprocessing": self.preprocessing,
            "total": self.total,
        }


def estimate_run_pbs(
    m: int,
    n: int,
    band: Optional[BandSpec] = None,
    preprocess: bool = False,
    alphabet_size: int = 128,
    eq_pbs: int = PBS_PER_CELL["leuvenshtein"]["equality"],
) -> PbsEstimate:
    """
    Bootstraps the encrypted pipeline spends on an m x n comparison,
    ignoring noise refreshes.

    Args:
        m: encrypted string length
        n: second string length
        band: band derivation (default: exact)
        preprocess: equality from a prebuilt |S| x m table
        alphabet_size: |S| of the table
        eq_pbs: bootstraps per character comparison
    """
    band = band or BandSpec.exact()
    cells = visited_cells(m, n, band.half_width_for(m, n))
    if preprocess:
        return PbsEstimate(equality=0, kernel=cells, preprocessing=eq_pbs * alphabet_size * m)
    return PbsEstimate(equality=eq_pbs * cells, kernel=cells)


def baseline_run_pbs(algorithm: str, m: int, n: int) -> int:
    """First-order full-matrix total of a baseline: per-cell PBS times m*n."""
    per_cell = PBS_PER_CELL[algorithm]
    return (per_cell["equality"] + per_cell["kernel"]) * m * n


def improvement_factors(m: int, n: int, band: Optional[BandSpec] = None) -> Dict[str, float]:
    """
    How many times fewer bootstraps the encrypted pipeline needs than each
    baseline, for the whole run and for the cell update alone.
    """
    ours = estimate_run_pbs(m, n, band).total
    factors: Dict[str, float] = {}
    for algorithm in ("wagner_fischer", "myers"):
        factors[f"{algorithm}_total"] = baseline_run_pbs(algorithm, m, n) / ours if ours else 0.0
        factors[f"{algorithm}_kernel"] = KERNEL_ONLY_PBS[algorithm] / KERNEL_ONLY_PBS["leuvenshtein"]
    logger.debug(f"improvement factors for {m}x{n}: {factors}")
    return factors
