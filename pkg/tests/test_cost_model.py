"""First-order PBS cost model."""

import pytest

from leuvenshtein.models.kernel import BandSpec
from leuvenshtein.services.cost_model import (
    KERNEL_ONLY_PBS,
    baseline_run_pbs,
    estimate_run_pbs,
    improvement_factors,
)
from leuvenshtein.services.kernel import band_cell_count
from leuvenshtein.services.pipeline import run_pair


def test_exact_estimate_is_three_per_cell():
    estimate = estimate_run_pbs(16, 16)
    assert estimate.to_dict() == {"equality": 512, "kernel": 256, "preprocessing": 0, "total": 768}


def test_banded_estimate_uses_band_cells():
    estimate = estimate_run_pbs(100, 100, BandSpec.fixed(10))
    assert estimate.kernel == band_cell_count(100, 10)
    assert estimate.total == 3 * 1990


def test_preprocessed_estimate():
    estimate = estimate_run_pbs(64, 64, preprocess=True, alphabet_size=26)
    assert estimate.equality == 0
    assert estimate.preprocessing == 2 * 26 * 64
    assert estimate.total == 2 * 26 * 64 + 64 * 64


def test_baselines_per_cell():
    assert baseline_run_pbs("wagner_fischer", 10, 10) == 3300
    assert baseline_run_pbs("myers", 10, 10) == 1800
    assert KERNEL_ONLY_PBS["wagner_fischer"] == 94


def test_improvement_factors_exact():
    factors = improvement_factors(20, 20)
    assert factors["wagner_fischer_total"] == pytest.approx(11.0)
    assert factors["myers_total"] == pytest.approx(6.0)
    assert factors["wagner_fischer_kernel"] == 94
    assert factors["myers_kernel"] == 16


def test_estimate_matches_measurement(ascii7):
    for band in (BandSpec.exact(), BandSpec.skip(), BandSpec.approx(6)):
        report = run_pair("abcdefghijkl", "abcdxfghijlm", ascii7, band)
        assert estimate_run_pbs(12, 12, band).total == report.pbs_total
