"""Encrypted edit-distance kernel."""
from .distance import (
    MIN_BUDGET,
    DistanceResult,
    Eq9Provider,
    band_cell_count,
    cell_kernel,
    distance,
    extract_score,
    predict_key_variance,
    refresh_if_needed,
    refresh_operand,
    visited_cells,
)
from .grid import DeltaGrid
from .lut import build_min_lut, key_table, m_value, pack_lut

__all__ = [
    "MIN_BUDGET",
    "DistanceResult",
    "Eq9Provider",
    "band_cell_count",
    "cell_kernel",
    "distance",
    "extract_score",
    "predict_key_variance",
    "refresh_if_needed",
    "refresh_operand",
    "visited_cells",
    "DeltaGrid",
    "build_min_lut",
    "key_table",
    "m_value",
    "pack_lut",
]
