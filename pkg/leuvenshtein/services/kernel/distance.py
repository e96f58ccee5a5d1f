"""
Encrypted Edit Distance

Single-bootstrap cell kernel, anti-diagonal traversal of the band, noise
refresh scheduling and score extraction.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Optional, Tuple

from leuvenshtein.core.errors import BandTooNarrow, NoiseBudgetExceeded
from leuvenshtein.models.ciphertext import NoiseLedger, SimCiphertext, combine_ledgers, ledger_variance
from leuvenshtein.models.kernel import KEY_CONSTANT, BandSpec, KeyEncoding
from leuvenshtein.models.lut import Lut16
from leuvenshtein.models.noise import NoiseParams
from leuvenshtein.services.backend import SCORE_MODULUS, FheBackend
from leuvenshtein.services.oracle import Path, last_row_path, staircase_path
from .grid import DeltaGrid
from .lut import build_min_lut

logger = logging.getLogger(__name__)

# Refreshed dv and dh plus a fresh eq9: 1 + 3^2 + 1.
MIN_BUDGET = 11

Eq9Provider = Callable[[int, int], SimCiphertext]


@dataclass
class DistanceResult:
    """Encrypted distance together with what the run left behind."""
    ciphertext: SimCiphertext
    grid: DeltaGrid
    half_width: int
    visited_cells: int
    refresh_count: int = 0
    path: Path = field(default_factory=list)

    @property
    def max_key_variance(self) -> float:
        return self.grid.max_key_variance


# =============================================================================
# Cell kernel
# =============================================================================

def cell_kernel(
    backend: FheBackend,
    dv_in: SimCiphertext,
    dh_in: SimCiphertext,
    eq9: SimCiphertext,
    lut: Lut16,
    encoding: KeyEncoding = KeyEncoding.NEGATED,
    params: Optional[NoiseParams] = None,
) -> Tuple[SimCiphertext, SimCiphertext, SimCiphertext]:
    """
    One d-matrix cell with one bootstrap.

    Returns:
        (dv_out, dh_out, M) where dv_out = M - dh_in and dh_out = M - dv_in
    """
    key = backend.linear((dv_in, encoding.dv_sign), (dh_in, 3), (eq9, 1), constant=KEY_CONSTANT)
    m = backend.pbs(key, lut, params, tag="kernel")
    return backend.sub(m, dh_in), backend.sub(m, dv_in), m


def predict_key_variance(
    dv_in: NoiseLedger,
    dh_in: NoiseLedger,
    eq9: NoiseLedger,
    encoding: KeyEncoding = KeyEncoding.NEGATED,
) -> int:
    """Exact variance of the key the kernel would form from these ledgers."""
    return ledger_variance(combine_ledgers(((dv_in, encoding.dv_sign), (dh_in, 3), (eq9, 1))))


def refresh_operand(backend: FheBackend, x: SimCiphertext, params: Optional[NoiseParams] = None) -> SimCiphertext:
    """Identity bootstrap on a differential, shifted into [0, 16) and back."""
    return backend.scalar_add(backend.refresh(backend.scalar_add(x, 1), params), -1)


def refresh_if_needed(
    backend: FheBackend,
    grid: DeltaGrid,
    i: int,
    j: int,
    eq9: SimCiphertext,
    encoding: KeyEncoding = KeyEncoding.NEGATED,
    params: Optional[NoiseParams] = None,
) -> int:
    """
    Refresh both incoming differentials of cell (i, j) when its key would
    exceed the budget. Refreshed operands replace the stored entries.

    Returns:
        Number of refresh bootstraps performed (0 or 2)
    """
    params = params or backend.params
    dv_in = grid.get_dv(i, j - 1)
    dh_in = grid.get_dh(i - 1, j)
    if params.allows(predict_key_variance(dv_in.ledger, dh_in.ledger, eq9.ledger, encoding)):
        return 0
    logger.debug(f"refreshing inputs of cell ({i}, {j})")
    grid.set_dv(i, j - 1, refresh_operand(backend, dv_in, params))
    grid.set_dh(i - 1, j, refresh_operand(backend, dh_in, params))
    return 2


# =============================================================================
# Traversal
# =============================================================================

def distance(
    eq9_provider: Eq9Provider,
    m: int,
    n: int,
    band: Optional[BandSpec] = None,
    params: Optional[NoiseParams] = None,
    *,
    backend: FheBackend,
    encoding: KeyEncoding = KeyEncoding.NEGATED,
    threads: int = 1,
    trivial_boundaries: bool = False,
) -> DistanceResult:
    """
    Encrypted edit distance over the band, one kernel bootstrap per cell.

    Args:
        eq9_provider: (i, j) -> encryption of 9*[a_i == b_j], 1-based
        m: length of the first string
        n: length of the second string
        band: which cells to compute (default: all)
        params: noise budget (default: the backend's)
        backend: ciphertext backend
        encoding: packed key layout
        threads: worker threads per anti-diagonal
        trivial_boundaries: use noiseless +1 boundaries

    Raises:
        BandTooNarrow: the band cannot reach (m, n)
        NoiseBudgetExceeded: budget below the workable minimum of 11
    """
    band = band or BandSpec.exact()
    params = params or backend.params
    encoding = KeyEncoding(encoding)
    if params.max_variance_budget < MIN_BUDGET:
        raise NoiseBudgetExceeded(MIN_BUDGET, params.max_variance_budget)
    half_width = band.half_width_for(m, n)
    if half_width < abs(m - n):
        raise BandTooNarrow(half_width, m, n)

    lut = build_min_lut(encoding)
    grid = DeltaGrid(m, n, half_width, backend, trivial_boundaries)

    def compute(cell: Tuple[int, int]) -> int:
        i, j = cell
        eq9 = eq9_provider(i, j)
        refreshed = refresh_if_needed(backend, grid, i, j, eq9, encoding, params)
        dv_in = grid.get_dv(i, j - 1)
        dh_in = grid.get_dh(i - 1, j)
        grid.key_variance[cell] = predict_key_variance(dv_in.ledger, dh_in.ledger, eq9.ledger, encoding)
        dv_out, dh_out, _ = cell_kernel(backend, dv_in, dh_in, eq9, lut, encoding, params)
        grid.set_dv(i, j, dv_out)
        grid.set_dh(i, j, dh_out)
        return refreshed

    logger.info(f"distance {m}x{n} band={band.label} half_width={half_width} encoding={encoding.value}")
    refresh_count = 0
    visited = 0
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            for diagonal in grid.anti_diagonals():
                refresh_count += sum(pool.map(compute, diagonal))
                visited += len(diagonal)
    else:
        for diagonal in grid.anti_diagonals():
            refresh_count += sum(compute(cell) for cell in diagonal)
            visited += len(diagonal)

    path = last_row_path(m, n) if band.is_full(m, n) else staircase_path(m, n)
    score = extract_score(backend, grid, path)
    logger.info(f"distance done: {visited} cells, {refresh_count} refreshes, max key variance {grid.max_key_variance}")
    return DistanceResult(score, grid, half_width, visited, refresh_count, path)


# =============================================================================
# Extraction
# =============================================================================

def extract_score(
    backend: FheBackend,
    grid: DeltaGrid,
    path: Optional[Path] = None,
    modulus: int = SCORE_MODULUS,
) -> SimCiphertext:
    """
    Sum the differentials crossed by a monotone path from (0, 0) to (m, n).

    Computed cells contribute their ciphertexts, lifted into a wide
    accumulator; boundary and out-of-band steps add the public constant 1.
    No bootstraps.
    """
    if path is None:
        full = grid.half_width >= max(grid.m, grid.n)
        path = last_row_path(grid.m, grid.n) if full else staircase_path(grid.m, grid.n)
    if path[0] != (0, 0) or path[-1] != (grid.m, grid.n):
        raise ValueError(f"path must run from (0, 0) to ({grid.m}, {grid.n})")

    acc: Optional[SimCiphertext] = None
    ones = 0
    for (pi, pj), (i, j) in zip(path, path[1:]):
        if (i - pi, j - pj) not in ((1, 0), (0, 1)):
            raise ValueError(f"path step ({pi}, {pj}) -> ({i}, {j}) is not monotone")
        if not grid.is_cell(i, j):
            ones += 1
            continue
        step = grid.get_dv(i, j) if i == pi + 1 else grid.get_dh(i, j)
        lifted = backend.lift(step, modulus)
        acc = lifted if acc is None else backend.add(acc, lifted)

    if acc is None:
        acc = backend.lift(backend.trivial(0), modulus)
    return backend.scalar_add(acc, ones) if ones else acc


def visited_cells(m: int, n: int, half_width: int) -> int:
    """Direct count of cells with 1 <= i <= m, 1 <= j <= n, |i - j| <= half_width."""
    return sum(
        min(n, i + half_width) - max(1, i - half_width) + 1
        for i in range(1, m + 1)
        if max(1, i - half_width) <= min(n, i + half_width)
    )


def band_cell_count(m: int, half_width: int) -> int:
    """Closed-form cell count of a square band: m(2l + 1) - l^2 - l."""
    if not 0 <= half_width <= m:
        raise ValueError(f"half-width must lie in [0, {m}], got {half_width}")
    return m * (2 * half_width + 1) - half_width * half_width - half_width
