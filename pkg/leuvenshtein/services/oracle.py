"""
Plaintext Oracles

Reference edit-distance computations used as ground truth: Wagner-Fischer,
the differential (Δv, Δh) view of its matrix, the per-cell differential
formulas and a banded variant that mirrors the encrypted kernel's band
handling.
"""

from dataclasses import dataclass
from typing import Callable, List, Sequence, Tuple
import random

from leuvenshtein.core.errors import BandTooNarrow

DMatrix = List[List[int]]
Point = Tuple[int, int]
Path = List[Point]

TERNARY = (-1, 0, 1)


@dataclass(frozen=True)
class DiffMatrices:
    """
    Neighbour differences of a d-matrix.

    dv[i][j] = D[i][j] - D[i-1][j] and dh[i][j] = D[i][j] - D[i][j-1] for
    1 <= i <= m, 1 <= j <= n. Boundaries follow the all-ones setup:
    dv[i][0] = 1 and dh[0][j] = 1. Index positions that carry no
    differential (dv[0][*], dh[*][0]) hold 0.
    """

    dv: List[List[int]]
    dh: List[List[int]]

    @property
    def m(self) -> int:
        return len(self.dv) - 1

    @property
    def n(self) -> int:
        return len(self.dv[0]) - 1


def wf_distance(a: Sequence, b: Sequence) -> Tuple[int, DMatrix]:
    """
    Wagner-Fischer with unit costs.

    Returns:
        (distance, d-matrix of shape (m+1) x (n+1))
    """
    m, n = len(a), len(b)
    d = [[0] * (n + 1) for _ in range(m + 1)]
    for i in range(m + 1):
        d[i][0] = i
    for j in range(n + 1):
        d[0][j] = j

    for i in range(1, m + 1):
        for j in range(1, n + 1):
            cost = 0 if a[i - 1] == b[j - 1] else 1
            d[i][j] = min(d[i - 1][j] + 1,  # deletion
                          d[i][j - 1] + 1,  # insertion
                          d[i - 1][j - 1] + cost)  # substitution
    return d[m][n], d


def diff_matrices(a: Sequence, b: Sequence) -> DiffMatrices:
    """Differentials of the Wagner-Fischer matrix."""
    _, d = wf_distance(a, b)
    m, n = len(a), len(b)
    dv = [[0] * (n + 1) for _ in range(m + 1)]
    dh = [[0] * (n + 1) for _ in range(m + 1)]
    for i in range(1, m + 1):
        dv[i][0] = 1
    for j in range(1, n + 1):
        dh[0][j] = 1
    for i in range(1, m + 1):
        for j in range(1, n + 1):
            dv[i][j] = d[i][j] - d[i - 1][j]
            dh[i][j] = d[i][j] - d[i][j - 1]
    return DiffMatrices(dv, dh)


def _check_cell_inputs(eq: int, dv_in: int, dh_in: int) -> None:
    if eq not in (0, 1):
        raise ValueError(f"eq must be 0 or 1, got {eq!r}")
    if dv_in not in TERNARY or dh_in not in TERNARY:
        raise ValueError(f"differentials must be in {{-1, 0, 1}}, got dv={dv_in!r} dh={dh_in!r}")


def cell_reference(eq: int, dv_in: int, dh_in: int) -> Tuple[int, int]:
    """Shared-minimum cell update: both outputs derive from one min."""
    _check_cell_inputs(eq, dv_in, dh_in)
    low = min(-eq, dv_in, dh_in)
    return low + 1 - dh_in, low + 1 - dv_in


def myers_cell(eq: int, dv_in: int, dh_in: int) -> Tuple[int, int]:
    """The two independent three-way minimum formulas for one cell."""
    _check_cell_inputs(eq, dv_in, dh_in)
    dv_out = min(1, dv_in + 1 - dh_in, 1 - eq - dh_in)
    dh_out = min(1, 1 + dh_in - dv_in, 1 - eq - dv_in)
    return dv_out, dh_out


# =============================================================================
# Monotone paths
# =============================================================================

def last_row_path(m: int, n: int) -> Path:
    """Down the first column, then along the last row."""
    return [(i, 0) for i in range(m + 1)] + [(m, j) for j in range(1, n + 1)]


def staircase_path(m: int, n: int) -> Path:
    """
    Path hugging the main diagonal.

    Intermediate points keep the diagonal offset j - i in {-1, 0}; the
    tail runs along the last row or column.
    """
    i = j = 0
    path = [(0, 0)]
    while (i, j) != (m, n):
        if i == m:
            j += 1
        elif j == n:
            i += 1
        elif i <= j:
            i += 1
        else:
            j += 1
        path.append((i, j))
    return path


def random_inband_path(m: int, n: int, half_width: int, rng: random.Random) -> Path:
    """Random monotone path whose every point satisfies |i - j| <= half_width."""
    if half_width < abs(m - n) or (half_width == 0 and (m or n)):
        raise BandTooNarrow(half_width, m, n)
    i = j = 0
    path = [(0, 0)]
    while (i, j) != (m, n):
        moves = []
        if i < m and abs(i + 1 - j) <= half_width:
            moves.append((i + 1, j))
        if j < n and abs(i - j - 1) <= half_width:
            moves.append((i, j + 1))
        i, j = rng.choice(moves)
        path.append((i, j))
    return path


def path_sum(get_dv: Callable[[int, int], int], get_dh: Callable[[int, int], int], path: Path) -> int:
    """Sum the differentials crossed by `path`, which starts at (0, 0)."""
    total = 0
    for (pi, pj), (i, j) in zip(path, path[1:]):
        total += get_dv(i, j) if i == pi + 1 else get_dh(i, j)
    return total


def d_from_diffs(diffs: DiffMatrices, path: Path) -> int:
    """Rebuild D at the end of `path` from the differentials along it."""
    return path_sum(lambda i, j: diffs.dv[i][j], lambda i, j: diffs.dh[i][j], path)


# =============================================================================
# Banded variant
# =============================================================================

def banded_distance(a: Sequence, b: Sequence, half_width: int) -> int:
    """
    Edit distance computed only on cells with |i - j| <= half_width.

    Out-of-band neighbour reads count as +1 differentials, so every value
    is the cost of some real alignment: the result never undercuts the true
    distance, and equals it whenever an optimal alignment stays in band.

    Raises:
        BandTooNarrow: half_width < |m - n|
    """
    m, n = len(a), len(b)
    if half_width < abs(m - n):
        raise BandTooNarrow(half_width, m, n)

    dv = {}
    dh = {}

    def get_dv(i: int, j: int) -> int:
        return 1 if j == 0 else dv.get((i, j), 1)

    def get_dh(i: int, j: int) -> int:
        return 1 if i == 0 else dh.get((i, j), 1)

    for i in range(1, m + 1):
        for j in range(max(1, i - half_width), min(n, i + half_width) + 1):
            eq = 1 if a[i - 1] == b[j - 1] else 0
            dv[(i, j)], dh[(i, j)] = cell_reference(eq, get_dv(i, j - 1), get_dh(i - 1, j))

    return path_sum(get_dv, get_dh, staircase_path(m, n))
