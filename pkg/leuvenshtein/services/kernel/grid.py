"""
Banded Differential Grid

Stores the encrypted vertical and horizontal differentials of the cells
with |i - j| <= half_width. Reads of boundary positions (column 0, row 0)
and of cells outside the band return an encryption of 1.
"""

import threading
from typing import Dict, Iterator, List, Tuple

from leuvenshtein.models.ciphertext import SimCiphertext
from leuvenshtein.services.backend import FheBackend

Point = Tuple[int, int]


class DeltaGrid:
    """
    Banded storage of dv[i][j] and dh[i][j].

    Each "+1" read position gets its own ciphertext, created on first read
    and cached. With trivial_boundaries they are all the same noiseless
    trivial instead.
    """

    def __init__(self, m: int, n: int, half_width: int, backend: FheBackend, trivial_boundaries: bool = False):
        self.m = m
        self.n = n
        self.half_width = half_width
        self.backend = backend
        self.trivial_boundaries = trivial_boundaries
        self.dv: Dict[Point, SimCiphertext] = {}
        self.dh: Dict[Point, SimCiphertext] = {}
        self.key_variance: Dict[Point, float] = {}
        self._ones: Dict[Tuple[str, int, int], SimCiphertext] = {}
        self._lock = threading.Lock()
        self._trivial_one = backend.trivial(1) if trivial_boundaries else None

    # ===========================================
    # Geometry
    # ===========================================

    def in_band(self, i: int, j: int) -> bool:
        return abs(i - j) <= self.half_width

    def is_cell(self, i: int, j: int) -> bool:
        """Whether (i, j) is computed by the kernel rather than read as +1."""
        return 1 <= i <= self.m and 1 <= j <= self.n and self.in_band(i, j)

    def anti_diagonals(self) -> Iterator[List[Point]]:
        """In-band cells grouped by i + j, in increasing order."""
        for k in range(2, self.m + self.n + 1):
            cells = [
                (i, k - i)
                for i in range(max(1, k - self.n), min(self.m, k - 1) + 1)
                if self.in_band(i, k - i)
            ]
            if cells:
                yield cells

    # ===========================================
    # Access
    # ===========================================

    def _one(self, kind: str, i: int, j: int) -> SimCiphertext:
        if self._trivial_one is not None:
            return self._trivial_one
        key = (kind, i, j)
        with self._lock:
            if key not in self._ones:
                self._ones[key] = self.backend.encrypt(1)
            return self._ones[key]

    def get_dv(self, i: int, j: int) -> SimCiphertext:
        stored = self.dv.get((i, j))
        return stored if stored is not None else self._one("v", i, j)

    def get_dh(self, i: int, j: int) -> SimCiphertext:
        stored = self.dh.get((i, j))
        return stored if stored is not None else self._one("h", i, j)

    def set_dv(self, i: int, j: int, x: SimCiphertext) -> None:
        self.dv[(i, j)] = x

    def set_dh(self, i: int, j: int, x: SimCiphertext) -> None:
        self.dh[(i, j)] = x

    @property
    def max_key_variance(self) -> float:
        return max(self.key_variance.values(), default=0)

    def decrypt_dv(self) -> Dict[Point, int]:
        """Signed plaintext of every computed vertical differential."""
        return {p: self.backend.decrypt_signed(x) for p, x in self.dv.items() if self.is_cell(*p)}

    def decrypt_dh(self) -> Dict[Point, int]:
        return {p: self.backend.decrypt_signed(x) for p, x in self.dh.items() if self.is_cell(*p)}
