"""
Kernel Models

Packed-key layouts and band descriptions for the encrypted edit-distance
kernel.
"""

import math
from enum import Enum
from typing import Optional

from pydantic import BaseModel, Field, model_validator

from leuvenshtein.core.errors import BandTooNarrow

# Public constant shared by both key layouts: 1 + 3.
KEY_CONSTANT = 4


class KeyEncoding(str, Enum):
    """
    Layout of the packed kernel key.

    original: (dv + 1) + 3*(1 + dh) + 9*eq
    negated:  (1 - dv) + 3*(1 + dh) + 9*eq
    """
    ORIGINAL = "original"
    NEGATED = "negated"

    @property
    def dv_sign(self) -> int:
        """Coefficient of the incoming vertical differential in the key."""
        return 1 if self is KeyEncoding.ORIGINAL else -1

    def key_of(self, dv: int, dh: int, eq: int) -> int:
        """Plaintext key for signed differentials and an equality bit."""
        return self.dv_sign * dv + 3 * dh + 9 * eq + KEY_CONSTANT

    def decode(self, key: int) -> Optional[tuple]:
        """
        Inverse of key_of on the 18 reachable keys.

        Returns:
            (dv, dh, eq), or None for keys outside [0, 18)
        """
        if not 0 <= key < 18:
            return None
        eq, rest = divmod(key, 9)
        dh = rest // 3 - 1
        a = rest % 3
        dv = a - 1 if self is KeyEncoding.ORIGINAL else 1 - a
        return dv, dh, eq


class BandMode(str, Enum):
    EXACT = "exact"
    SKIP = "skip"
    APPROX = "approx"
    FIXED = "fixed"


class BandSpec(BaseModel):
    """
    Which cells of the d-matrix get computed.

    A cell (i, j) is visited when |i - j| <= half-width. The half-width is
    derived from the string lengths at run time, except in fixed mode.
    """

    mode: BandMode = Field(default=BandMode.EXACT, description="Band derivation rule")
    ell: Optional[int] = Field(default=None, ge=0, description="Accuracy threshold for approx mode")
    half_width: Optional[int] = Field(default=None, ge=0, description="Explicit half-width for fixed mode")

    model_config = {"frozen": True}

    @model_validator(mode="after")
    def _check_mode_arguments(self) -> "BandSpec":
        if self.mode is BandMode.APPROX and self.ell is None:
            raise ValueError("approx mode needs ell")
        if self.mode is BandMode.FIXED and self.half_width is None:
            raise ValueError("fixed mode needs half_width")
        return self

    @classmethod
    def exact(cls) -> "BandSpec":
        return cls(mode=BandMode.EXACT)

    @classmethod
    def skip(cls) -> "BandSpec":
        return cls(mode=BandMode.SKIP)

    @classmethod
    def approx(cls, ell: int) -> "BandSpec":
        return cls(mode=BandMode.APPROX, ell=ell)

    @classmethod
    def fixed(cls, half_width: int) -> "BandSpec":
        return cls(mode=BandMode.FIXED, half_width=half_width)

    def half_width_for(self, m: int, n: int) -> int:
        """
        Resolve the half-width for an m x n grid.

        An alignment that strays k diagonals away costs at least 2k - |m - n|,
        so the |m - n| term keeps exact and approx guarantees for unequal
        lengths.

        Raises:
            BandTooNarrow: a fixed half-width below |m - n|
        """
        delta = abs(m - n)
        longest = max(m, n)
        if self.mode is BandMode.EXACT:
            return longest
        if self.mode is BandMode.SKIP:
            return min(longest, max(delta, math.ceil((longest + delta) / 2)))
        if self.mode is BandMode.APPROX:
            return min(longest, max(delta, math.ceil((self.ell + delta) / 2)))
        if self.half_width < delta:
            raise BandTooNarrow(self.half_width, m, n)
        return self.half_width

    def is_full(self, m: int, n: int) -> bool:
        """Whether the resolved band covers every cell."""
        return self.half_width_for(m, n) >= max(m, n)

    @property
    def label(self) -> str:
        if self.mode is BandMode.APPROX:
            return f"approx({self.ell})"
        if self.mode is BandMode.FIXED:
            return f"fixed({self.half_width})"
        return self.mode.value
