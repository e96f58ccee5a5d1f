"""
Error Types

Every failure the library raises derives from LeuvenshteinError. Input
validation failures also derive from ValueError.
"""


class LeuvenshteinError(Exception):
    """Base class for all library errors."""


class NoiseBudgetExceeded(LeuvenshteinError):
    """A bootstrap input carries more noise variance than the budget allows."""

    def __init__(self, variance: float, budget: float):
        self.variance = variance
        self.budget = budget
        super().__init__(f"noise variance {variance:g} exceeds budget {budget:g}")


class ValueOutsideLutHalf(LeuvenshteinError, ValueError):
    """An identity refresh was requested on a value outside [0, 16)."""


class PackingViolation(LeuvenshteinError):
    """A packed lookup cannot be represented by a negacyclic 16-entry table."""


class BandTooNarrow(LeuvenshteinError, ValueError):
    """The band half-width cannot reach the bottom-right cell."""

    def __init__(self, half_width: int, m: int, n: int):
        self.half_width = half_width
        super().__init__(f"half-width {half_width} < |m - n| = {abs(m - n)} (m={m}, n={n})")


class PlaintextOutOfRange(LeuvenshteinError, ValueError):
    """A plaintext does not fit the 5-bit plaintext space."""


class CharNotInAlphabet(LeuvenshteinError, ValueError):
    """A character is not part of the declared alphabet."""


class CharNotInSubset(LeuvenshteinError, KeyError):
    """A plaintext query character has no row in the preprocessed table."""


class PositionOutOfRange(LeuvenshteinError, IndexError):
    """A preprocessed table column outside 1..m was requested."""


class AlphabetSpecError(LeuvenshteinError, ValueError):
    """An alphabet specification file is malformed."""


class TableFormatError(LeuvenshteinError, ValueError):
    """A serialized table could not be read."""
