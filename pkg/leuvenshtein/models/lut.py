"""
Lookup Table Models

A 5-bit plaintext space with one padding bit: a bootstrap table is freely
programmable on [0, 16) and negacyclically forced on [16, 32).
"""

from dataclasses import dataclass
from typing import Callable, Iterable, List, Tuple

from leuvenshtein.core.errors import PlaintextOutOfRange, LeuvenshteinError


class PlaintextSpace:
    """Layout of the 5-bit plaintext: 4 message bits and a padding bit."""

    TOTAL_BITS = 5
    MODULUS = 32
    HALF = 16

    @classmethod
    def reduce(cls, v: int) -> int:
        return v % cls.MODULUS

    @classmethod
    def check(cls, v: int) -> int:
        """Return v unchanged if it is a valid plaintext, else raise."""
        if not isinstance(v, int) or not 0 <= v < cls.MODULUS:
            raise PlaintextOutOfRange(f"plaintext {v!r} outside [0, {cls.MODULUS})")
        return v

    @classmethod
    def message(cls, v: int) -> int:
        """The 4 message bits of v, dropping the padding bit."""
        return v % cls.HALF

    @classmethod
    def to_signed(cls, v: int) -> int:
        """Interpret v as a signed value in [-16, 16)."""
        v %= cls.MODULUS
        return v - cls.MODULUS if v >= cls.HALF else v


@dataclass(frozen=True)
class Lut16:
    """
    A 16-entry base table.

    Inputs in [16, 32) evaluate to the negation (mod 32) of the entry at
    x - 16; zero entries therefore stay zero on both halves.
    """

    entries: Tuple[int, ...]

    def __post_init__(self):
        if len(self.entries) != PlaintextSpace.HALF:
            raise LeuvenshteinError(f"a Lut16 needs 16 entries, got {len(self.entries)}")
        for e in self.entries:
            PlaintextSpace.check(e)

    @classmethod
    def of(cls, entries: Iterable[int]) -> "Lut16":
        return cls(tuple(int(e) for e in entries))

    @classmethod
    def from_function(cls, f: Callable[[int], int], modulus: int = PlaintextSpace.MODULUS) -> "Lut16":
        """Tabulate f on [0, 16), reducing outputs mod `modulus`."""
        return cls(tuple(f(x) % modulus for x in range(PlaintextSpace.HALF)))

    @classmethod
    def identity(cls) -> "Lut16":
        return cls(tuple(range(PlaintextSpace.HALF)))

    def eval(self, x: int) -> int:
        """Negacyclic evaluation on the full 32-value space."""
        PlaintextSpace.check(x)
        if x < PlaintextSpace.HALF:
            return self.entries[x]
        return (PlaintextSpace.MODULUS - self.entries[x - PlaintextSpace.HALF]) % PlaintextSpace.MODULUS

    def full_image(self) -> List[int]:
        return [self.eval(x) for x in range(PlaintextSpace.MODULUS)]

    def dump(self) -> str:
        """Render as 16 lines of `index<TAB>output`."""
        return "".join(f"{i}\t{e}\n" for i, e in enumerate(self.entries))

    @classmethod
    def parse(cls, text: str) -> "Lut16":
        entries = [0] * PlaintextSpace.HALF
        seen = set()
        for lineno, line in enumerate(text.splitlines(), 1):
            if not line.strip():
                continue
            fields = line.split("\t")
            try:
                if len(fields) != 2:
                    raise ValueError(f"expected index<TAB>output, got {line!r}")
                index, output = int(fields[0]), int(fields[1])
            except ValueError as e:
                raise LeuvenshteinError(f"line {lineno}: {e}") from e
            if not 0 <= index < PlaintextSpace.HALF:
                raise LeuvenshteinError(f"line {lineno}: index {index} outside 0..15")
            entries[index] = output
            seen.add(index)
        if seen != set(range(PlaintextSpace.HALF)):
            raise LeuvenshteinError("LUT dump must list every index 0..15 exactly once")
        return cls(tuple(entries))


def negacyclic_eval(lut: Lut16, x: int) -> int:
    """Evaluate `lut` at x in [0, 32) with the negacyclic extension."""
    return lut.eval(x)
