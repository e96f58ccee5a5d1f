"""
Ciphertext Models

A simulated ciphertext is a plaintext residue plus a noise ledger:
a map from noise source id to signed coefficient. Variance is the sum of
squared coefficients, in units of one fresh bootstrap output. Bootstrap
inputs and outputs live mod 32; only score accumulators are lifted to a
wider modulus.
"""

from dataclasses import dataclass, field
from typing import Dict, Iterable, Mapping, Tuple

NoiseLedger = Mapping[int, int]

EMPTY_LEDGER: Dict[int, int] = {}


def ledger_variance(ledger: NoiseLedger) -> int:
    """Sum of squared coefficients."""
    return sum(c * c for c in ledger.values())


def combine_ledgers(terms: Iterable[Tuple[NoiseLedger, int]]) -> Dict[int, int]:
    """
    Linear combination of ledgers.

    Args:
        terms: (ledger, coefficient) pairs

    Returns:
        New ledger; sources whose coefficients cancel are dropped.
    """
    out: Dict[int, int] = {}
    for ledger, k in terms:
        if k == 0:
            continue
        for source, c in ledger.items():
            total = out.get(source, 0) + k * c
            if total:
                out[source] = total
            else:
                out.pop(source, None)
    return out


@dataclass(frozen=True, slots=True)
class SimCiphertext:
    """Immutable simulated ciphertext; operations return new instances."""

    value: int
    ledger: NoiseLedger = field(default_factory=dict)
    modulus: int = 32

    @property
    def variance(self) -> int:
        return ledger_variance(self.ledger)

    @property
    def is_trivial(self) -> bool:
        return not self.ledger
