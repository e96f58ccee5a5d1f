"""
Character Equality Circuits

Encrypted character comparison with as few bootstraps as the symbol layout
allows:

- eq4: subtract two <= 4-bit symbols and look the difference up in a table
  that is nonzero only at 0 (1 PBS, covers all 31 reachable differences).
- fold: chain further <= 3-bit symbols through 2*(x - y) + (1 - eq)
  (1 PBS per extra symbol; 2 PBS for 7-bit ASCII).
- chunked merge: per-chunk sub-equalities, summed and tested against their
  maximum with a merge table (n + 1 PBS for n chunks, grouped by 15).
"""

import logging
import math
from enum import Enum
from typing import Dict, List, Sequence

from leuvenshtein.models.alphabet import AlphabetSpec
from leuvenshtein.models.ciphertext import SimCiphertext
from leuvenshtein.models.lut import Lut16
from leuvenshtein.services.backend import FheBackend

logger = logging.getLogger(__name__)

SCALES = (1, 9)
MAX_MERGE_GROUP = 15
FOLD_RANGE = (-14, 15)


class EqTechnique(str, Enum):
    """Equality strategies compared in the PBS cost model."""
    STANDARD_2BIT = "standard_2bit"
    OURS_4BIT = "ours_4bit"
    COMBINED = "combined"


# =============================================================================
# Lookup tables
# =============================================================================

def eq_lut(scale: int = 1) -> Lut16:
    """`scale` at a zero difference, 0 for every other difference."""
    if scale not in SCALES:
        raise ValueError(f"scale must be one of {SCALES}, got {scale}")
    return Lut16.of([scale] + [0] * 15)


def merge_lut(n_sub: int, scale: int = 1) -> Lut16:
    """`scale` iff the summed sub-equalities reach their maximum n_sub."""
    if not 1 <= n_sub <= MAX_MERGE_GROUP:
        raise ValueError(f"merge groups hold 1..{MAX_MERGE_GROUP} sub-equalities, got {n_sub}")
    entries = [0] * 16
    entries[n_sub] = scale
    return Lut16.of(entries)


# key x + 4*y for 2-bit x, y: equal pairs land on 0, 5, 10, 15
PAIR_LUT_2BIT = Lut16.of([1 if x % 4 == x // 4 else 0 for x in range(16)])


def fold_compatible(widths: Sequence[int]) -> bool:
    """Whether every folded symbol keeps 2*(x - y) + (1 - eq) inside the 31-value window."""
    if widths[0] > 4:
        return False
    for w in widths[1:]:
        top = (1 << w) - 1
        if -2 * top < FOLD_RANGE[0] or 2 * top + 1 > FOLD_RANGE[1]:
            return False
    return True


# =============================================================================
# Circuits
# =============================================================================

def eq4(backend: FheBackend, x: SimCiphertext, y: SimCiphertext, scale: int = 1, tag: str = "equality") -> SimCiphertext:
    """Equality of two symbols in [0, 16) with one bootstrap."""
    return backend.pbs(backend.sub(x, y), eq_lut(scale), tag=tag)


def eq_fold(
    backend: FheBackend,
    x_syms: Sequence[SimCiphertext],
    y_syms: Sequence[SimCiphertext],
    scale: int = 1,
    tag: str = "equality",
) -> SimCiphertext:
    """
    Compare the leading symbol by subtraction, then fold each further
    symbol into the running equality bit: 2*(x - y) + (1 - eq).

    Uses exactly len(x_syms) bootstraps.
    """
    if len(x_syms) != len(y_syms) or not x_syms:
        raise ValueError("symbol lists must be non-empty and of equal length")
    last = len(x_syms) - 1
    eq = eq4(backend, x_syms[0], y_syms[0], scale if last == 0 else 1, tag)
    for k in range(1, len(x_syms)):
        diff = backend.sub(x_syms[k], y_syms[k])
        z = backend.linear((diff, 2), (eq, -1), constant=1)
        eq = backend.pbs(z, eq_lut(scale if k == last else 1), tag=tag)
    return eq


def eq_ascii(
    backend: FheBackend,
    x: Sequence[SimCiphertext],
    y: Sequence[SimCiphertext],
    scale: int = 1,
    tag: str = "equality",
) -> SimCiphertext:
    """7-bit character equality from a 4-bit and a 3-bit symbol: 2 PBS."""
    if len(x) != 2 or len(y) != 2:
        raise ValueError("ascii7 characters carry exactly two symbols")
    return eq_fold(backend, x, y, scale, tag)


def _merge(backend: FheBackend, eqs: List[SimCiphertext], scale: int, tag: str) -> SimCiphertext:
    while len(eqs) > MAX_MERGE_GROUP:
        groups = [eqs[k:k + MAX_MERGE_GROUP] for k in range(0, len(eqs), MAX_MERGE_GROUP)]
        eqs = [backend.pbs(backend.linear(*((e, 1) for e in g)), merge_lut(len(g)), tag=tag) for g in groups]
    acc = backend.linear(*((e, 1) for e in eqs))
    return backend.pbs(acc, merge_lut(len(eqs), scale), tag=tag)


def eq_chunked_merge(
    backend: FheBackend,
    x_syms: Sequence[SimCiphertext],
    y_syms: Sequence[SimCiphertext],
    scale: int = 1,
    chunk_bits: int = 2,
    tag: str = "equality",
) -> SimCiphertext:
    """
    Chunk-and-merge equality.

    Chunks of at most 2 bits are compared through the key x + 4*y; wider
    chunks use the subtraction check. The sub-equalities are summed and
    tested against their maximum.
    """
    if len(x_syms) != len(y_syms) or not x_syms:
        raise ValueError("chunk lists must be non-empty and of equal length")
    subs = []
    for x, y in zip(x_syms, y_syms):
        if chunk_bits <= 2:
            key = backend.linear((x, 1), (y, 4))
            subs.append(backend.pbs(key, PAIR_LUT_2BIT, tag=tag))
        else:
            subs.append(eq4(backend, x, y, 1, tag))
    return _merge(backend, subs, scale, tag)


def char_equality(
    backend: FheBackend,
    x_syms: Sequence[SimCiphertext],
    y_syms: Sequence[SimCiphertext],
    spec: AlphabetSpec,
    scale: int = 1,
    tag: str = "equality",
) -> SimCiphertext:
    """Cheapest circuit for the alphabet's symbol layout."""
    if fold_compatible(spec.widths):
        return eq_fold(backend, x_syms, y_syms, scale, tag)
    return eq_chunked_merge(backend, x_syms, y_syms, scale, max(spec.widths), tag)


def circuit_pbs(spec: AlphabetSpec) -> int:
    """Bootstraps per character comparison chosen by char_equality."""
    if fold_compatible(spec.widths):
        return len(spec.widths)
    n = len(spec.widths)
    return n + merge_count(n)


# =============================================================================
# Cost model
# =============================================================================

def merge_count(n_sub: int) -> int:
    """Merge bootstraps for n_sub sub-equalities grouped by 15."""
    count = 0
    while n_sub > MAX_MERGE_GROUP:
        n_sub = math.ceil(n_sub / MAX_MERGE_GROUP)
        count += n_sub
    return count + 1


def eq_cost(technique: EqTechnique, bit_width: int) -> int:
    """
    PBS count of one character comparison.

    Args:
        technique: equality strategy
        bit_width: character width in bits (>= 1)
    """
    if bit_width < 1:
        raise ValueError(f"bit_width must be positive, got {bit_width}")
    technique = EqTechnique(technique)
    if technique is EqTechnique.OURS_4BIT:
        return 1 if bit_width <= 4 else 1 + math.ceil((bit_width - 4) / 3)
    chunk = 2 if technique is EqTechnique.STANDARD_2BIT else 4
    n = math.ceil(bit_width / chunk)
    return n + merge_count(n)


def eq_cost_table(max_bits: int) -> List[Dict[str, int]]:
    """Rows bits=1..max_bits with the cost of each technique."""
    return [
        {
            "bits": b,
            "standard": eq_cost(EqTechnique.STANDARD_2BIT, b),
            "ours": eq_cost(EqTechnique.OURS_4BIT, b),
            "combined": eq_cost(EqTechnique.COMBINED, b),
        }
        for b in range(1, max_bits + 1)
    ]

