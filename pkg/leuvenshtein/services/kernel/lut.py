"""
Packed Minimum Table

The kernel key takes 18 values, two more than a 16-entry bootstrap table
can program. Keys 16 and 17 land on the negacyclic half and read back as
the negation of entries 0 and 1, so the packing works exactly when the
function is 0 on keys 0, 1, 16 and 17.
"""

from typing import Callable, Dict, Optional, Tuple

from leuvenshtein.core.errors import PackingViolation
from leuvenshtein.models.kernel import KeyEncoding
from leuvenshtein.models.lut import Lut16, PlaintextSpace

KEY_COUNT = 18


def m_value(dv: int, dh: int, eq: int) -> int:
    """Shared cell quantity 1 + min(-eq, dv, dh), always 0 or 1."""
    return 1 + min(-eq, dv, dh)


def pack_lut(values: Dict[int, int]) -> Lut16:
    """
    Fit a function on keys [0, 18) into a negacyclic 16-entry table.

    Args:
        values: key -> output for every reachable key

    Raises:
        PackingViolation: a key beyond 15 would not read back its value
    """
    entries = [values.get(x, 0) % PlaintextSpace.MODULUS for x in range(PlaintextSpace.HALF)]
    lut = Lut16.of(entries)
    for key, wanted in values.items():
        if key >= PlaintextSpace.HALF and lut.eval(key) != wanted % PlaintextSpace.MODULUS:
            raise PackingViolation(
                f"key {key} reads {lut.eval(key)} through the negacyclic half, needs {wanted}"
            )
    return lut


def key_table(
    encoding: KeyEncoding,
    f: Callable[[int, int, int], int] = m_value,
) -> Dict[int, int]:
    """f evaluated at the decoded (dv, dh, eq) of every reachable key."""
    out = {}
    for key in range(KEY_COUNT):
        decoded: Optional[Tuple[int, int, int]] = encoding.decode(key)
        out[key] = f(*decoded)
    return out


def build_min_lut(encoding: KeyEncoding = KeyEncoding.NEGATED) -> Lut16:
    """
    Table realizing M = 1 + min(-eq, dv, dh) under `encoding`.

    Raises:
        PackingViolation: never for the two shipped layouts
    """
    return pack_lut(key_table(KeyEncoding(encoding)))
