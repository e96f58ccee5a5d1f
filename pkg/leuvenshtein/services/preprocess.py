"""
Preprocessed Equality Table

When one string is known in the clear, the encrypted eq9 of every
encrypted character against every character of a subset S can be built
up front. The main loop then reads equalities with plain lookups and pays
one bootstrap per cell.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Union

from leuvenshtein.core.errors import CharNotInSubset, PositionOutOfRange
from leuvenshtein.models.alphabet import AlphabetSpec, EncryptedString
from leuvenshtein.models.ciphertext import SimCiphertext
from leuvenshtein.models.kernel import BandSpec, KeyEncoding
from leuvenshtein.models.noise import NoiseParams
from leuvenshtein.services.backend import FheBackend
from leuvenshtein.services.encoding import encode_char
from leuvenshtein.services.equality import char_equality
from leuvenshtein.services.kernel import DistanceResult, distance

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EqTable:
    """
    |S| rows by m columns of eq9 ciphertexts.

    rows[c][i - 1] encrypts 9 when the i-th encrypted character equals c.
    """

    spec: AlphabetSpec
    rows: Dict[str, List[SimCiphertext]]
    m: int

    @property
    def characters(self) -> List[str]:
        return list(self.rows)

    @property
    def size(self) -> int:
        return len(self.rows)


def build_eq_table(
    xs: EncryptedString,
    subset: Optional[Union[str, AlphabetSpec]],
    backend: FheBackend,
    threads: int = 1,
) -> EqTable:
    """
    Compare every encrypted character against every character of `subset`.

    The plaintext side enters as trivial ciphertexts, so each entry costs
    exactly the circuit's bootstraps: 2 for ascii7 and lower26, 1 for a
    single symbol of at most 4 bits.

    Args:
        xs: encrypted string
        subset: characters the plaintext queries may use; None means the
            whole alphabet
        backend: ciphertext backend
        threads: worker threads over (character, position) pairs
    """
    if subset is None:
        spec = xs.spec
    elif isinstance(subset, AlphabetSpec):
        spec = subset
    else:
        spec = xs.spec.subset(subset)
    chars = spec.characters()
    m = len(xs)

    def entry(job):
        c, i = job
        ys = [backend.trivial(s) for s in encode_char(c, xs.spec).symbols]
        return char_equality(backend, xs[i], ys, xs.spec, scale=9, tag="preprocess")

    jobs = [(c, i) for c in chars for i in range(m)]
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            flat = list(pool.map(entry, jobs))
    else:
        flat = [entry(job) for job in jobs]

    rows = {c: flat[k * m:(k + 1) * m] for k, c in enumerate(chars)}
    logger.info(f"Built equality table {len(chars)}x{m} over {spec.display_name}")
    return EqTable(spec, rows, m)


def lookup(table: EqTable, plain_char: str, i: int) -> SimCiphertext:
    """
    Stored eq9 of the i-th encrypted character (1-based) against plain_char.

    Raises:
        CharNotInSubset: no row for plain_char
        PositionOutOfRange: i outside 1..m
    """
    row = table.rows.get(plain_char)
    if row is None:
        raise CharNotInSubset(plain_char)
    if not 1 <= i <= table.m:
        raise PositionOutOfRange(f"position {i} outside 1..{table.m}")
    return row[i - 1]


def distance_preprocessed(
    table: EqTable,
    plain: str,
    band: Optional[BandSpec] = None,
    params: Optional[NoiseParams] = None,
    *,
    backend: FheBackend,
    encoding: KeyEncoding = KeyEncoding.NEGATED,
    threads: int = 1,
    trivial_boundaries: bool = False,
) -> DistanceResult:
    """Encrypted distance against a plaintext string using table lookups for equality."""
    missing = sorted({c for c in plain if c not in table.rows})
    if missing:
        raise CharNotInSubset(f"{''.join(missing)!r} not in the table's character subset")
    return distance(
        lambda i, j: lookup(table, plain[j - 1], i),
        table.m,
        len(plain),
        band,
        params,
        backend=backend,
        encoding=encoding,
        threads=threads,
        trivial_boundaries=trivial_boundaries,
    )


def query_many(
    table: EqTable,
    queries: Iterable[str],
    band: Optional[BandSpec] = None,
    params: Optional[NoiseParams] = None,
    **kwargs,
) -> List[DistanceResult]:
    """Run several plaintext queries against one prebuilt table."""
    return [distance_preprocessed(table, q, band, params, **kwargs) for q in queries]
