"""
Distance Pipeline

End-to-end runs used by the CLI: encrypt, compute, decrypt and account
for every bootstrap in a RunReport.
"""

import logging
import time
from typing import Optional, Union

from leuvenshtein.models.alphabet import AlphabetSpec, EncryptedString
from leuvenshtein.models.kernel import BandSpec, KeyEncoding
from leuvenshtein.models.noise import NoiseParams
from leuvenshtein.models.report import RunReport
from leuvenshtein.services.backend import FheBackend, SimBackend
from leuvenshtein.services.encoding import code_of, encrypt_string
from leuvenshtein.services.equality import char_equality
from leuvenshtein.services.kernel import DistanceResult, Eq9Provider, distance
from leuvenshtein.services.preprocess import build_eq_table, distance_preprocessed

logger = logging.getLogger(__name__)


def online_eq9_provider(backend: FheBackend, xs: EncryptedString, ys: EncryptedString) -> Eq9Provider:
    """eq9 for cell (i, j) computed on demand from both encrypted strings."""
    def provide(i: int, j: int):
        return char_equality(backend, xs[i - 1], ys[j - 1], xs.spec, scale=9, tag="equality")
    return provide


def encrypted_distance(
    a: str,
    b: str,
    spec: AlphabetSpec,
    band: Optional[BandSpec] = None,
    params: Optional[NoiseParams] = None,
    *,
    backend: FheBackend,
    encoding: KeyEncoding = KeyEncoding.NEGATED,
    threads: int = 1,
    trivial_boundaries: bool = False,
) -> DistanceResult:
    """Both strings encrypted; equality computed inside the main loop."""
    xs = encrypt_string(a, spec, backend)
    ys = encrypt_string(b, spec, backend)
    return distance(
        online_eq9_provider(backend, xs, ys),
        len(a),
        len(b),
        band,
        params,
        backend=backend,
        encoding=encoding,
        threads=threads,
        trivial_boundaries=trivial_boundaries,
    )


def run_pair(
    a: str,
    b: str,
    spec: AlphabetSpec,
    band: Optional[BandSpec] = None,
    params: Optional[NoiseParams] = None,
    *,
    encoding: Union[KeyEncoding, str] = KeyEncoding.NEGATED,
    preprocess: bool = False,
    subset: Optional[str] = None,
    threads: int = 1,
    trivial_boundaries: bool = False,
    timing: bool = False,
    backend: Optional[SimBackend] = None,
) -> RunReport:
    """
    Compute one distance on its own backend and report its bootstraps.

    With preprocess, `a` is encrypted and `b` stays plaintext; the table
    covers `subset` (default: the whole alphabet).

    Raises:
        CharNotInAlphabet: a character outside the alphabet
        BandTooNarrow: the band cannot reach (m, n)
    """
    band = band or BandSpec.exact()
    encoding = KeyEncoding(encoding)
    backend = backend or SimBackend(params)
    for c in a + b:
        code_of(c, spec)

    before = backend.stats.snapshot()
    started = time.perf_counter()
    if preprocess:
        xs = encrypt_string(a, spec, backend)
        table = build_eq_table(xs, subset, backend, threads)
        result = distance_preprocessed(
            table, b, band, params,
            backend=backend, encoding=encoding, threads=threads, trivial_boundaries=trivial_boundaries,
        )
    else:
        result = encrypted_distance(
            a, b, spec, band, params,
            backend=backend, encoding=encoding, threads=threads, trivial_boundaries=trivial_boundaries,
        )
    elapsed = time.perf_counter() - started
    spent = backend.stats.since(before)

    report = RunReport(
        distance=backend.decrypt_signed(result.ciphertext),
        mode=band.label,
        half_width=result.half_width,
        m=len(a),
        n=len(b),
        visited_cells=result.visited_cells,
        pbs_total=spent.pbs_count,
        pbs_equality=spent.pbs("equality"),
        pbs_kernel=spent.pbs("kernel"),
        refresh_count=spent.pbs("refresh"),
        max_key_variance=result.max_key_variance,
        preprocessing_pbs=spent.pbs("preprocess"),
        key_encoding=encoding.value,
        alphabet=spec.display_name,
        wall_time=round(elapsed, 6) if timing else None,
    )
    logger.info(f"{a!r} vs {b!r}: distance {report.distance}, {report.pbs_total} PBS")
    return report
