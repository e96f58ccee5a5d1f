"""
Equality Table Storage

Saves and loads preprocessed equality tables of the simulated backend as a
numpy .npz container.

Format version 1 holds:
    format_version  int scalar
    m               int scalar, encrypted string length
    alphabet        JSON string of the AlphabetSpec the rows cover
    values          uint8 array |S| x m, plaintext residues, rows in code order
    ledger_offsets  int64 array of |S|*m + 1 offsets into the two arrays below
    ledger_ids      int64 noise source ids
    ledger_coeffs   int64 signed coefficients
"""

import logging
import zipfile
from pathlib import Path
from typing import Dict, Union

import numpy as np

from leuvenshtein.core.errors import TableFormatError
from leuvenshtein.models.alphabet import AlphabetSpec
from leuvenshtein.models.ciphertext import SimCiphertext
from leuvenshtein.services.backend import SimBackend
from leuvenshtein.services.preprocess import EqTable

logger = logging.getLogger(__name__)

FORMAT_VERSION = 1
REQUIRED_KEYS = ("format_version", "m", "alphabet", "values", "ledger_offsets", "ledger_ids", "ledger_coeffs")


def save_eq_table(table: EqTable, path: Union[str, Path]) -> Path:
    """Write `table` to `path` and return the path actually written."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)

    chars = table.spec.characters()
    values = np.zeros((len(chars), table.m), dtype=np.uint8)
    offsets = [0]
    ids = []
    coeffs = []
    for r, c in enumerate(chars):
        for i, ct in enumerate(table.rows[c]):
            values[r, i] = ct.value
            for source, coeff in ct.ledger.items():
                ids.append(source)
                coeffs.append(coeff)
            offsets.append(len(ids))

    with path.open("wb") as fh:
        np.savez(
            fh,
            format_version=np.int64(FORMAT_VERSION),
            m=np.int64(table.m),
            alphabet=np.array(table.spec.model_dump_json()),
            values=values,
            ledger_offsets=np.asarray(offsets, dtype=np.int64),
            ledger_ids=np.asarray(ids, dtype=np.int64),
            ledger_coeffs=np.asarray(coeffs, dtype=np.int64),
        )
    logger.info(f"Saved equality table {len(chars)}x{table.m} to {path}")
    return path


def load_eq_table(path: Union[str, Path], backend: SimBackend) -> EqTable:
    """
    Read a table written by save_eq_table.

    Noise source ids are re-minted in `backend`, so loaded ciphertexts never
    share a source with its fresh encryptions while sources shared inside
    the table stay shared.

    Raises:
        TableFormatError: missing or corrupt file, unknown version or inconsistent arrays
    """
    path = Path(path)
    try:
        with np.load(path, allow_pickle=False) as data:
            missing = [k for k in REQUIRED_KEYS if k not in data.files]
            if missing:
                raise TableFormatError(f"{path}: missing arrays {', '.join(missing)}")
            version = int(data["format_version"])
            if version != FORMAT_VERSION:
                raise TableFormatError(f"{path}: unsupported format version {version}")
            m = int(data["m"])
            spec = AlphabetSpec.model_validate_json(str(data["alphabet"]))
            values = data["values"]
            offsets = data["ledger_offsets"]
            ids = data["ledger_ids"]
            coeffs = data["ledger_coeffs"]
    except (OSError, ValueError, KeyError, zipfile.BadZipFile) as e:
        if isinstance(e, TableFormatError):
            raise
        raise TableFormatError(f"cannot read equality table {path}: {e}") from e

    chars = spec.characters()
    if values.shape != (len(chars), m) or len(offsets) != len(chars) * m + 1:
        raise TableFormatError(f"{path}: array shapes do not match {len(chars)}x{m}")

    mapping: Dict[int, int] = {}
    rows = {}
    for r, c in enumerate(chars):
        row = []
        for i in range(m):
            k = r * m + i
            lo, hi = int(offsets[k]), int(offsets[k + 1])
            ledger = {int(s): int(v) for s, v in zip(ids[lo:hi], coeffs[lo:hi])}
            row.append(SimCiphertext(int(values[r, i]), backend.remap_ledger(ledger, mapping)))
        rows[c] = row
    logger.info(f"Loaded equality table {len(chars)}x{m} from {path}")
    return EqTable(spec, rows, m)
