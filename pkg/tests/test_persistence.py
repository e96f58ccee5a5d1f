"""Equality table storage."""

import numpy as np
import pytest

from leuvenshtein.core.errors import TableFormatError
from leuvenshtein.services.backend import SimBackend
from leuvenshtein.services.encoding import encrypt_string
from leuvenshtein.services.persistence import FORMAT_VERSION, load_eq_table, save_eq_table
from leuvenshtein.services.preprocess import build_eq_table, distance_preprocessed, lookup


@pytest.fixture
def saved_table(tmp_path, lower26):
    backend = SimBackend()
    table = build_eq_table(encrypt_string("abbey", lower26, backend), "abeyz", backend)
    path = save_eq_table(table, tmp_path / "abbey.npz")
    return table, path


def test_load_restores_values_and_alphabet(saved_table):
    table, path = saved_table
    other = SimBackend()
    loaded = load_eq_table(path, other)
    assert loaded.m == table.m
    assert loaded.spec == table.spec
    assert loaded.characters == table.characters
    for c in table.characters:
        assert [x.value for x in loaded.rows[c]] == [x.value for x in table.rows[c]]
        assert [x.variance for x in loaded.rows[c]] == [x.variance for x in table.rows[c]]


def test_loaded_ids_do_not_collide(saved_table):
    _, path = saved_table
    other = SimBackend()
    loaded = load_eq_table(path, other)
    used = {source for row in loaded.rows.values() for x in row for source in x.ledger}
    fresh = other.encrypt(1)
    assert not used & set(fresh.ledger)


def test_loaded_table_computes_distance(saved_table):
    _, path = saved_table
    other = SimBackend()
    loaded = load_eq_table(path, other)
    assert other.decrypt(lookup(loaded, "b", 3)) == 9
    result = distance_preprocessed(loaded, "zabye", backend=other)
    assert other.decrypt(result.ciphertext) == 3
    assert other.stats.pbs("preprocess") == 0


def test_container_layout(saved_table):
    table, path = saved_table
    with np.load(path) as data:
        assert int(data["format_version"]) == FORMAT_VERSION
        assert data["values"].shape == (5, 5)
        assert len(data["ledger_offsets"]) == 26


def test_unknown_version(saved_table, tmp_path):
    _, path = saved_table
    with np.load(path) as data:
        arrays = {k: data[k] for k in data.files}
    arrays["format_version"] = np.int64(99)
    bad = tmp_path / "bad.npz"
    np.savez(bad, **arrays)
    with pytest.raises(TableFormatError):
        load_eq_table(bad, SimBackend())


def test_missing_file(tmp_path):
    with pytest.raises(TableFormatError):
        load_eq_table(tmp_path / "nope.npz", SimBackend())


def test_not_a_table(tmp_path):
    path = tmp_path / "junk.npz"
    np.savez(path, values=np.zeros(3))
    with pytest.raises(TableFormatError):
        load_eq_table(path, SimBackend())


def test_corrupt_archive(tmp_path):
    path = tmp_path / "corrupt.npz"
    path.write_bytes(b"PK\x03\x04garbage" * 4)
    with pytest.raises(TableFormatError):
        load_eq_table(path, SimBackend())
