"""Preprocessed equality tables."""

import pytest

from leuvenshtein.core.errors import CharNotInSubset, PositionOutOfRange
from leuvenshtein.models.kernel import BandSpec
from leuvenshtein.services.backend import SimBackend
from leuvenshtein.services.encoding import encrypt_string
from leuvenshtein.services.oracle import wf_distance
from leuvenshtein.services.pipeline import encrypted_distance, run_pair
from leuvenshtein.services.preprocess import build_eq_table, distance_preprocessed, lookup, query_many


@pytest.fixture
def abbey_table(backend, lower26):
    xs = encrypt_string("abbey", lower26, backend)
    return build_eq_table(xs, None, backend)


def test_abbey_table_marks(backend, abbey_table):
    assert abbey_table.size == 26 and abbey_table.m == 5
    marks = {
        (c, i)
        for c in abbey_table.characters
        for i in range(1, 6)
        if backend.decrypt(lookup(abbey_table, c, i)) == 9
    }
    assert marks == {("a", 1), ("b", 2), ("b", 3), ("e", 4), ("y", 5)}
    assert backend.stats.pbs("preprocess") == 2 * 26 * 5


def test_lookup_is_free(backend, abbey_table):
    before = backend.stats.pbs_count
    assert backend.decrypt(lookup(abbey_table, "b", 2)) == 9
    for i in range(1, 6):
        assert backend.decrypt(lookup(abbey_table, "c", i)) == 0
    assert backend.stats.pbs_count == before


def test_lookup_errors(abbey_table):
    with pytest.raises(CharNotInSubset):
        lookup(abbey_table, "A", 1)
    with pytest.raises(PositionOutOfRange):
        lookup(abbey_table, "a", 0)
    with pytest.raises(PositionOutOfRange):
        lookup(abbey_table, "a", 6)


def test_each_column_has_one_mark(backend, abbey_table):
    for i in range(1, 6):
        column = [backend.decrypt(lookup(abbey_table, c, i)) for c in abbey_table.characters]
        assert sorted(column)[-2:] == [0, 9]


def test_dna4_table_costs_one_pbs_per_entry(rng, dna4):
    backend = SimBackend()
    s = "".join(rng.choice("ACGT") for _ in range(210))
    table = build_eq_table(encrypt_string(s, dna4, backend), None, backend)
    assert table.size == 4 and table.m == 210
    assert backend.stats.pbs("preprocess") == 840


def test_empty_string_table(backend, lower26):
    table = build_eq_table(encrypt_string("", lower26, backend), None, backend)
    assert table.m == 0
    assert all(row == [] for row in table.rows.values())
    assert backend.stats.pbs_count == 0


def test_subset_table(backend, lower26):
    table = build_eq_table(encrypt_string("abbey", lower26, backend), "abey", backend)
    assert table.size == 4
    assert backend.stats.pbs("preprocess") == 2 * 4 * 5
    result = distance_preprocessed(table, "yabe", backend=backend)
    assert backend.decrypt(result.ciphertext) == wf_distance("abbey", "yabe")[0]
    with pytest.raises(CharNotInSubset):
        distance_preprocessed(table, "abc", backend=backend)


def test_threaded_build_matches(backend, lower26):
    xs = encrypt_string("abbey", lower26, backend)
    seq = build_eq_table(xs, "abcy", backend)
    par = build_eq_table(xs, "abcy", backend, threads=4)
    for c in "abcy":
        assert [backend.decrypt(x) for x in seq.rows[c]] == [backend.decrypt(x) for x in par.rows[c]]


def test_same_string_is_zero(backend, abbey_table):
    result = distance_preprocessed(abbey_table, "abbey", backend=backend)
    assert backend.decrypt(result.ciphertext) == 0


def test_matches_online_equality(rng, lower26):
    for _ in range(20):
        a = "".join(rng.choice("abcde") for _ in range(rng.randint(1, 10)))
        b = "".join(rng.choice("abcde") for _ in range(rng.randint(1, 10)))
        backend = SimBackend()
        table = build_eq_table(encrypt_string(a, lower26, backend), "abcde", backend)
        pre = distance_preprocessed(table, b, BandSpec.exact(), backend=backend)
        online = encrypted_distance(a, b, lower26, backend=backend)
        assert backend.decrypt(pre.ciphertext) == backend.decrypt(online.ciphertext) == wf_distance(a, b)[0]


def test_main_phase_is_a_third(rng, lower26):
    a = "".join(rng.choice("abcdefghijklmnopqrstuvwxyz") for _ in range(64))
    b = "".join(rng.choice("abcdefghijklmnopqrstuvwxyz") for _ in range(64))
    online = run_pair(a, b, lower26)
    pre = run_pair(a, b, lower26, preprocess=True)
    assert online.distance == pre.distance == wf_distance(a, b)[0]
    main_phase = pre.pbs_total - pre.preprocessing_pbs
    assert main_phase * 3 == online.pbs_total
    assert pre.preprocessing_pbs == 2 * 26 * 64
    assert pre.pbs_total < online.pbs_total


def test_break_even_needs_alphabet_smaller_than_n(lower26):
    a = "abcdefghijklmnop"
    b = "ponmlkjihgfedcba"
    online = run_pair(a, b, lower26)
    pre = run_pair(a, b, lower26, preprocess=True)
    # |S| = 26 > n = 16
    assert pre.pbs_total > online.pbs_total
    small = run_pair(a, b, lower26, preprocess=True, subset="abcdefghijklmnop")
    # |S| = 16 = n: equal cost
    assert small.pbs_total == online.pbs_total


def test_query_many_builds_once(backend, abbey_table):
    built = backend.stats.pbs("preprocess")
    results = query_many(abbey_table, ["abbey", "abbe", "ebbay"], backend=backend)
    assert [backend.decrypt(r.ciphertext) for r in results] == [0, 1, 2]
    assert backend.stats.pbs("preprocess") == built
    assert backend.stats.pbs("kernel") == sum(r.visited_cells for r in results)
