"""Character equality circuits and their PBS cost model."""

import itertools

import pytest

from leuvenshtein.models.alphabet import AlphabetSpec
from leuvenshtein.services.encoding import encode_char, encrypt_chunked
from leuvenshtein.services.equality import (
    EqTechnique,
    char_equality,
    circuit_pbs,
    eq4,
    eq_ascii,
    eq_chunked_merge,
    eq_cost,
    eq_cost_table,
    eq_lut,
    fold_compatible,
    merge_count,
    merge_lut,
)


def _enc(backend, spec, c):
    return [backend.encrypt(s) for s in encode_char(c, spec).symbols]


@pytest.mark.parametrize("scale", [1, 9])
def test_eq_lut_over_all_differences(scale):
    lut = eq_lut(scale)
    for x, y in itertools.product(range(16), repeat=2):
        assert lut.eval((x - y) % 32) == (scale if x == y else 0)


def test_eq_lut_rejects_other_scales():
    with pytest.raises(ValueError):
        eq_lut(3)


def test_merge_lut_shape():
    assert merge_lut(4).entries[4] == 1
    assert sum(merge_lut(4, 9).entries) == 9
    with pytest.raises(ValueError):
        merge_lut(16)


def test_eq4_all_pairs_one_pbs_each(backend):
    for x, y in itertools.product(range(16), repeat=2):
        before = backend.stats.pbs_count
        out = eq4(backend, backend.encrypt(x), backend.encrypt(y), scale=9)
        assert backend.stats.pbs_count - before == 1
        assert backend.decrypt(out) == (9 if x == y else 0)


def test_eq4_examples(backend):
    assert backend.decrypt(eq4(backend, backend.encrypt(13), backend.encrypt(13))) == 1
    assert backend.decrypt(eq4(backend, backend.encrypt(0), backend.encrypt(15), scale=9)) == 0


def test_eq_ascii_exhaustive_two_pbs(backend, ascii7):
    chars = ascii7.characters()
    encrypted = {c: _enc(backend, ascii7, c) for c in chars}
    start = backend.stats.pbs_count
    for a, b in itertools.product(chars, repeat=2):
        out = eq_ascii(backend, encrypted[a], encrypted[b], scale=1)
        assert backend.decrypt(out) == (1 if a == b else 0)
    assert backend.stats.pbs_count - start == 2 * len(chars) ** 2
    assert backend.stats.pbs("equality") == 2 * len(chars) ** 2


def test_eq_ascii_examples(backend, ascii7):
    big_a = _enc(backend, ascii7, "A")
    before = backend.stats.pbs_count
    assert backend.decrypt(eq_ascii(backend, big_a, big_a, scale=9)) == 9
    assert backend.stats.pbs_count - before == 2
    assert backend.decrypt(eq_ascii(backend, big_a, _enc(backend, ascii7, "B"))) == 0
    assert backend.decrypt(eq_ascii(backend, big_a, _enc(backend, ascii7, "a"))) == 0


def test_eq_ascii_requires_two_symbols(backend):
    x = backend.encrypt(1)
    with pytest.raises(ValueError):
        eq_ascii(backend, [x], [x])


def test_chunked_merge_two_bit_costs_five(backend, ascii7):
    xs = encrypt_chunked("Ab", 2, ascii7, backend)
    before = backend.stats.pbs_count
    assert backend.decrypt(eq_chunked_merge(backend, xs[0], xs[0], scale=9)) == 9
    assert backend.stats.pbs_count - before == 5
    assert backend.decrypt(eq_chunked_merge(backend, xs[0], xs[1])) == 0


def test_chunked_merge_four_bit_costs_three(backend, ascii7):
    xs = encrypt_chunked("Ab", 4, ascii7, backend)
    before = backend.stats.pbs_count
    assert backend.decrypt(eq_chunked_merge(backend, xs[0], xs[0], chunk_bits=4)) == 1
    assert backend.stats.pbs_count - before == 3
    assert backend.decrypt(eq_chunked_merge(backend, xs[0], xs[1], chunk_bits=4)) == 0


def test_chunked_merge_any_single_chunk_difference(backend):
    base = [1, 2, 3, 0]
    xs = [backend.encrypt(v) for v in base]
    for pos in range(4):
        for other in range(4):
            if other == base[pos]:
                continue
            ys = [backend.encrypt(other if k == pos else v) for k, v in enumerate(base)]
            assert backend.decrypt(eq_chunked_merge(backend, xs, ys)) == 0


def test_chunked_merge_regroups_beyond_fifteen(backend):
    xs = [backend.encrypt(k % 4) for k in range(16)]
    ys = [backend.encrypt(k % 4) for k in range(16)]
    before = backend.stats.pbs_count
    assert backend.decrypt(eq_chunked_merge(backend, xs, ys, scale=9)) == 9
    assert backend.stats.pbs_count - before == 16 + merge_count(16)
    ys[15] = backend.encrypt(0)
    assert backend.decrypt(eq_chunked_merge(backend, xs, ys)) == 0


def test_fold_compatibility():
    assert fold_compatible([4, 3])
    assert fold_compatible([2])
    assert fold_compatible([4, 3, 3])
    assert not fold_compatible([4, 4])


def test_char_equality_dispatch(backend, dna4):
    wide = AlphabetSpec(widths=[4, 4], codes={chr(65 + k): k * 17 for k in range(15)})
    for spec, pbs in ((dna4, 1), (AlphabetSpec.ascii7(), 2), (wide, 3)):
        assert circuit_pbs(spec) == pbs
        chars = spec.characters()[:6]
        for a, b in itertools.product(chars, repeat=2):
            before = backend.stats.pbs_count
            out = char_equality(backend, _enc(backend, spec, a), _enc(backend, spec, b), spec, scale=9)
            assert backend.stats.pbs_count - before == pbs
            assert backend.decrypt(out) == (9 if a == b else 0)


def test_eq_cost_quoted_points():
    assert eq_cost(EqTechnique.OURS_4BIT, 7) == 2
    assert eq_cost(EqTechnique.STANDARD_2BIT, 7) == 5
    assert eq_cost(EqTechnique.COMBINED, 7) == 3
    assert eq_cost("ours_4bit", 4) == 1
    with pytest.raises(ValueError):
        eq_cost(EqTechnique.OURS_4BIT, 0)


def test_ours_is_cheapest_up_to_sixteen_bits():
    for b in range(5, 17):
        ours = eq_cost(EqTechnique.OURS_4BIT, b)
        assert ours <= eq_cost(EqTechnique.STANDARD_2BIT, b)
        assert ours <= eq_cost(EqTechnique.COMBINED, b)


def test_eq_cost_table_rows():
    rows = eq_cost_table(16)
    assert len(rows) == 16
    assert rows[6] == {"bits": 7, "standard": 5, "ours": 2, "combined": 3}
    assert rows[1]["ours"] <= rows[1]["standard"]


def test_merge_count_grouping():
    assert merge_count(1) == 1
    assert merge_count(15) == 1
    assert merge_count(16) == 3
