"""Alphabets, symbol layouts and string encryption."""

import pytest

from leuvenshtein.core.errors import AlphabetSpecError, CharNotInAlphabet
from leuvenshtein.models.alphabet import AlphabetName, AlphabetSpec
from leuvenshtein.services.encoding import (
    decode_char,
    decode_chunked,
    decrypt_string,
    encode_char,
    encode_chunked,
    encrypt_chunked,
    encrypt_string,
)


def test_ascii7_symbols(ascii7):
    assert encode_char("A", ascii7).symbols == [1, 4]
    assert encode_char("a", ascii7).symbols == [1, 6]
    assert ascii7.widths == [4, 3]


def test_dna4_symbols(dna4):
    assert encode_char("G", dna4).symbols == [2]
    assert [encode_char(c, dna4).symbols[0] for c in "ACGT"] == [0, 1, 2, 3]


def test_unknown_character(dna4, lower26):
    with pytest.raises(CharNotInAlphabet):
        encode_char("X", dna4)
    with pytest.raises(CharNotInAlphabet):
        encode_char("A", lower26)


def test_round_trip_every_builtin(ascii7, lower26, dna4):
    for spec in (ascii7, lower26, dna4):
        for c in spec.characters():
            assert decode_char(encode_char(c, spec), spec) == c


def test_chunked_layouts():
    chunks = encode_chunked("A", 2)
    assert len(chunks) == 4
    assert decode_chunked(chunks, 2) == 65
    assert encode_chunked("\x00", 3) == [0, 0, 0]
    assert len(encode_chunked("z", 4)) == 2
    with pytest.raises(ValueError):
        encode_chunked("A", 5)


def test_encrypt_string_layout(backend, ascii7):
    xs = encrypt_string("abbey", ascii7, backend)
    assert len(xs) == 5
    assert xs.ciphertext_count == 10
    assert decrypt_string(xs, backend) == "abbey"
    assert len(encrypt_string("", ascii7, backend)) == 0


def test_two_bit_chunking_doubles_ciphertexts(backend, ascii7):
    chunked = encrypt_chunked("abbey", 2, ascii7, backend)
    assert sum(len(c) for c in chunked) == 20


def test_custom_alphabet_file(fixtures_dir, backend):
    spec = AlphabetSpec.resolve(f"custom:{fixtures_dir / 'vowels.alphabet'}")
    assert spec.name is AlphabetName.CUSTOM
    assert spec.display_name == "vowels"
    assert spec.widths == [3]
    assert spec.codes["a"] == 0 and spec.codes["u"] == 4 and spec.codes["-"] == 7
    assert decrypt_string(encrypt_string("ai-u", spec, backend), backend) == "ai-u"


@pytest.mark.parametrize(
    "text",
    [
        "",
        "widths=4\n",
        "chars=ab\nbogus\n",
        "chars=ab\ncolour=red\n",
        "widths=1\nchars=abc\n",
        "widths=5\nchars=ab\n",
    ],
)
def test_bad_alphabet_files(text):
    with pytest.raises(AlphabetSpecError):
        AlphabetSpec.parse(text)


def test_unknown_builtin():
    with pytest.raises(AlphabetSpecError):
        AlphabetSpec.resolve("klingon")


def test_subset_keeps_codes(lower26):
    sub = lower26.subset("zab")
    assert sub.size == 3
    assert sub.characters() == ["a", "b", "z"]
    assert sub.codes["z"] == ord("z")
    with pytest.raises(AlphabetSpecError):
        lower26.subset("A")
