"""
Character Encoding Service

Splits characters into symbols according to an alphabet layout and
encrypts strings symbol by symbol.
"""

import logging
import math
from typing import List, Optional

from leuvenshtein.core.errors import CharNotInAlphabet
from leuvenshtein.models.alphabet import AlphabetSpec, EncodedChar, EncryptedString
from leuvenshtein.models.ciphertext import SimCiphertext
from leuvenshtein.services.backend import FheBackend

logger = logging.getLogger(__name__)

CHUNK_SIZES = (2, 3, 4)


def code_of(c: str, spec: AlphabetSpec) -> int:
    try:
        return spec.codes[c]
    except KeyError:
        raise CharNotInAlphabet(f"{c!r} is not in alphabet {spec.display_name}") from None


def split_code(code: int, widths: List[int]) -> List[int]:
    """Little-endian split of `code` into symbols of the given widths."""
    symbols = []
    for w in widths:
        symbols.append(code & ((1 << w) - 1))
        code >>= w
    return symbols


def join_symbols(symbols: List[int], widths: List[int]) -> int:
    code, shift = 0, 0
    for s, w in zip(symbols, widths):
        code |= s << shift
        shift += w
    return code


def encode_char(c: str, spec: AlphabetSpec) -> EncodedChar:
    """
    Encode one character per the alphabet layout.

    For ascii7 this gives [code mod 16, code div 16].
    """
    return EncodedChar(split_code(code_of(c, spec), spec.widths))


def decode_char(encoded: EncodedChar, spec: AlphabetSpec) -> str:
    code = join_symbols(encoded.symbols, spec.widths)
    try:
        return spec.char_of(code)
    except KeyError:
        raise CharNotInAlphabet(f"code {code} is not in alphabet {spec.display_name}") from None


def encode_chunked(c: str, chunk_bits: int, spec: Optional[AlphabetSpec] = None) -> List[int]:
    """
    Split a character into ceil(bit_width / chunk_bits) equal chunks.

    This is the uniform-chunk layout used by chunk-and-merge equality.
    """
    if chunk_bits not in CHUNK_SIZES:
        raise ValueError(f"chunk_bits must be one of {CHUNK_SIZES}, got {chunk_bits}")
    spec = spec or AlphabetSpec.ascii7()
    count = math.ceil(spec.bit_width / chunk_bits)
    return split_code(code_of(c, spec), [chunk_bits] * count)


def decode_chunked(chunks: List[int], chunk_bits: int) -> int:
    return join_symbols(chunks, [chunk_bits] * len(chunks))


def encrypt_string(s: str, spec: AlphabetSpec, backend: FheBackend) -> EncryptedString:
    """Encrypt every symbol of every character individually."""
    chars = []
    for c in s:
        chars.append([backend.encrypt(sym) for sym in encode_char(c, spec).symbols])
    logger.debug(f"Encrypted {len(s)} characters as {sum(len(x) for x in chars)} ciphertexts")
    return EncryptedString(chars, spec)


def encrypt_chunked(s: str, chunk_bits: int, spec: AlphabetSpec, backend: FheBackend) -> List[List[SimCiphertext]]:
    """Encrypt a string in the uniform-chunk layout."""
    return [[backend.encrypt(x) for x in encode_chunked(c, chunk_bits, spec)] for c in s]


def decrypt_string(xs: EncryptedString, backend: FheBackend) -> str:
    return "".join(
        decode_char(EncodedChar([backend.decrypt(ct) for ct in symbols]), xs.spec)
        for symbols in xs.chars
    )
