"""
Alphabet Models

An alphabet maps characters to integer codes and splits each code into
little-endian symbols, one ciphertext per symbol.
"""

from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Dict, List, Union
import string

from pydantic import BaseModel, Field, model_validator

from leuvenshtein.core.errors import AlphabetSpecError
from .ciphertext import SimCiphertext


class AlphabetName(str, Enum):
    """Built-in alphabets."""
    ASCII7 = "ascii7"
    LOWER26 = "lower26"
    DNA4 = "dna4"
    CUSTOM = "custom"


class AlphabetSpec(BaseModel):
    """
    Character set S with its code table and symbol layout.

    `widths` lists the bit width of each symbol, lowest-order symbol first.
    """

    name: AlphabetName = Field(default=AlphabetName.CUSTOM)
    label: str = Field(default="", description="Display name, e.g. the custom file stem")
    widths: List[int] = Field(..., min_length=1, description="Bit width per symbol, low-order first")
    codes: Dict[str, int] = Field(..., description="Character to integer code")

    model_config = {"frozen": True}

    @model_validator(mode="after")
    def _check_layout(self) -> "AlphabetSpec":
        if any(w < 1 or w > 4 for w in self.widths):
            raise ValueError(f"symbol widths must be in 1..4, got {self.widths}")
        limit = 1 << self.bit_width
        for ch, code in self.codes.items():
            if len(ch) != 1:
                raise ValueError(f"alphabet keys must be single characters, got {ch!r}")
            if not 0 <= code < limit:
                raise ValueError(f"code {code} of {ch!r} does not fit {self.bit_width} bits")
        if len(set(self.codes.values())) != len(self.codes):
            raise ValueError("character codes must be unique")
        return self

    @property
    def bit_width(self) -> int:
        return sum(self.widths)

    @property
    def size(self) -> int:
        return len(self.codes)

    @property
    def display_name(self) -> str:
        return self.label or self.name.value

    def characters(self) -> List[str]:
        """Characters ordered by code."""
        return sorted(self.codes, key=self.codes.__getitem__)

    def char_of(self, code: int) -> str:
        for ch, c in self.codes.items():
            if c == code:
                return ch
        raise KeyError(code)

    def subset(self, chars: str) -> "AlphabetSpec":
        """Restrict S to `chars`, keeping codes and layout."""
        missing = [c for c in chars if c not in self.codes]
        if missing:
            raise AlphabetSpecError(f"characters {''.join(missing)!r} are not in {self.display_name}")
        return self.model_copy(update={"codes": {c: self.codes[c] for c in dict.fromkeys(chars)}})

    # ===========================================
    # Built-in alphabets
    # ===========================================

    @classmethod
    def ascii7(cls) -> "AlphabetSpec":
        return cls(name=AlphabetName.ASCII7, widths=[4, 3], codes={chr(i): i for i in range(128)})

    @classmethod
    def lower26(cls) -> "AlphabetSpec":
        return cls(
            name=AlphabetName.LOWER26,
            widths=[4, 3],
            codes={c: ord(c) for c in string.ascii_lowercase},
        )

    @classmethod
    def dna4(cls) -> "AlphabetSpec":
        return cls(name=AlphabetName.DNA4, widths=[2], codes={"A": 0, "C": 1, "G": 2, "T": 3})

    @classmethod
    def builtin(cls, name: str) -> "AlphabetSpec":
        factories = {"ascii7": cls.ascii7, "lower26": cls.lower26, "dna4": cls.dna4}
        if name not in factories:
            raise AlphabetSpecError(f"unknown alphabet {name!r}; expected one of {', '.join(factories)}")
        return factories[name]()

    @classmethod
    def parse(cls, text: str, label: str = "") -> "AlphabetSpec":
        """
        Parse the line-based `key=value` alphabet format.

        Recognised keys:
            name     display name
            widths   comma-separated symbol widths, low-order first
            chars    characters given sequential codes starting at 0
            code.<c> explicit code for character <c>

        Blank lines and lines starting with '#' are ignored.
        """
        widths = None
        codes: Dict[str, int] = {}
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.rstrip("\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            key, sep, value = line.partition("=")
            if not sep:
                raise AlphabetSpecError(f"line {lineno}: expected key=value, got {line!r}")
            key = key.strip()
            try:
                if key == "name":
                    label = value.strip()
                elif key == "widths":
                    widths = [int(w) for w in value.split(",")]
                elif key == "chars":
                    for ch in value:
                        if ch not in codes:
                            codes[ch] = len(codes)
                elif key.startswith("code.") and len(key) == 6:
                    codes[key[5]] = int(value)
                else:
                    raise AlphabetSpecError(f"line {lineno}: unknown key {key!r}")
            except ValueError as e:
                raise AlphabetSpecError(f"line {lineno}: {e}") from e

        if not codes:
            raise AlphabetSpecError("alphabet file declares no characters")
        if widths is None:
            bits = max(max(codes.values()).bit_length(), 1)
            if bits > 4:
                raise AlphabetSpecError("codes wider than 4 bits need an explicit widths= line")
            widths = [bits]
        try:
            return cls(name=AlphabetName.CUSTOM, label=label, widths=widths, codes=codes)
        except ValueError as e:
            raise AlphabetSpecError(str(e)) from e

    @classmethod
    def load(cls, path: Union[str, Path]) -> "AlphabetSpec":
        path = Path(path)
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as e:
            raise AlphabetSpecError(f"cannot read alphabet file {path}: {e}") from e
        return cls.parse(text, label=path.stem)

    @classmethod
    def resolve(cls, selector: str) -> "AlphabetSpec":
        """Resolve a CLI selector: a built-in name or `custom:<file>`."""
        if selector.startswith("custom:"):
            return cls.load(selector[len("custom:"):])
        return cls.builtin(selector)


@dataclass(frozen=True)
class EncodedChar:
    """A character split into per-ciphertext symbols."""
    symbols: List[int]


@dataclass(frozen=True)
class EncryptedString:
    """One list of symbol ciphertexts per character."""

    chars: List[List[SimCiphertext]]
    spec: AlphabetSpec

    @property
    def ciphertext_count(self) -> int:
        return sum(len(c) for c in self.chars)

    def __len__(self) -> int:
        return len(self.chars)

    def __getitem__(self, i: int) -> List[SimCiphertext]:
        return self.chars[i]
