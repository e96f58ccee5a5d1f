"""Data models for the Leuvenshtein library."""
from .alphabet import AlphabetName, AlphabetSpec, EncodedChar, EncryptedString
from .ciphertext import NoiseLedger, SimCiphertext, combine_ledgers, ledger_variance
from .kernel import BandMode, BandSpec, KeyEncoding
from .lut import Lut16, PlaintextSpace, negacyclic_eval
from .noise import NoiseParams
from .report import BatchItem, RunReport

__all__ = [
    "AlphabetName",
    "AlphabetSpec",
    "EncodedChar",
    "EncryptedString",
    "NoiseLedger",
    "SimCiphertext",
    "combine_ledgers",
    "ledger_variance",
    "BandMode",
    "BandSpec",
    "KeyEncoding",
    "Lut16",
    "PlaintextSpace",
    "negacyclic_eval",
    "NoiseParams",
    "BatchItem",
    "RunReport",
]
