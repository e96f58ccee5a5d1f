"""
Backend Interface

The operations the encrypted edit-distance pipeline needs from an FHE
scheme. The simulated backend is the shipped implementation; a real TFHE
adapter would subclass FheBackend and keep the same call surface.
"""

from abc import ABC, abstractmethod
from typing import Generic, Optional, TypeVar

from leuvenshtein.models.lut import Lut16
from leuvenshtein.models.noise import NoiseParams
from .stats import BackendStats

Ct = TypeVar("Ct")


class FheBackend(ABC, Generic[Ct]):
    """Abstract ciphertext backend over a 5-bit plaintext space."""

    params: NoiseParams
    stats: BackendStats

    @abstractmethod
    def encrypt(self, v: int) -> Ct:
        """Fresh encryption of v in [0, 32)."""

    @abstractmethod
    def trivial(self, v: int) -> Ct:
        """Noiseless encryption of the public constant v."""

    @abstractmethod
    def decrypt(self, x: Ct) -> int:
        ...

    @abstractmethod
    def decrypt_signed(self, x: Ct) -> int:
        """Decrypt and map the upper half of the plaintext space to negatives."""

    @abstractmethod
    def add(self, x: Ct, y: Ct) -> Ct:
        ...

    @abstractmethod
    def sub(self, x: Ct, y: Ct) -> Ct:
        ...

    @abstractmethod
    def scalar_mul(self, x: Ct, k: int) -> Ct:
        ...

    @abstractmethod
    def scalar_add(self, x: Ct, k: int) -> Ct:
        ...

    @abstractmethod
    def pbs(self, x: Ct, lut: Lut16, params: Optional[NoiseParams] = None, tag: str = "kernel") -> Ct:
        """Programmable bootstrap: apply `lut` negacyclically and reset noise."""

    @abstractmethod
    def refresh(self, x: Ct, params: Optional[NoiseParams] = None) -> Ct:
        """Identity bootstrap on a value in [0, 16)."""

    @abstractmethod
    def lift(self, x: Ct, modulus: int) -> Ct:
        """Move a signed 5-bit value into a wider accumulator space."""

    @abstractmethod
    def variance(self, x: Ct) -> float:
        """Noise variance of x in fresh-bootstrap units."""

    def linear(self, *terms, constant: int = 0) -> Ct:
        """
        Evaluate sum(k * x for x, k in terms) + constant.

        Args:
            terms: (ciphertext, small signed coefficient) pairs
            constant: public offset folded in as a scalar addition
        """
        acc: Optional[Ct] = None
        for x, k in terms:
            term = x if k == 1 else self.scalar_mul(x, k)
            acc = term if acc is None else self.add(acc, term)
        if acc is None:
            return self.trivial(constant % 32)
        return self.scalar_add(acc, constant) if constant else acc
