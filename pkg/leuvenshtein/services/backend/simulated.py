"""
Simulated TFHE Backend

Models plaintext semantics and noise growth of a TFHE-like scheme without
any cryptography. Bootstraps check the input variance against the noise
budget and raise instead of silently decrypting wrong.
"""

import itertools
import logging
import threading
from typing import Dict, Optional

from leuvenshtein.core.errors import NoiseBudgetExceeded, ValueOutsideLutHalf
from leuvenshtein.models.ciphertext import SimCiphertext, combine_ledgers, ledger_variance
from leuvenshtein.models.lut import Lut16, PlaintextSpace
from leuvenshtein.models.noise import NoiseParams
from .base import FheBackend
from .stats import BackendStats

logger = logging.getLogger(__name__)

MOD = PlaintextSpace.MODULUS
IDENTITY_LUT = Lut16.identity()
SCORE_MODULUS = 1 << 16


def _same_space(x: SimCiphertext, y: SimCiphertext) -> None:
    if x.modulus != y.modulus:
        raise ValueError(f"mixed plaintext moduli {x.modulus} and {y.modulus}")


class SimBackend(FheBackend[SimCiphertext]):
    """
    Plaintext-plus-ledger backend.

    Ciphertexts are immutable. The id counter and the statistics are the
    only shared mutable state; both are safe under concurrent use.
    """

    def __init__(self, params: Optional[NoiseParams] = None, stats: Optional[BackendStats] = None):
        self.params = params or NoiseParams()
        self.stats = stats or BackendStats()
        self._ids = itertools.count(1)
        self._id_lock = threading.Lock()

    # ===========================================
    # Encryption
    # ===========================================

    def mint_id(self) -> int:
        """A noise source id never handed out before by this backend."""
        with self._id_lock:
            return next(self._ids)

    def encrypt(self, v: int) -> SimCiphertext:
        PlaintextSpace.check(v)
        self.stats.add_encrypt()
        return SimCiphertext(v, {self.mint_id(): 1})

    def trivial(self, v: int) -> SimCiphertext:
        PlaintextSpace.check(v)
        return SimCiphertext(v, {})

    def decrypt(self, x: SimCiphertext) -> int:
        return x.value

    def decrypt_signed(self, x: SimCiphertext) -> int:
        half = x.modulus // 2
        return x.value - x.modulus if x.value >= half else x.value

    def lift(self, x: SimCiphertext, modulus: int = SCORE_MODULUS) -> SimCiphertext:
        """
        Reinterpret a signed 5-bit value in a wider plaintext space.

        Used only for score accumulation; the noise ledger carries over.
        """
        if x.modulus != MOD:
            raise ValueError(f"lift expects a 5-bit ciphertext, got modulus {x.modulus}")
        self.stats.add_linear()
        return SimCiphertext(PlaintextSpace.to_signed(x.value) % modulus, x.ledger, modulus)

    # ===========================================
    # Linear operations
    # ===========================================

    def add(self, x: SimCiphertext, y: SimCiphertext) -> SimCiphertext:
        self.stats.add_linear()
        _same_space(x, y)
        return SimCiphertext((x.value + y.value) % x.modulus, combine_ledgers(((x.ledger, 1), (y.ledger, 1))), x.modulus)

    def sub(self, x: SimCiphertext, y: SimCiphertext) -> SimCiphertext:
        self.stats.add_linear()
        _same_space(x, y)
        return SimCiphertext((x.value - y.value) % x.modulus, combine_ledgers(((x.ledger, 1), (y.ledger, -1))), x.modulus)

    def scalar_mul(self, x: SimCiphertext, k: int) -> SimCiphertext:
        self.stats.add_linear()
        return SimCiphertext((x.value * k) % x.modulus, combine_ledgers(((x.ledger, k),)), x.modulus)

    def scalar_add(self, x: SimCiphertext, k: int) -> SimCiphertext:
        self.stats.add_linear()
        return SimCiphertext((x.value + k) % x.modulus, x.ledger, x.modulus)

    def variance(self, x: SimCiphertext) -> float:
        return ledger_variance(x.ledger)

    # ===========================================
    # Bootstrapping
    # ===========================================

    def pbs(
        self,
        x: SimCiphertext,
        lut: Lut16,
        params: Optional[NoiseParams] = None,
        tag: str = "kernel",
    ) -> SimCiphertext:
        """
        Programmable bootstrap.

        Raises:
            NoiseBudgetExceeded: input variance above the budget; the
                caller should have refreshed earlier.
        """
        if x.modulus != MOD:
            raise ValueError("bootstrap input must be a 5-bit ciphertext")
        budget = (params or self.params).max_variance_budget
        variance = ledger_variance(x.ledger)
        if variance > budget:
            raise NoiseBudgetExceeded(variance, budget)
        self.stats.add_pbs(tag)
        return SimCiphertext(lut.eval(x.value), {self.mint_id(): 1})

    def refresh(self, x: SimCiphertext, params: Optional[NoiseParams] = None) -> SimCiphertext:
        if x.value >= PlaintextSpace.HALF:
            raise ValueOutsideLutHalf(f"cannot refresh value {x.value}: identity LUT only covers [0, 16)")
        return self.pbs(x, IDENTITY_LUT, params, tag="refresh")

    def remap_ledger(self, ledger: Dict[int, int], mapping: Dict[int, int]) -> Dict[int, int]:
        """Re-key a foreign ledger into this backend's id space, minting as needed."""
        out = {}
        for source, c in ledger.items():
            if source not in mapping:
                mapping[source] = self.mint_id()
            out[mapping[source]] = c
        return out
