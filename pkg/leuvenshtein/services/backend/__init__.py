"""Ciphertext backends."""
from .base import FheBackend
from .simulated import SimBackend, SCORE_MODULUS
from .stats import BackendStats, PBS_TAGS

__all__ = ["FheBackend", "SimBackend", "BackendStats", "PBS_TAGS", "SCORE_MODULUS"]
