"""Shared fixtures."""

import random
from pathlib import Path

import pytest

from leuvenshtein.core.config import get_settings
from leuvenshtein.models.alphabet import AlphabetSpec
from leuvenshtein.models.noise import NoiseParams
from leuvenshtein.services.backend import SimBackend

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture
def backend() -> SimBackend:
    return SimBackend(NoiseParams.preset("production"))


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240601)


@pytest.fixture
def ascii7() -> AlphabetSpec:
    return AlphabetSpec.ascii7()


@pytest.fixture
def lower26() -> AlphabetSpec:
    return AlphabetSpec.lower26()


@pytest.fixture
def dna4() -> AlphabetSpec:
    return AlphabetSpec.dna4()


@pytest.fixture
def fresh_settings(monkeypatch):
    """Clear the settings cache before and after a test that edits the environment."""
    get_settings.cache_clear()
    yield monkeypatch
    get_settings.cache_clear()


def fresh_eq9(backend: SimBackend, a: str, b: str):
    """eq9 provider that encrypts the plaintext comparison directly (no equality PBS)."""
    return lambda i, j: backend.encrypt(9 if a[i - 1] == b[j - 1] else 0)
