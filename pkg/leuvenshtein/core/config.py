"""
Application Configuration

Centralized configuration management with environment variable support.
Every field can be overridden with a LEUVEN_-prefixed variable, e.g.
LEUVEN_BUDGET=25 sets the default noise budget for all runs.
"""

from typing import List
from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict
from functools import lru_cache


# Noise budget presets, in units of one fresh bootstrap output variance.
# The production figure is approximate: TFHE-rs default parameters handle
# "more than" this many additions.
BUDGET_PRESETS = {
    "tight": 25,
    "production": 4000,
}

KEY_ENCODINGS = ("original", "negated")


class Settings(BaseSettings):
    """
    Application settings with environment variable support.

    All settings can be overridden via environment variables.
    Example: LEUVEN_BUDGET -> budget, LEUVEN_KEY_ENCODING -> key_encoding
    """

    model_config = SettingsConfigDict(
        env_prefix="LEUVEN_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # ===========================================
    # Application Settings
    # ===========================================
    debug: bool = Field(default=False, description="Enable debug logging")
    log_level: str = Field(default="WARNING", description="Log level when debug is off")

    # ===========================================
    # Noise Model
    # ===========================================
    budget: float = Field(
        default=BUDGET_PRESETS["production"],
        description="Maximum key variance accepted by a bootstrap, in fresh-PBS units",
    )
    trivial_boundaries: bool = Field(
        default=False,
        description="Use noiseless trivial encryptions for boundary and out-of-band differentials",
    )

    # ===========================================
    # Algorithm Defaults
    # ===========================================
    key_encoding: str = Field(default="negated", description="Packed key layout: original, negated")
    default_alphabet: str = Field(default="ascii7", description="Alphabet when --encoding is omitted")

    # ===========================================
    # Performance Settings
    # ===========================================
    batch_threads: int = Field(default=1, description="Worker threads for batch mode")
    kernel_threads: int = Field(default=1, description="Worker threads per anti-diagonal")
    random_seed: int = Field(default=1234, description="Seed for bench string generation")

    @property
    def effective_log_level(self) -> str:
        """Log level after applying the debug switch."""
        return "DEBUG" if self.debug else self.log_level.upper()

    def validate_config(self) -> List[str]:
        """Validate configuration and return list of errors."""
        errors = []

        if self.budget < 1:
            errors.append("LEUVEN_BUDGET must be at least 1")

        if self.key_encoding not in KEY_ENCODINGS:
            errors.append(f"LEUVEN_KEY_ENCODING must be one of {', '.join(KEY_ENCODINGS)}")

        if self.batch_threads < 1 or self.kernel_threads < 1:
            errors.append("Thread counts must be positive")

        return errors


@lru_cache()
def get_settings() -> Settings:
    """Get cached settings instance."""
    return Settings()


# Global settings instance
settings = get_settings()
