"""Noise budget parameters."""

from pydantic import BaseModel, Field

from leuvenshtein.core.config import BUDGET_PRESETS


class NoiseParams(BaseModel):
    """
    Largest bootstrap-input variance that still decrypts correctly.

    Expressed as "equivalent independent additions" of fresh ciphertexts.
    """

    max_variance_budget: float = Field(default=BUDGET_PRESETS["production"], ge=1)

    model_config = {"frozen": True}

    @classmethod
    def preset(cls, name: str) -> "NoiseParams":
        return cls(max_variance_budget=BUDGET_PRESETS[name])

    def allows(self, variance: float) -> bool:
        return variance <= self.max_variance_budget
