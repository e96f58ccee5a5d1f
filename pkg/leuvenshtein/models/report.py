"""
Run Report Models

Pydantic models for the results the CLI prints: one RunReport per distance
computation and the batch input/output line shapes.
"""

from typing import Optional
from pydantic import BaseModel, Field, model_validator


class RunReport(BaseModel):
    """Decrypted distance plus the bootstrap accounting of one run."""
    distance: int = Field(..., description="Decrypted edit distance")
    mode: str = Field(..., description="Band mode label, e.g. exact or approx(10)")
    half_width: int = Field(..., ge=0, description="Resolved band half-width")
    m: int = Field(default=0, ge=0, description="Length of the first (encrypted) string")
    n: int = Field(default=0, ge=0, description="Length of the second string")
    visited_cells: int = Field(default=0, ge=0, description="Cells computed by the kernel")
    pbs_total: int = Field(default=0, ge=0, description="All bootstraps of the run")
    pbs_equality: int = Field(default=0, ge=0, description="Bootstraps spent on on-line character equality")
    pbs_kernel: int = Field(default=0, ge=0, description="Bootstraps spent in the cell kernel")
    refresh_count: int = Field(default=0, ge=0, description="Identity bootstraps inserted for noise control")
    max_key_variance: float = Field(default=0, ge=0, description="Largest kernel key variance seen")
    preprocessing_pbs: int = Field(default=0, ge=0, description="Bootstraps spent building the equality table")
    key_encoding: str = Field(default="negated", description="Packed key layout used")
    alphabet: str = Field(default="ascii7", description="Alphabet used for encoding")
    wall_time: Optional[float] = Field(default=None, description="Seconds spent, when timing is requested")

    @model_validator(mode="after")
    def _check_totals(self) -> "RunReport":
        parts = self.pbs_equality + self.pbs_kernel + self.refresh_count + self.preprocessing_pbs
        if self.pbs_total != parts:
            raise ValueError(f"pbs_total {self.pbs_total} != sum of phases {parts}")
        return self

    def to_json_dict(self) -> dict:
        """Serializable form; wall_time is left out unless it was measured."""
        return self.model_dump(mode="json", exclude_none=True)


class BatchItem(BaseModel):
    """One line of batch input."""
    a: str = Field(..., description="String encrypted by the client")
    b: str = Field(..., description="Second string")
