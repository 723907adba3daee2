import math
from enum import Enum
from typing import Dict, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, computed_field, model_validator


class Universality(str, Enum):
    UNIVERSAL = "universal"
    MIXED = "mixed"
    NON_UNIVERSAL = "non_universal"
    ABSENT = "absent"


def classify(universal_part: float, non_universal_part: float) -> Universality:
    """Flag for a coefficient assembled from a universal and a non-universal piece."""
    if universal_part != 0.0 and non_universal_part != 0.0:
        return Universality.MIXED
    if universal_part != 0.0:
        return Universality.UNIVERSAL
    if non_universal_part != 0.0:
        return Universality.NON_UNIVERSAL
    return Universality.ABSENT


class TailCoefficients(BaseModel):
    """Large-momentum tail n(k) ~ c2/k^2 + c3/k^3 + c4/k^4."""

    model_config = ConfigDict(frozen=True)

    c2: float = Field(description="Coefficient of k^-2")
    c3: float = Field(description="Coefficient of k^-3")
    c4: float = Field(description="Coefficient of k^-4")
    universal_flags: Tuple[Universality, Universality, Universality]

    @model_validator(mode="after")
    def _absent_means_zero(self) -> "TailCoefficients":
        for name, flag in zip(("c2", "c3", "c4"), self.universal_flags):
            if flag is Universality.ABSENT and getattr(self, name) != 0.0:
                raise ValueError(f"{name} flagged absent but nonzero")
        return self

    def evaluate(self, k):
        k = np.asarray(k, dtype=float)
        return self.c2 / k**2 + self.c3 / k**3 + self.c4 / k**4

    def remainder_beyond(self, k_cut: float) -> float:
        """Integral of n(k) + n(-k) over k > k_cut from the tail expansion."""
        return 2.0 * self.c2 / k_cut + 2.0 * self.c4 / (3.0 * k_cut**3)


class ExtremumKind(str, Enum):
    GLOBAL_MAX = "global_max"
    LOCAL_MAX = "local_max"


class ExtremumRecord(BaseModel):
    model_config = ConfigDict(frozen=True)

    location_k: float = Field(description="Momentum of the extremum (may be +-inf)")
    value: float = Field(ge=0.0, description="n(k) at the extremum")
    which: ExtremumKind


class PropertyReport(BaseModel):
    """Outcome of one property check over a state corpus."""

    name: str
    max_residual: float
    tolerance: float
    states_tested: int
    details: Dict[str, float] = Field(default_factory=dict)
    error: Optional[str] = None

    @computed_field
    @property
    def passed(self) -> bool:
        return self.error is None and not math.isnan(self.max_residual) and self.max_residual <= self.tolerance
