import math
from enum import Enum
from pathlib import Path
from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ..config import SETTINGS
from .statistics import StatisticsKind, Variant


class Command(str, Enum):
    BOUNDSTATE = "boundstate"
    HO = "ho"
    VERIFY = "verify"


class OutputFormat(str, Enum):
    CSV = "csv"
    JSON = "json"


DEFAULT_K_MAX = {Command.BOUNDSTATE: 20.0, Command.HO: 100.0, Command.VERIFY: SETTINGS["k_sample_max"]}


class GridParameters(BaseModel):
    model_config = ConfigDict(frozen=True)

    window: Optional[float] = Field(None, gt=0.0, description="Half-width of the spatial grid")
    n_coarse: int = Field(SETTINGS["grid_coarse"], ge=8)
    n_fine: int = Field(SETTINGS["grid_fine"], ge=8)
    fine_scale: float = Field(SETTINGS["grid_fine_scale"], gt=0.0)


class RunConfig(BaseModel):
    """Validated command-line request."""

    model_config = ConfigDict(frozen=True)

    command: Command
    statistics: Variant = Variant.BOSONIC_ANYON
    alpha: float = Field(0.0, ge=0.0, le=1.0)
    a_sc: Optional[float] = Field(None, allow_inf_nan=True)
    epsilon: Optional[float] = None
    branch: int = Field(0, ge=0)
    k_max: Optional[float] = Field(None, gt=0.0)
    grid: GridParameters = Field(default_factory=GridParameters)
    output_dir: Path = Path("results")
    output_format: OutputFormat = OutputFormat.CSV
    suites: List[str] = Field(default_factory=list)
    inject_sign_flip: bool = False
    sweep: bool = False
    verbose: bool = False

    @field_validator("suites")
    @classmethod
    def _known_suites(cls, suites):
        unknown = [name for name in suites if name not in SETTINGS["tolerances"]]
        if unknown:
            raise ValueError(f"unknown suites {unknown}; choose from {sorted(SETTINGS['tolerances'])}")
        return suites

    @model_validator(mode="after")
    def _mode_parameters(self) -> "RunConfig":
        StatisticsKind(variant=self.statistics, alpha=self.alpha)
        if self.a_sc is not None and math.isnan(self.a_sc):
            raise ValueError("a_sc must not be nan")
        if self.command is Command.BOUNDSTATE:
            if self.epsilon is not None:
                raise ValueError("boundstate takes --asc, not --epsilon")
            if self.a_sc is None or not 0.0 < self.a_sc < math.inf:
                raise ValueError("boundstate needs a finite --asc > 0")
        elif self.command is Command.HO:
            if (self.a_sc is None) == (self.epsilon is None):
                raise ValueError("ho needs exactly one of --asc and --epsilon")
        return self

    @property
    def kind(self) -> StatisticsKind:
        return StatisticsKind(variant=self.statistics, alpha=self.alpha)

    @property
    def resolved_k_max(self) -> float:
        return self.k_max if self.k_max is not None else DEFAULT_K_MAX[self.command]
