from enum import Enum

from pydantic import BaseModel, ConfigDict, Field, model_validator


class Variant(str, Enum):
    BOSON = "boson"
    FERMION = "fermion"
    BOSONIC_ANYON = "ba"
    FERMIONIC_ANYON = "fa"


_BOSONIC_FAMILY = (Variant.BOSON, Variant.BOSONIC_ANYON)
_PLAIN = (Variant.BOSON, Variant.FERMION)


class StatisticsKind(BaseModel):
    """Exchange statistics carried by a two-body state.

    Bosons and fermions are the alpha = 0 members of the bosonic-anyon and
    fermionic-anyon families; every observable treats them that way.
    """

    model_config = ConfigDict(frozen=True)

    variant: Variant = Field(description="boson, fermion, bosonic anyon or fermionic anyon")
    alpha: float = Field(0.0, ge=0.0, le=1.0, description="Statistical parameter")

    @model_validator(mode="after")
    def _plain_statistics_have_no_alpha(self) -> "StatisticsKind":
        if self.variant in _PLAIN and self.alpha != 0.0:
            raise ValueError(f"{self.variant.value} carries no statistical parameter")
        return self

    @classmethod
    def boson(cls) -> "StatisticsKind":
        return cls(variant=Variant.BOSON)

    @classmethod
    def fermion(cls) -> "StatisticsKind":
        return cls(variant=Variant.FERMION)

    @classmethod
    def bosonic_anyon(cls, alpha: float) -> "StatisticsKind":
        return cls(variant=Variant.BOSONIC_ANYON, alpha=alpha)

    @classmethod
    def fermionic_anyon(cls, alpha: float) -> "StatisticsKind":
        return cls(variant=Variant.FERMIONIC_ANYON, alpha=alpha)

    @classmethod
    def from_label(cls, label: str, alpha: float = 0.0) -> "StatisticsKind":
        """Build from a CLI label: boson, fermion, ba or fa."""
        return cls(variant=Variant(label.lower()), alpha=alpha)

    @property
    def family(self) -> int:
        """+1 for the bosonic family, -1 for the fermionic one."""
        return 1 if self.variant in _BOSONIC_FAMILY else -1

    @property
    def is_bosonic(self) -> bool:
        return self.family == 1

    @property
    def is_anyon(self) -> bool:
        return self.variant not in _PLAIN

    @property
    def parent(self) -> "StatisticsKind":
        return StatisticsKind.boson() if self.is_bosonic else StatisticsKind.fermion()

    def toggled(self) -> "StatisticsKind":
        """Partner kind under multiplication by sign(z)."""
        swap = {
            Variant.BOSON: Variant.FERMION,
            Variant.FERMION: Variant.BOSON,
            Variant.BOSONIC_ANYON: Variant.FERMIONIC_ANYON,
            Variant.FERMIONIC_ANYON: Variant.BOSONIC_ANYON,
        }
        return StatisticsKind(variant=swap[self.variant], alpha=self.alpha)

    def with_alpha(self, alpha: float) -> "StatisticsKind":
        variant = Variant.BOSONIC_ANYON if self.is_bosonic else Variant.FERMIONIC_ANYON
        return StatisticsKind(variant=variant, alpha=alpha)

    @property
    def label(self) -> str:
        if self.is_anyon:
            return f"{self.variant.value}(alpha={self.alpha:g})"
        return self.variant.value
