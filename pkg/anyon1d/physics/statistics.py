"""Exchange operator, anyon normalization, reference functions and the
anyonization / BA-FA maps acting on relative wavefunctions.

Conventions: S_alpha(z) = exp(-i pi alpha sign z); bosonic-anyon states obey
psi(-z) = S_alpha(z) psi(z), fermionic-anyon states psi(-z) = -S_alpha(z) psi(z).
"""
from enum import Enum
from typing import Callable, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from ..exceptions import DomainError, KindMismatch
from ..models.statistics import StatisticsKind

EXTENDED_ALPHA = 2.0


def _scalar_or_array(values):
    values = np.asarray(values)
    return values[()] if values.ndim == 0 else values


def sign(z) -> np.ndarray:
    """sign(z) for z != 0; the relative coordinate never takes the value 0."""
    z = np.asarray(z, dtype=float)
    if np.any(z == 0.0):
        raise DomainError("sign(z) is undefined at z = 0")
    return np.sign(z)


def half_angle(alpha: float) -> Tuple[float, float]:
    """cos(pi alpha / 2), sin(pi alpha / 2), exact at alpha = 0 and 1."""
    if alpha == 0.0:
        return 1.0, 0.0
    if alpha == 1.0:
        return 0.0, 1.0
    return float(np.cos(0.5 * np.pi * alpha)), float(np.sin(0.5 * np.pi * alpha))


def full_angle_sine(alpha: float) -> float:
    """sin(pi alpha), exactly zero at alpha = 0 and 1."""
    if alpha in (0.0, 1.0):
        return 0.0
    return float(np.sin(np.pi * alpha))


def exchange_phase(alpha: float, z):
    """S_alpha(z) = exp[-i pi alpha sign(z)] for alpha in [-2, 2]."""
    if not -EXTENDED_ALPHA <= alpha <= EXTENDED_ALPHA:
        raise DomainError(f"exchange phase defined for |alpha| <= 2, got {alpha}")
    return _scalar_or_array(np.exp(-1j * np.pi * alpha * sign(z)))


def anyon_norm(alpha: float) -> complex:
    """N(alpha) = [(1 - alpha) - i alpha] / sqrt((1 - alpha)^2 + alpha^2)."""
    if not 0.0 <= alpha <= 1.0:
        raise DomainError(f"anyon normalization defined on [0, 1], got {alpha}")
    return complex(1.0 - alpha, -alpha) / np.hypot(1.0 - alpha, alpha)


class RelativeWavefunction(BaseModel):
    """Relative-coordinate wavefunction z -> psi(z) with its statistics."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    func: Callable[[np.ndarray], np.ndarray]
    kind: StatisticsKind
    label: str = ""

    def __call__(self, z):
        sign(z)
        return _scalar_or_array(np.asarray(self.func(np.asarray(z, dtype=float)), dtype=complex))


class ReferenceKind(str, Enum):
    REGULAR = "regular"
    IRREGULAR = "irregular"


def reference_function(kind: StatisticsKind, which: ReferenceKind, k: float, z):
    """Regular (f) or irregular (g) free solution of the given statistics.

    Boson rows are sign(z) sin(kz) and cos(kz), fermion rows sin(kz) and
    sign(z) cos(kz); anyon rows mix the family row with the opposite one as
    N(alpha)[cos(pi alpha/2) row + i sin(pi alpha/2) other].
    """
    if k <= 0:
        raise DomainError(f"reference functions need k > 0, got {k}")
    s = sign(z)
    kz = k * np.asarray(z, dtype=float)
    boson = {ReferenceKind.REGULAR: s * np.sin(kz), ReferenceKind.IRREGULAR: np.cos(kz)}
    fermion = {ReferenceKind.REGULAR: np.sin(kz), ReferenceKind.IRREGULAR: s * np.cos(kz)}
    row, other = (boson, fermion) if kind.is_bosonic else (fermion, boson)

    c, sn = half_angle(kind.alpha)
    value = anyon_norm(kind.alpha) * (c * row[which] + 1j * sn * other[which])
    return _scalar_or_array(value)


def _is_parent_of(base: StatisticsKind, target: StatisticsKind) -> bool:
    return base.alpha == 0.0 and base.family == target.family


def anyonize(target: StatisticsKind, base: RelativeWavefunction) -> RelativeWavefunction:
    """z -> N(alpha) S^dagger_{alpha/2}(z) base(z)."""
    if not _is_parent_of(base.kind, target):
        raise KindMismatch(f"cannot anyonize {base.kind.label} into {target.label}")
    alpha = target.alpha
    norm = anyon_norm(alpha)

    def func(z):
        return norm * np.conj(exchange_phase(0.5 * alpha, z)) * base(z)

    return RelativeWavefunction(func=func, kind=target, label=base.label)


def bare_anyonize(base: RelativeWavefunction, beta: float) -> Callable[[np.ndarray], np.ndarray]:
    """z -> S^dagger_{beta/2}(z) base(z) without N, for beta in [-2, 2]."""
    if base.kind.alpha != 0.0:
        raise KindMismatch("bare anyonization acts on boson or fermion parents")

    def func(z):
        return np.conj(exchange_phase(0.5 * beta, z)) * base(z)

    return func


def ba_fa_map(w: RelativeWavefunction) -> RelativeWavefunction:
    """Multiply by sign(z), toggling bosonic and fermionic families."""

    def func(z):
        return sign(z) * w(z)

    return RelativeWavefunction(func=func, kind=w.kind.toggled(), label=w.label)


def exchange_residual(w: RelativeWavefunction, z_samples) -> float:
    """max |w(-z) -+ S_alpha(z) w(z)| over the samples."""
    z = np.atleast_1d(np.asarray(z_samples, dtype=float))
    if z.size == 0:
        raise DomainError("exchange_residual needs at least one sample")
    expected = w.kind.family * exchange_phase(w.kind.alpha, z) * w(z)
    return float(np.max(np.abs(w(-z) - expected)))


class TwoBodyState(BaseModel):
    """Two-body wavefunction Phi(Z) psi(z) with Z = (z1 + z2)/2, z = z1 - z2.

    Without a center-of-mass factor the state is translation invariant (CoM at
    rest) and only becomes normalizable in a box, see ``windowed``.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    relative: RelativeWavefunction
    com: Optional[Callable[[np.ndarray], np.ndarray]] = None
    com_quantum_number: Optional[int] = Field(None, ge=0)
    units: str = "a_HO"
    label: str = ""

    @property
    def kind(self) -> StatisticsKind:
        return self.relative.kind

    def __call__(self, z1, z2):
        if self.com is None:
            raise DomainError("translation-invariant state: use windowed(length)")
        z1, z2 = np.asarray(z1, dtype=float), np.asarray(z2, dtype=float)
        return self.com(0.5 * (z1 + z2)) * self.relative(z1 - z2)

    def windowed(self, length: float) -> Callable[[np.ndarray, np.ndarray], np.ndarray]:
        """Box-normalized L^(-1/2) psi(z1 - z2) for a state with its CoM at rest."""
        scale = 1.0 / np.sqrt(length)

        def psi2(z1, z2):
            return scale * self.relative(np.asarray(z1, dtype=float) - np.asarray(z2, dtype=float))

        return psi2
