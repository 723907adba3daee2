"""Zero-range scattering of two anyons in units hbar = mu = 1.

The interaction enters only through the 1D scattering length a_sc: the low
energy phase shift obeys tan(delta) = -a_sc k, the even/odd couplings are
g+ = -1/a_sc and g- = a_sc, and at contact the wavefunction has logarithmic
derivative -1/a_sc on either side.
"""
import logging
import math
from typing import Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from ..config import SETTINGS
from ..exceptions import (
    BreakdownRegime,
    DomainError,
    ExtrapolationFailure,
    NoBoundState,
    ZeroScatteringLength,
)
from ..models.statistics import StatisticsKind
from ..numerics.limits import one_sided_limit
from .statistics import (
    ReferenceKind,
    RelativeWavefunction,
    anyonize,
    half_angle,
    reference_function,
    sign,
)

logger = logging.getLogger(__name__)

BREAKDOWN_ASC = 1e-12


class ScatteringModel(BaseModel):
    """Scattering length in the chosen length unit; +-inf and 0 are the limit flags."""

    model_config = ConfigDict(frozen=True)

    a_sc: float = Field(allow_inf_nan=True)
    length_unit: str = "l"

    @property
    def is_noninteracting_limit(self) -> bool:
        return math.isinf(self.a_sc)

    @property
    def is_hard_core_limit(self) -> bool:
        return self.a_sc == 0.0

    @property
    def inverse(self) -> float:
        """1/a_sc, with 1/inf = 0; divergent at a_sc = 0."""
        if self.is_hard_core_limit:
            raise ZeroScatteringLength("1/a_sc diverges at a_sc = 0")
        return 0.0 if self.is_noninteracting_limit else 1.0 / self.a_sc


class BoundState(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    kappa: float = Field(gt=0.0)
    energy: float = Field(lt=0.0)
    wavefunction: RelativeWavefunction
    kind: StatisticsKind


def tan_phase_shift(model: ScatteringModel, k: float) -> float:
    """tan(delta) = -a_sc k; a_sc = +-inf yields -+inf."""
    if k <= 0:
        raise DomainError(f"k must be positive, got {k}")
    if model.is_noninteracting_limit:
        return -math.copysign(math.inf, model.a_sc)
    return -model.a_sc * k


def continued_tan_phase_shift(model: ScatteringModel, k: complex) -> complex:
    """Analytic continuation of tan(delta) = -a_sc k to complex k."""
    return -model.a_sc * complex(k)


def couplings(model: ScatteringModel) -> Tuple[float, float]:
    """(g+, g-) = (-1/a_sc, a_sc); (0, inf) in the a_sc = inf limit."""
    if model.is_hard_core_limit:
        raise ZeroScatteringLength("g+ = -1/a_sc diverges at a_sc = 0")
    if model.is_noninteracting_limit:
        return 0.0, math.inf
    return -1.0 / model.a_sc, model.a_sc


def outside_solution(kind: StatisticsKind, model: ScatteringModel, k: float, z):
    """f + tan(delta) g outside the interaction range.

    At a_sc = inf the pure irregular solution g is returned (the infinite
    tangent normalized away).
    """
    irregular = reference_function(kind, ReferenceKind.IRREGULAR, k, z)
    if model.is_noninteracting_limit:
        return irregular
    regular = reference_function(kind, ReferenceKind.REGULAR, k, z)
    return regular + tan_phase_shift(model, k) * irregular


def _contact_expansion(kind: StatisticsKind, inverse_asc: float):
    """(B(0+), B'(0+), B(0-), B'(0-)) of the short-distance form at unit scale."""
    c, s = half_angle(kind.alpha)
    plus, minus = complex(c, s), complex(c, -s)
    if kind.is_bosonic:
        return plus, -plus * inverse_asc, minus, minus * inverse_asc
    return plus, -plus * inverse_asc, -minus, -minus * inverse_asc


def boundary_residual(w: RelativeWavefunction, model: ScatteringModel) -> float:
    """Deviation of w near contact from the zero-range boundary condition.

    Values and slopes at 0+ and 0- are extrapolated along a geometric ladder;
    the overall complex scale is fixed by the value at 0+.
    """
    inverse = model.inverse
    h0 = SETTINGS["ladder_start"] * min(1.0, abs(model.a_sc))
    v_plus, d_plus = one_sided_limit(w, side=1, h0=h0)
    v_minus, d_minus = one_sided_limit(w, side=-1, h0=h0)

    b_plus, db_plus, b_minus, db_minus = _contact_expansion(w.kind, inverse)
    scale = v_plus / b_plus
    if abs(scale) < 1e-300:
        raise ExtrapolationFailure("wavefunction vanishes at contact; no finite-a_sc boundary condition")

    deviations = (
        abs(d_plus - scale * db_plus),
        abs(v_minus - scale * b_minus),
        abs(d_minus - scale * db_minus),
    )
    residual = max(deviations) / abs(scale)
    logger.debug("boundary residual for %s: %.3e", w.kind.label, residual)
    return float(residual)


def bound_state(kind: StatisticsKind, model: ScatteringModel) -> BoundState:
    """Free-space bound state, kappa = 1/a_sc and E = -1/(2 a_sc^2)."""
    a = model.a_sc
    if not a > 0 or math.isinf(a):
        raise NoBoundState(f"a bound state needs 0 < a_sc < inf, got {a}")
    if a <= BREAKDOWN_ASC:
        raise BreakdownRegime(f"a_sc = {a:g} is inside the zero-range breakdown regime")

    amplitude = 1.0 / math.sqrt(a)

    if kind.is_bosonic:
        def parent(z):
            return amplitude * np.exp(-np.abs(z) / a)
    else:
        def parent(z):
            return amplitude * sign(z) * np.exp(-np.abs(z) / a)

    base = RelativeWavefunction(func=parent, kind=kind.parent, label="bound")
    wavefunction = anyonize(kind, base) if kind.is_anyon else base
    return BoundState(kappa=1.0 / a, energy=-0.5 / a**2, wavefunction=wavefunction, kind=kind)
