"""Two anyons in a harmonic trap with a zero-range interaction.

Units hbar = omega = m = 1, so a_HO = 1 and the reduced mass is 1/2. The
relative Hamiltonian is -d^2/dz^2 + z^2/4 and the relative energy epsilon
fixes the scattering length through a Gamma-function ratio. Relative states
are built from the radial profile phi(r) = exp(-r^2/4) U(-nu+, 1/2, r^2/2),
with r = |z|, which is tabulated once per epsilon as a Chebyshev series.
"""
import logging
import math
from functools import lru_cache, partial
from typing import Optional, Tuple

import numpy as np
from numpy.polynomial import Chebyshev
from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..config import SETTINGS
from ..exceptions import (
    BranchOutOfRange,
    DomainError,
    KindMismatch,
    NumericFailure,
    PoleError,
    ZeroScatteringLength,
)
from ..models.observables import TailCoefficients, classify
from ..models.statistics import StatisticsKind
from ..numerics.quadrature import QuadratureSpec, integrate_converged
from ..numerics.roots import RootBracket, find_root
from ..numerics.special import gamma_ratio, hermite_function, kummer_u, pochhammer, reciprocal_gamma
from .statistics import (
    RelativeWavefunction,
    TwoBodyState,
    anyon_norm,
    anyonize,
    exchange_phase,
    full_angle_sine,
    half_angle,
    sign,
)

logger = logging.getLogger(__name__)

SQRT2 = math.sqrt(2.0)
LIMIT_TOL = 1e-12
MAX_COM_QUANTUM_NUMBER = 200
SHORT_DISTANCE_Z2_MAX = 4.0


def _numerator_argument(epsilon: float) -> float:
    return 0.25 - 0.5 * epsilon


def _denominator_argument(epsilon: float) -> float:
    return 0.75 - 0.5 * epsilon


def asc_from_epsilon(epsilon: float) -> float:
    """a_sc = Gamma(1/4 - eps/2) / (sqrt(2) Gamma(3/4 - eps/2)) in a_HO units.

    Returns +inf at eps = 1/2 + 2n and 0 at eps = 3/2 + 2n.
    """
    try:
        ratio = gamma_ratio(_numerator_argument(epsilon), _denominator_argument(epsilon))
    except PoleError:
        return math.inf
    return ratio / SQRT2


def inverse_asc(epsilon: float) -> float:
    """1/a_sc = sqrt(2) Gamma(3/4 - eps/2) / Gamma(1/4 - eps/2), smooth through a_sc = inf."""
    try:
        ratio = gamma_ratio(_denominator_argument(epsilon), _numerator_argument(epsilon))
    except PoleError as exc:
        raise ZeroScatteringLength(f"1/a_sc diverges at the hard-core point eps = {epsilon:g}") from exc
    return SQRT2 * ratio


def branch_bounds(branch: int) -> Tuple[float, float]:
    """Open interval of relative energies covered by a branch.

    Branch 0 is (-inf, 3/2) and holds the molecular state for a_sc > 0;
    branch n >= 1 is (3/2 + 2(n-1), 3/2 + 2n).
    """
    if branch < 0 or branch > SETTINGS["max_branch"]:
        raise BranchOutOfRange(f"branch must lie in [0, {SETTINGS['max_branch']}], got {branch}")
    hi = 1.5 + 2.0 * branch
    lo = -math.inf if branch == 0 else hi - 2.0
    return lo, hi


def epsilon_from_asc(a_sc: float, branch: int) -> float:
    """Relative energy on the given branch for scattering length a_sc."""
    lo, hi = branch_bounds(branch)
    if math.isinf(a_sc):
        return 0.5 + 2.0 * branch
    if a_sc == 0.0:
        return 1.5 + 2.0 * branch

    target = 1.0 / a_sc

    def residual(epsilon):
        return inverse_asc(epsilon) - target

    shrink = SETTINGS["bracket_shrink"]
    hi -= shrink
    if branch == 0:
        # 1/a_sc grows like sqrt(-eps) on the molecular side
        lo = -1.0 - 2.0 * max(target, 0.0) ** 2
        for _ in range(SETTINGS["bracket_expansions"]):
            if residual(lo) > 0.0:
                break
            lo = 2.0 * lo - 1.0
            logger.debug("expanding molecular-branch bracket down to %g", lo)
        else:
            raise NumericFailure(f"no molecular-branch bracket for a_sc = {a_sc:g} down to eps = {lo:g}")
    else:
        lo += shrink

    bracket = RootBracket.from_function(residual, lo, hi)
    epsilon = find_root(residual, bracket, tol=SETTINGS["root_tol"])
    logger.debug("a_sc = %g, branch %d -> eps = %.15g", a_sc, branch, epsilon)
    return epsilon


def _limit_index(epsilon: float) -> Optional[Tuple[str, int]]:
    """('noninteracting', n) at eps = 1/2 + 2n, ('hard_core', n) at 3/2 + 2n."""
    for family, offset in (("noninteracting", 0.5), ("hard_core", 1.5)):
        n = (epsilon - offset) / 2.0
        if n > -LIMIT_TOL and abs(n - round(n)) <= LIMIT_TOL:
            return family, int(round(n))
    return None


def limit_normalization(epsilon: float) -> float:
    """Closed-form normalization M at eps = 1/2 + 2n or 3/2 + 2n."""
    index = _limit_index(epsilon)
    if index is None:
        raise DomainError(f"no closed-form normalization at eps = {epsilon:g}")
    family, n = index
    if family == "noninteracting":
        return (2.0 * math.pi) ** -0.25 / math.sqrt(pochhammer(0.5, n) * pochhammer(1.0, n))
    return (2.0 / math.pi) ** 0.25 / math.sqrt(pochhammer(1.5, n) * pochhammer(1.0, n))


def limit_contact(epsilon: float) -> float:
    """C2 at eps = 1/2 + 2n, or lim C2/a_sc^2 at eps = 3/2 + 2n."""
    index = _limit_index(epsilon)
    if index is None:
        raise DomainError(f"no closed-form contact at eps = {epsilon:g}")
    family, n = index
    base = 0.5 if family == "noninteracting" else 1.5
    return math.sqrt(2.0 / math.pi) * pochhammer(base, n) / pochhammer(1.0, n)


def _profile_values(epsilon: float, r: np.ndarray) -> np.ndarray:
    x = 0.5 * r**2
    return np.exp(-0.5 * x) * kummer_u(_numerator_argument(epsilon), x)


@lru_cache(maxsize=128)
def _radial_profile(epsilon: float) -> Tuple[Chebyshev, float]:
    """Chebyshev series of phi(r) on [0, R] and the normalization M."""
    a = _numerator_argument(epsilon)
    a_min, a_max = SETTINGS["kummer_a_range"]
    if not a_min <= a <= a_max:
        raise NumericFailure(f"radial profile at eps = {epsilon:g} needs U(a, 1/2, x) at a = {a:g}, outside [{a_min}, {a_max}]")
    radius = SETTINGS["profile_radius"]
    tol = SETTINGS["profile_tail_tol"]
    for degree in SETTINGS["profile_degrees"]:
        series = Chebyshev.interpolate(partial(_profile_values, epsilon), degree, domain=[0.0, radius])
        scale = np.max(np.abs(series.coef))
        tail = np.max(np.abs(series.coef[-8:]))
        logger.debug("profile eps=%g degree %d: tail/scale = %.2e", epsilon, degree, tail / scale)
        if tail <= tol * scale:
            break
    else:
        raise NumericFailure(f"radial profile at eps = {epsilon:g} did not resolve at degree {degree}")

    spec = QuadratureSpec.geometric_from_zero(radius, 20, 8, 1e-4, points=16)
    half_norm = integrate_converged(lambda r: series(r) ** 2, spec).real
    return series, 1.0 / math.sqrt(2.0 * half_norm)


class TrapRelativeState(BaseModel):
    """Relative eigenstate of energy epsilon with its statistics."""

    model_config = ConfigDict(frozen=True)

    epsilon: float
    nu_plus: float
    nu_minus: float
    a_sc: float = Field(allow_inf_nan=True, description="Scattering length in a_HO units")
    norm: float = Field(gt=0.0, description="M(nu+)")
    kind: StatisticsKind

    @model_validator(mode="after")
    def _consistent_indices(self) -> "TrapRelativeState":
        if self.nu_plus != self.epsilon / 2.0 - 0.25 or self.nu_minus != self.nu_plus - 0.5:
            raise ValueError("nu+ = eps/2 - 1/4 and nu- = nu+ - 1/2 must hold")
        return self

    @classmethod
    def from_epsilon(cls, epsilon: float, kind: StatisticsKind) -> "TrapRelativeState":
        _, norm = _radial_profile(float(epsilon))
        nu_plus = epsilon / 2.0 - 0.25
        return cls(
            epsilon=epsilon,
            nu_plus=nu_plus,
            nu_minus=nu_plus - 0.5,
            a_sc=asc_from_epsilon(epsilon),
            norm=norm,
            kind=kind,
        )

    @classmethod
    def from_asc(cls, a_sc: float, branch: int, kind: StatisticsKind) -> "TrapRelativeState":
        return cls.from_epsilon(epsilon_from_asc(a_sc, branch), kind)

    def with_kind(self, kind: StatisticsKind) -> "TrapRelativeState":
        return self.model_copy(update={"kind": kind})

    def wavefunction(self) -> RelativeWavefunction:
        series, norm = _radial_profile(float(self.epsilon))
        radius = SETTINGS["profile_radius"]

        def boson(z):
            r = np.abs(z)
            return np.where(r <= radius, norm * series(np.minimum(r, radius)), 0.0)

        if self.kind.is_bosonic:
            func = boson
        else:
            def func(z):
                return sign(z) * boson(z)

        label = f"trap eps={self.epsilon:g}"
        base = RelativeWavefunction(func=func, kind=self.kind.parent, label=label)
        return anyonize(self.kind, base) if self.kind.is_anyon else base


def relative_wavefunction(state: TrapRelativeState, z):
    """psi(z) of the relative state; z = 0 is excluded."""
    return state.wavefunction()(z)


def com_wavefunction(quantum_number: int, big_z):
    """Normalized center-of-mass state Phi_M(Z) = 2^(1/4) h_M(sqrt(2) Z)."""
    if quantum_number < 0 or quantum_number > MAX_COM_QUANTUM_NUMBER:
        raise DomainError(f"M must lie in [0, {MAX_COM_QUANTUM_NUMBER}], got {quantum_number}")
    values = 2.0**0.25 * np.asarray(hermite_function(quantum_number, SQRT2 * np.asarray(big_z, dtype=float)))
    return values[()] if values.ndim == 0 else values


class TrapTwoBodyState(BaseModel):
    """Phi_M(Z) psi(z) with total energy M + 1/2 + epsilon."""

    model_config = ConfigDict(frozen=True)

    com_quantum_number: int = Field(0, ge=0, le=MAX_COM_QUANTUM_NUMBER)
    relative: TrapRelativeState

    @property
    def energy(self) -> float:
        return self.com_quantum_number + 0.5 + self.relative.epsilon

    @property
    def kind(self) -> StatisticsKind:
        return self.relative.kind

    def to_two_body(self) -> TwoBodyState:
        return TwoBodyState(
            relative=self.relative.wavefunction(),
            com=partial(com_wavefunction, self.com_quantum_number),
            com_quantum_number=self.com_quantum_number,
            units="a_HO",
            label=f"trap M={self.com_quantum_number} eps={self.relative.epsilon:g}",
        )

    def __call__(self, z1, z2):
        return self.to_two_body()(z1, z2)


def contact_ho(epsilon: float) -> float:
    """C2 = 2 pi [M / Gamma(3/4 - eps/2)]^2 in 1/a_HO."""
    _, norm = _radial_profile(float(epsilon))
    return 2.0 * math.pi * (norm * float(reciprocal_gamma(_denominator_argument(epsilon)))) ** 2


def contact_over_asc(epsilon: float) -> float:
    """C2 / a_sc, finite at both limit families."""
    _, norm = _radial_profile(float(epsilon))
    return (2.0 * SQRT2 * math.pi * norm**2
            * float(reciprocal_gamma(_denominator_argument(epsilon)))
            * float(reciprocal_gamma(_numerator_argument(epsilon))))


def contact_over_asc_sq(epsilon: float) -> float:
    """C2 / a_sc^2 = 4 pi [M / Gamma(1/4 - eps/2)]^2."""
    _, norm = _radial_profile(float(epsilon))
    return 4.0 * math.pi * (norm * float(reciprocal_gamma(_numerator_argument(epsilon)))) ** 2


def k2_coefficient(epsilon: float) -> float:
    """K2 = (2 eps + 3/4) a_sc^2; at a_sc = inf only the ratio K2/a_sc^2 is returned."""
    a_sc = asc_from_epsilon(epsilon)
    ratio = 2.0 * epsilon + 0.75
    if math.isinf(a_sc):
        return ratio
    return ratio * a_sc**2


def _require_ground_com(com_quantum_number: int) -> None:
    if com_quantum_number != 0:
        raise DomainError(f"tail and short-distance formulas need M = 0, got M = {com_quantum_number}")


def tail_ho(kind: StatisticsKind, epsilon: float, com_quantum_number: int = 0) -> TailCoefficients:
    """Analytic k^-2, k^-3, k^-4 coefficients of the trapped pair.

    The K2 part of c4 is non-universal; at the limit points the contact
    ratios are used so the coefficients stay finite.
    """
    _require_ground_com(com_quantum_number)
    c, s = half_angle(kind.alpha)
    if not kind.is_bosonic:
        c, s = s, c
    contact = contact_ho(epsilon)
    c2 = 4.0 * contact * s**2
    c3 = kind.family * 4.0 * contact_over_asc(epsilon) * full_angle_sine(kind.alpha)
    universal_c4 = 4.0 * contact_over_asc_sq(epsilon) * c**2
    nonuniversal_c4 = 4.0 * contact * (2.0 * epsilon + 0.75) * s**2
    return TailCoefficients(
        c2=c2,
        c3=c3,
        c4=universal_c4 + nonuniversal_c4,
        universal_flags=(
            classify(c2, 0.0),
            classify(c3, 0.0),
            classify(universal_c4, nonuniversal_c4),
        ),
    )


class ShortDistanceCoefficients(BaseModel):
    """Phi_0 psi near coalescence at fixed z2, up to the anyonic phase.

    evaluate(xi) = N(alpha) S^dagger_{alpha/2}(xi) [constant + abs_xi |xi|
    + xi_z2 xi + (xi_sq + xi_sq_z2_sq) xi^2 + xi_abs_xi xi |xi|].
    """

    model_config = ConfigDict(frozen=True)

    z2: float
    alpha: float
    constant: float
    abs_xi: float
    xi_z2: float
    xi_sq: float
    xi_sq_z2_sq: float
    xi_abs_xi: float

    def evaluate(self, xi):
        xi = np.asarray(xi, dtype=float)
        polynomial = (
            self.constant
            + self.abs_xi * np.abs(xi)
            + self.xi_z2 * xi
            + (self.xi_sq + self.xi_sq_z2_sq) * xi**2
            + self.xi_abs_xi * xi * np.abs(xi)
        )
        values = anyon_norm(self.alpha) * np.conj(exchange_phase(0.5 * self.alpha, xi)) * polynomial
        return values[()] if values.ndim == 0 else values


def short_distance_expansion(state: TrapTwoBodyState, z2: float) -> ShortDistanceCoefficients:
    """Expansion of Phi_0(z2 + xi/2) psi(xi) in the pair separation xi.

    The |xi| / constant ratio is -1/a_sc, the zero-range boundary condition.
    """
    _require_ground_com(state.com_quantum_number)
    if not state.kind.is_bosonic:
        raise KindMismatch("the short-distance expansion is written for the bosonic family")
    if abs(z2) > SHORT_DISTANCE_Z2_MAX:
        raise DomainError(f"|z2| must not exceed {SHORT_DISTANCE_Z2_MAX}, got {z2}")

    epsilon = state.relative.epsilon
    prefactor = (state.relative.norm * (2.0 * math.pi) ** 0.25
                 * float(reciprocal_gamma(_denominator_argument(epsilon))) * math.exp(-z2**2))
    beta = inverse_asc(epsilon)
    return ShortDistanceCoefficients(
        z2=z2,
        alpha=state.kind.alpha,
        constant=prefactor,
        abs_xi=-beta * prefactor,
        xi_z2=-z2 * prefactor,
        xi_sq=-(0.25 + 0.5 * epsilon) * prefactor,
        xi_sq_z2_sq=0.5 * z2**2 * prefactor,
        xi_abs_xi=beta * z2 * prefactor,
    )
