"""Closed-form observables of the free-space anyonic bound state.

Lengths are in units of a_sc where a formula says so; momenta in 1/a_sc.
The box length of a translation-invariant pair is scaled out: the density
matrix is reported as L * rho and the momentum distribution is its L -> inf
limit.
"""
import logging
import math
import warnings
from typing import Callable, List

import numpy as np
from scipy.integrate import quad as adaptive_quad

from ..exceptions import DomainError, NonNormalizedWarning
from ..models.observables import (
    ExtremumKind,
    ExtremumRecord,
    TailCoefficients,
    classify,
)
from ..models.statistics import StatisticsKind
from ..numerics.limits import one_sided_limit
from ..numerics.quadrature import QuadratureSpec, integrate_converged
from .statistics import RelativeWavefunction, TwoBodyState, full_angle_sine, half_angle
from .zerorange import ScatteringModel, bound_state

logger = logging.getLogger(__name__)

NORMALIZATION_CUTOFF = 200.0
CONTACT_LADDER_START = 1e-3


def _require_positive(a_sc: float) -> None:
    if not 0.0 < a_sc < math.inf:
        raise DomainError(f"free-space bound state needs 0 < a_sc < inf, got {a_sc}")


def obdm_bound(kind: StatisticsKind, a_sc: float, z1, z1p):
    """L rho(z1, z1') = exp(-|d|/a) (1 +- exp(i alpha pi sign d) |d|/a), d = z1 - z1'."""
    _require_positive(a_sc)
    d = np.asarray(z1, dtype=float) - np.asarray(z1p, dtype=float)
    r = np.abs(d) / a_sc
    phase = np.exp(1j * np.pi * kind.alpha * np.sign(d))
    values = np.exp(-r) * (1.0 + kind.family * phase * r)
    return values[()] if values.ndim == 0 else values


def momentum_bound(kind: StatisticsKind, a_sc: float, k):
    """n(k) of the bound pair; integrates to 2 under (1/2pi) dk."""
    _require_positive(a_sc)
    k = np.asarray(k, dtype=float)
    c, s = half_angle(kind.alpha)
    ak = a_sc * k
    amplitude = c + ak * s if kind.is_bosonic else s - ak * c
    values = 8.0 * a_sc * amplitude**2 / (1.0 + ak**2) ** 2
    return values[()] if values.ndim == 0 else values


def extrema_bound(kind: StatisticsKind, a_sc: float) -> List[ExtremumRecord]:
    """Global and local maximum of momentum_bound, global first.

    The local maximum moves to k = -inf (bosonic family, alpha = 0) or
    k = +inf (fermionic family, alpha = 1) where it degenerates to n = 0.
    """
    _require_positive(a_sc)
    alpha = kind.alpha
    if kind.is_bosonic:
        c4, s4 = half_angle(0.5 * alpha)
        k1 = s4 / c4 / a_sc
        k2 = -math.inf if s4 == 0.0 else -c4 / s4 / a_sc
        v1, v2 = 8.0 * a_sc * c4**4, 8.0 * a_sc * s4**4
    else:
        c, s = half_angle(alpha)
        k1 = -c / (1.0 + s) / a_sc
        k2 = math.inf if c == 0.0 else (1.0 + s) / c / a_sc
        c4, s4 = half_angle(0.5 * alpha)
        v1 = 2.0 * a_sc * (c4 + s4) ** 4
        v2 = 2.0 * a_sc * (1.0 - s) ** 2
    return [
        ExtremumRecord(location_k=k1, value=v1, which=ExtremumKind.GLOBAL_MAX),
        ExtremumRecord(location_k=k2, value=v2, which=ExtremumKind.LOCAL_MAX),
    ]


def contact_bound(a_sc: float) -> float:
    """Two-body contact C2 = 2/a_sc of the bound pair."""
    _require_positive(a_sc)
    return 2.0 / a_sc


def tail_bound(kind: StatisticsKind, a_sc: float) -> TailCoefficients:
    """Large-k expansion of momentum_bound through k^-4.

    The -2 sin^2 (fermionic family: -2 cos^2) piece of c4 is the free-space
    non-universal term.
    """
    _require_positive(a_sc)
    contact = contact_bound(a_sc)
    c, s = half_angle(kind.alpha)
    if not kind.is_bosonic:
        c, s = s, c
    c2 = 4.0 * contact * s**2
    c3 = kind.family * 4.0 * contact * full_angle_sine(kind.alpha) / a_sc
    universal_c4 = 4.0 * contact * c**2 / a_sc**2
    nonuniversal_c4 = -8.0 * contact * s**2 / a_sc**2
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


def normalization_bound(kind: StatisticsKind, a_sc: float) -> float:
    """(1/2pi) int n(k) dk on [-200/a, 200/a] plus the analytic tail remainder."""
    _require_positive(a_sc)
    cutoff = NORMALIZATION_CUTOFF / a_sc
    breakpoints = [r.location_k for r in extrema_bound(kind, a_sc) if abs(r.location_k) < cutoff]
    value, error = adaptive_quad(
        lambda k: momentum_bound(kind, a_sc, k), -cutoff, cutoff,
        points=breakpoints or None, limit=500, epsabs=1e-13, epsrel=1e-13,
    )
    logger.debug("bound-state n(k) quadrature %.15g (error estimate %.1e)", value, error)
    remainder = tail_bound(kind, a_sc).remainder_beyond(cutoff)
    return (value + remainder) / (2.0 * np.pi)


def bound_pair(kind: StatisticsKind, a_sc: float) -> TwoBodyState:
    """Bound pair with its center of mass at rest."""
    state = bound_state(kind, ScatteringModel(a_sc=a_sc))
    return TwoBodyState(relative=state.wavefunction, units="a_sc", label=f"bound a_sc={a_sc:g}")


def obdm_numeric(psi: RelativeWavefunction, z1: float, z1p: float, quad: QuadratureSpec) -> complex:
    """int psi*(u) psi(u + z1 - z1') du, panels split at both cusps."""
    d = float(z1) - float(z1p)
    spec = quad.with_breakpoints([0.0, -d])

    def integrand(u):
        return np.conj(psi(u)) * psi(u + d)

    return integrate_converged(integrand, spec)


def _two_body_norm(psi2: Callable, window: float, panels: int = 16, points: int = 16) -> float:
    """Double integral of |psi2|^2 in center-of-mass / relative coordinates."""
    com_nodes, com_weights = QuadratureSpec.uniform(-window, window, panels, points).nodes_and_weights()
    rel_nodes, rel_weights = QuadratureSpec.split_at([0.0], -window, window, panels, points).nodes_and_weights()
    big_z, small_z = com_nodes[:, None], rel_nodes[None, :]
    density = np.abs(psi2(big_z + 0.5 * small_z, big_z - 0.5 * small_z)) ** 2
    return float(com_weights @ density @ rel_weights)


def contact_from_wavefunction(psi2: Callable, window: float, quad: QuadratureSpec,
                              normalization_tol: float = 1e-6) -> float:
    """C2 = 2 int |Psi(z1, z1)|^2 dz1 with the coincidence value taken at 0+.

    ``quad`` is the z1 rule; ``window`` is the half-width of the square on
    which the two-body normalization is checked.
    """
    z1, weights = quad.nodes_and_weights()

    def coincidence(delta):
        shifted = z1[None, :] + np.asarray(delta)[:, None]
        return np.abs(psi2(shifted, z1[None, :])) ** 2

    value, _ = one_sided_limit(coincidence, side=1, h0=CONTACT_LADDER_START)
    contact = 2.0 * float(np.dot(weights, np.real(value)))

    norm = _two_body_norm(psi2, window)
    if abs(norm - 1.0) > normalization_tol:
        logger.warning("two-body norm %.9f deviates from 1 on window %g", norm, window)
        warnings.warn(f"two-body norm {norm:.9f} deviates from 1", NonNormalizedWarning, stacklevel=2)
    return contact
