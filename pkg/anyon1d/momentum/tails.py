"""Tail extraction from sampled momentum distributions.

Theta = n k^2, Xi = (n - c2/k^2) k^3 and Upsilon = (n - c2/k^2 - c3/k^3) k^4
isolate the successive tail coefficients; fit_tail estimates them directly.
"""
import logging
import math
from enum import Enum
from typing import Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict

from ..config import SETTINGS
from ..exceptions import DomainError, IllConditioned
from ..models.observables import TailCoefficients, classify
from ..physics.statistics import full_angle_sine, half_angle
from .distribution import MomentumDistribution

logger = logging.getLogger(__name__)


class FitMethod(str, Enum):
    LEAST_SQUARES = "least_squares"
    SEQUENTIAL = "sequential"


class TailFit(BaseModel):
    model_config = ConfigDict(frozen=True)

    coefficients: TailCoefficients
    k_min: float
    k_max: float
    method: FitMethod
    condition: float
    relative_residual: float


def universal_c2_c3(kind, contact: float, contact_over_asc: float) -> Tuple[float, float]:
    """c2 = 4 C2 sin^2(pi alpha/2) and c3 = +-4 (C2/a_sc) sin(pi alpha); cos for the fermionic family."""
    c, s = half_angle(kind.alpha)
    weight = s if kind.is_bosonic else c
    c2 = 4.0 * contact * weight**2
    c3 = kind.family * 4.0 * contact_over_asc * full_angle_sine(kind.alpha)
    return c2, c3


def theta_xi_upsilon(nd: MomentumDistribution, contact: float,
                     a_sc: float) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Scaled and shifted tails at the sampled k; the c3 shift vanishes at a_sc = inf or 0."""
    k = nd.k
    if np.any(k == 0.0):
        raise DomainError("tail extractors need k != 0")
    contact_over_asc = 0.0 if math.isinf(a_sc) or a_sc == 0.0 else contact / a_sc
    c2, c3 = universal_c2_c3(nd.kind, contact, contact_over_asc)
    n = nd.n
    theta = n * k**2
    xi = (n - c2 / k**2) * k**3
    upsilon = (n - c2 / k**2 - c3 / k**3) * k**4
    return theta, xi, upsilon


def _parity_channels(nd: MomentumDistribution, k_min: float, k_max: float):
    """Positive k in [k_min, k_max] with the even and odd parts of n."""
    k = nd.k
    n = nd.n
    positive = np.flatnonzero((k >= k_min) & (k <= k_max))
    ks, even, odd = [], [], []
    for index in positive:
        partner = np.flatnonzero(np.isclose(k, -k[index], rtol=1e-12, atol=0.0))
        if partner.size == 0:
            raise DomainError(f"k = {k[index]:g} has no sampled partner at -k")
        ks.append(k[index])
        even.append(0.5 * (n[index] + n[partner[0]]))
        odd.append(0.5 * (n[index] - n[partner[0]]))
    return np.asarray(ks), np.asarray(even), np.asarray(odd)


def _solve(design: np.ndarray, rhs: np.ndarray) -> Tuple[np.ndarray, float]:
    condition = float(np.linalg.cond(design))
    if condition > SETTINGS["fit_condition_max"]:
        raise IllConditioned(f"tail fit design matrix has condition number {condition:.2e}")
    solution, *_ = np.linalg.lstsq(design, rhs, rcond=None)
    return solution, condition


def fit_tail(nd: MomentumDistribution, k_min: float, k_max: float,
             method: FitMethod = FitMethod.LEAST_SQUARES) -> TailFit:
    """Fit n(k) ~ c2/k^2 + c3/k^3 + c4/k^4 on k_min <= |k| <= k_max.

    c2 and c4 come from the even part [n(k) + n(-k)]/2, c3 from the odd part
    [n(k) - n(-k)]/2. Each channel carries one extra nuisance order (k^-6,
    k^-5) which is discarded.
    """
    method = FitMethod(method)
    if not 0.0 < k_min < k_max or k_max / k_min < 10.0:
        raise DomainError("fit_tail needs 0 < k_min and k_max / k_min >= 10")
    k, even, odd = _parity_channels(nd, k_min, k_max)
    if k.size < 4:
        raise DomainError(f"fit_tail needs at least 4 samples in range, got {k.size}")
    u = k_min / k

    if method is FitMethod.LEAST_SQUARES:
        even_sol, even_cond = _solve(np.column_stack((u**2, u**4, u**6)), even)
        odd_sol, odd_cond = _solve(np.column_stack((u**3, u**5)), odd)
        c2 = even_sol[0] / k_min**2
        c4 = even_sol[1] / k_min**4
        c3 = odd_sol[0] / k_min**3
        condition = max(even_cond, odd_cond)
    else:
        lead = np.column_stack((np.ones_like(u), u**2))
        sol, cond_2 = _solve(lead, even * k**2)
        c2 = sol[0]
        sol, cond_3 = _solve(lead, odd * k**3)
        c3 = sol[0]
        sol, cond_4 = _solve(lead, (even - c2 / k**2) * k**4)
        c4 = sol[0]
        condition = max(cond_2, cond_3, cond_4)

    model = c2 / k**2 + c3 / k**3 + c4 / k**4
    positive_n = even + odd
    residual = float(np.max(np.abs(model - positive_n) / np.abs(positive_n))) if np.all(positive_n) else math.nan
    logger.info("tail fit (%s) on [%g, %g]: c2=%.6g c3=%.6g c4=%.6g", method.value, k_min, k_max, c2, c3, c4)
    coefficients = TailCoefficients(
        c2=float(c2), c3=float(c3), c4=float(c4),
        universal_flags=(classify(c2, 0.0), classify(c3, 0.0), classify(c4, 0.0)),
    )
    return TailFit(coefficients=coefficients, k_min=k_min, k_max=k_max, method=method,
                   condition=condition, relative_residual=residual)
