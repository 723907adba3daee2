"""Special functions on the real line.

Gamma, reciprocal gamma, Pochhammer and Hermite come from scipy.special;
gamma_ratio is the Pochhammer symbol (y)_{x-y}, which scipy keeps finite for
large arguments.
Kummer's U(a, 1/2, x) uses Laguerre closed forms on its two polynomial
families and mpmath.hyperu elsewhere.
"""
import logging
import math

import mpmath
import numpy as np
from scipy import special as sp

from ..config import SETTINGS
from ..exceptions import DomainError, PoleError

logger = logging.getLogger(__name__)

POLE_TOL = 1e-14
HERMITE_MAX_ORDER = 200


def _scalar_or_array(values):
    values = np.asarray(values)
    return values[()] if values.ndim == 0 else values


def _nonpositive_integer(x, tol: float = POLE_TOL):
    x = np.asarray(x, dtype=float)
    return (x <= tol) & (np.abs(x - np.round(x)) <= tol)


def gamma(x):
    """Gamma function; raises PoleError at non-positive integers."""
    x = np.asarray(x, dtype=float)
    if np.any(_nonpositive_integer(x)):
        raise PoleError(f"Gamma has a pole at {x[_nonpositive_integer(x)].ravel()[0]:g}")
    return _scalar_or_array(sp.gamma(x))


def reciprocal_gamma(x):
    """1/Gamma(x); entire, exactly zero at the poles of Gamma."""
    return _scalar_or_array(sp.rgamma(np.asarray(x, dtype=float)))


def gamma_ratio(x: float, y: float) -> float:
    """Gamma(x) / Gamma(y), finite where either factor alone overflows.

    Raises PoleError at a pole of Gamma(x); zero at a pole of Gamma(y).
    """
    if bool(_nonpositive_integer(x)):
        raise PoleError(f"Gamma has a pole at {x:g}")
    if bool(_nonpositive_integer(y)):
        return 0.0
    return float(sp.poch(y, x - y))


def pochhammer(lam: float, n: int) -> float:
    """Rising factorial (lam)_n, with (lam)_0 = 1."""
    if n < 0:
        raise DomainError(f"Pochhammer order must be non-negative, got {n}")
    return float(sp.poch(lam, n))


def hermite(order: int, y):
    """Physicists' Hermite polynomial H_order(y)."""
    if order < 0 or order > HERMITE_MAX_ORDER:
        raise DomainError(f"Hermite order must lie in [0, {HERMITE_MAX_ORDER}], got {order}")
    return _scalar_or_array(sp.eval_hermite(order, np.asarray(y, dtype=float)))


def hermite_function(order: int, y):
    """Normalized h_order(y) = H_order(y) exp(-y^2/2) / sqrt(2^order order! sqrt(pi)).

    Built by the three-term recurrence on the normalized functions, which
    stays finite where H_order itself overflows (order near 200, |y| ~ 20).
    """
    if order < 0 or order > HERMITE_MAX_ORDER:
        raise DomainError(f"Hermite order must lie in [0, {HERMITE_MAX_ORDER}], got {order}")
    y = np.asarray(y, dtype=float)
    previous = np.zeros_like(y)
    current = math.pi**-0.25 * np.exp(-0.5 * y**2)
    for n in range(order):
        previous, current = current, math.sqrt(2.0 / (n + 1)) * y * current - math.sqrt(n / (n + 1)) * previous
    return _scalar_or_array(current)


def _as_nonneg_integer(value: float):
    n = round(value)
    if value >= -POLE_TOL and abs(value - n) <= POLE_TOL:
        return int(n)
    return None


_hyperu = np.frompyfunc(lambda a, x: float(mpmath.hyperu(a, 0.5, x)), 2, 1)


def kummer_u(a: float, x):
    """Confluent hypergeometric function of the second kind U(a, 1/2, x), x > 0."""
    x = np.asarray(x, dtype=float)
    if np.any(x <= 0.0):
        raise DomainError("kummer_u requires x > 0")
    a_min, a_max = SETTINGS["kummer_a_range"]
    if not a_min <= a <= a_max:
        raise DomainError(f"kummer_u supports a in [{a_min}, {a_max}], got {a}")

    # a = -n: U(-n, b, x) = (-1)^n n! L_n^(b-1)(x)
    n = _as_nonneg_integer(-a)
    if n is not None:
        values = (-1) ** n * math.factorial(n) * sp.eval_genlaguerre(n, -0.5, x)
        return _scalar_or_array(values)

    # a + 1/2 = -m: U(a, b, x) = x^(1-b) U(a-b+1, 2-b, x)
    m = _as_nonneg_integer(-(a + 0.5))
    if m is not None:
        values = np.sqrt(x) * (-1) ** m * math.factorial(m) * sp.eval_genlaguerre(m, 0.5, x)
        return _scalar_or_array(values)

    values = np.asarray(_hyperu(a, x), dtype=float)
    return _scalar_or_array(values)
