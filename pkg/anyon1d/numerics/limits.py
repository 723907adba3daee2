import logging
from typing import Callable, Tuple

import numpy as np

from ..config import SETTINGS
from ..exceptions import ExtrapolationFailure

logger = logging.getLogger(__name__)


def _interpolate_at_zero(t: np.ndarray, values: np.ndarray) -> np.ndarray:
    """Coefficients c0, c1 of the interpolating polynomial in t."""
    vandermonde = t[:, None] ** np.arange(t.size)
    coefficients = np.linalg.solve(vandermonde, values)
    return coefficients[:2]


def one_sided_limit(f: Callable[[np.ndarray], np.ndarray], side: int = 1, h0: float = None,
                    levels: int = None, tol: float = None,
                    atol: float = None) -> Tuple[np.ndarray, np.ndarray]:
    """Value and z-derivative of f at 0+ (side=+1) or 0- (side=-1).

    f is sampled on the geometric ladder z = side * h0 / 2^j and the
    interpolating polynomial is read off at 0 (Richardson extrapolation).
    f may return one value per z or an array of shape (len(z), m). The
    ladder has converged when the last level moves c0 and c1 by at most
    atol + tol * max(|c0|, |c1|), so limits that vanish pass on atol alone.
    """
    h0 = SETTINGS["ladder_start"] if h0 is None else h0
    levels = SETTINGS["ladder_levels"] if levels is None else levels
    tol = SETTINGS["ladder_tol"] if tol is None else tol
    atol = SETTINGS["ladder_atol"] if atol is None else atol

    t = 2.0 ** -np.arange(levels)
    values = np.asarray(f(side * h0 * t), dtype=complex)

    full = _interpolate_at_zero(t, values)
    coarse = _interpolate_at_zero(t[1:], values[1:])

    scale = np.maximum(np.abs(full[0]), np.abs(full[1]))
    drift = np.maximum(np.abs(full[0] - coarse[0]), np.abs(full[1] - coarse[1]))
    allowed = atol + tol * scale
    if np.any(drift > allowed):
        worst = np.argmax(np.atleast_1d(drift - allowed))
        raise ExtrapolationFailure(
            f"one-sided limit did not converge: drift {np.atleast_1d(drift)[worst]:.2e}"
            f" > {np.atleast_1d(allowed)[worst]:.1e}"
        )
    value = full[0]
    slope = side * full[1] / h0
    return value, slope
