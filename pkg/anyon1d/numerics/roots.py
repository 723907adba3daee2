import logging
from typing import Callable

import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator
from scipy.optimize import bisect, brentq

from ..exceptions import NoSignChange, NumericFailure

logger = logging.getLogger(__name__)


class RootBracket(BaseModel):
    """Interval [lo, hi] across which f changes sign."""

    model_config = ConfigDict(frozen=True)

    lo: float
    hi: float
    f_lo_sign: int
    f_hi_sign: int

    @model_validator(mode="after")
    def _ordered_with_sign_change(self) -> "RootBracket":
        if not self.lo < self.hi:
            raise ValueError(f"bracket requires lo < hi, got [{self.lo}, {self.hi}]")
        if self.f_lo_sign == self.f_hi_sign or 0 in (self.f_lo_sign, self.f_hi_sign):
            raise ValueError("bracket endpoints must carry opposite nonzero signs")
        return self

    @classmethod
    def from_function(cls, f: Callable[[float], float], lo: float, hi: float) -> "RootBracket":
        """Evaluate f at both ends; NoSignChange without a sign change, NumericFailure if f is not finite."""
        f_lo, f_hi = float(f(lo)), float(f(hi))
        if not (np.isfinite(f_lo) and np.isfinite(f_hi)):
            raise NumericFailure(f"f is not finite on [{lo:g}, {hi:g}]: {f_lo}, {f_hi}")
        s_lo, s_hi = int(np.sign(f_lo)), int(np.sign(f_hi))
        if s_lo == s_hi or s_lo == 0 or s_hi == 0:
            raise NoSignChange(f"no sign change of f on [{lo:g}, {hi:g}]")
        return cls(lo=lo, hi=hi, f_lo_sign=s_lo, f_hi_sign=s_hi)


def find_root(f: Callable[[float], float], bracket: RootBracket, tol: float = 1e-12) -> float:
    """Brent's method inside a verified bracket, with bisection as fallback."""
    f_lo, f_hi = f(bracket.lo), f(bracket.hi)
    if np.sign(f_lo) != bracket.f_lo_sign or np.sign(f_hi) != bracket.f_hi_sign:
        raise NoSignChange(f"f does not change sign on [{bracket.lo:g}, {bracket.hi:g}]")

    root, info = brentq(f, bracket.lo, bracket.hi, xtol=tol, maxiter=500, full_output=True, disp=False)
    if not info.converged:
        logger.warning("Brent did not converge (%s); falling back to bisection", info.flag)
        root = bisect(f, bracket.lo, bracket.hi, xtol=tol, maxiter=2000)
    return float(root)
