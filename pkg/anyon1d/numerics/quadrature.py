import logging
from enum import Enum
from functools import lru_cache
from typing import Callable, List, Tuple

import numpy as np
from numpy.polynomial.legendre import leggauss
from pydantic import BaseModel, ConfigDict, Field, field_validator

from ..config import SETTINGS
from ..exceptions import QuadratureFailure

logger = logging.getLogger(__name__)


class QuadratureScheme(str, Enum):
    GAUSS_LEGENDRE = "gauss_legendre"
    TRAPEZOID = "trapezoid"


@lru_cache(maxsize=64)
def gauss_legendre(order: int) -> Tuple[np.ndarray, np.ndarray]:
    """Gauss-Legendre nodes and weights on [-1, 1]."""
    nodes, weights = leggauss(order)
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return nodes, weights


def panel_rule(breakpoints, order: int) -> Tuple[np.ndarray, np.ndarray]:
    """Composite Gauss-Legendre rule on consecutive breakpoints."""
    edges = np.asarray(breakpoints, dtype=float)
    lo, hi = edges[:-1, None], edges[1:, None]
    x, w = gauss_legendre(order)
    half = 0.5 * (hi - lo)
    nodes = (0.5 * (hi + lo) + half * x).ravel()
    weights = (half * w).ravel()
    return nodes, weights


class QuadratureSpec(BaseModel):
    """Composite rule over disjoint ordered panels."""

    model_config = ConfigDict(frozen=True)

    panels: List[Tuple[float, float]]
    points_per_panel: int = Field(ge=2)
    scheme: QuadratureScheme = QuadratureScheme.GAUSS_LEGENDRE

    @field_validator("panels")
    @classmethod
    def _disjoint_ordered(cls, panels):
        if not panels:
            raise ValueError("at least one panel is required")
        previous_hi = -np.inf
        for lo, hi in panels:
            if not hi > lo:
                raise ValueError(f"degenerate panel ({lo}, {hi})")
            if lo < previous_hi:
                raise ValueError("panels must be ordered and disjoint")
            previous_hi = hi
        return panels

    @classmethod
    def uniform(cls, lo: float, hi: float, n_panels: int, points: int = 16,
                scheme: QuadratureScheme = QuadratureScheme.GAUSS_LEGENDRE) -> "QuadratureSpec":
        edges = np.linspace(lo, hi, n_panels + 1)
        return cls(panels=list(zip(edges[:-1], edges[1:])), points_per_panel=points, scheme=scheme)

    @classmethod
    def split_at(cls, cuts, lo: float, hi: float, n_panels: int, points: int = 16) -> "QuadratureSpec":
        """Uniform panels on [lo, hi] with extra breakpoints at the cusp locations."""
        edges = np.union1d(np.linspace(lo, hi, n_panels + 1), [c for c in cuts if lo < c < hi])
        return cls(panels=list(zip(edges[:-1], edges[1:])), points_per_panel=points)

    @classmethod
    def geometric_from_zero(cls, hi: float, n_uniform: int, n_geometric: int,
                            smallest: float, points: int = 16) -> "QuadratureSpec":
        """Panels on [0, hi], uniform far out and geometrically refined towards 0."""
        first = hi / n_uniform
        geometric = first * 2.0 ** -np.arange(1, n_geometric + 1)
        geometric = geometric[geometric >= smallest]
        edges = np.union1d(np.concatenate(([0.0], geometric)), np.linspace(first, hi, n_uniform))
        return cls(panels=list(zip(edges[:-1], edges[1:])), points_per_panel=points)

    def with_breakpoints(self, cuts) -> "QuadratureSpec":
        """Split every panel that contains one of the cuts in its interior."""
        panels = []
        for lo, hi in self.panels:
            edges = [lo, *sorted(float(c) for c in cuts if lo < c < hi), hi]
            panels.extend(zip(edges[:-1], edges[1:]))
        return self.model_copy(update={"panels": panels})

    @property
    def bounds(self) -> Tuple[float, float]:
        return self.panels[0][0], self.panels[-1][1]

    def refined(self) -> "QuadratureSpec":
        """Same panels with the points per panel doubled."""
        return self.model_copy(update={"points_per_panel": 2 * self.points_per_panel})

    def nodes_and_weights(self) -> Tuple[np.ndarray, np.ndarray]:
        edges = np.asarray(self.panels, dtype=float)
        if self.scheme is QuadratureScheme.GAUSS_LEGENDRE:
            x, w = gauss_legendre(self.points_per_panel)
            lo, hi = edges[:, :1], edges[:, 1:]
            half = 0.5 * (hi - lo)
            return (0.5 * (hi + lo) + half * x).ravel(), (half * w).ravel()

        t = np.linspace(0.0, 1.0, self.points_per_panel)
        base = np.full(self.points_per_panel, 1.0 / (self.points_per_panel - 1))
        base[[0, -1]] *= 0.5
        lo, hi = edges[:, :1], edges[:, 1:]
        return (lo + (hi - lo) * t).ravel(), ((hi - lo) * base).ravel()


def integrate(f: Callable[[np.ndarray], np.ndarray], spec: QuadratureSpec) -> complex:
    """Apply the rule to a vectorized integrand; returns a complex estimate."""
    nodes, weights = spec.nodes_and_weights()
    values = np.asarray(f(nodes), dtype=complex)
    return complex(np.dot(weights, values))


def integrate_converged(f: Callable[[np.ndarray], np.ndarray], spec: QuadratureSpec,
                        rtol: float = None, atol: float = 1e-15, max_doublings: int = 4) -> complex:
    """Integrate, doubling the points per panel until the estimate settles."""
    rtol = SETTINGS["quad_doubling_tol"] if rtol is None else rtol
    estimate = integrate(f, spec)
    for _ in range(max_doublings):
        spec = spec.refined()
        refined = integrate(f, spec)
        change = abs(refined - estimate)
        logger.debug("quadrature doubling to %d points: change %.3e", spec.points_per_panel, change)
        if change <= rtol * abs(refined) + atol:
            return refined
        estimate = refined
    raise QuadratureFailure(f"quadrature did not settle to {rtol:g} after {max_doublings} doublings")
