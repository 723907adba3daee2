import logging
import math
from typing import Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ..config import SETTINGS
from ..exceptions import DomainError
from ..numerics.quadrature import panel_rule

logger = logging.getLogger(__name__)

MIN_POINTS = 8


class NonUniformGrid(BaseModel):
    """Symmetric spatial grid, coarse far out and geometrically refined near 0."""

    model_config = ConfigDict(frozen=True)

    nodes: Tuple[float, ...]
    weights: Tuple[float, ...]
    window: float = Field(gt=0.0, description="Half-width of the grid")

    @field_validator("nodes")
    @classmethod
    def _sorted_without_zero(cls, nodes):
        values = np.asarray(nodes)
        if np.any(values == 0.0):
            raise ValueError("grid nodes must exclude 0")
        if np.any(np.diff(values) <= 0.0):
            raise ValueError("grid nodes must be strictly increasing")
        return nodes

    @model_validator(mode="after")
    def _symmetric_with_positive_weights(self) -> "NonUniformGrid":
        nodes = np.asarray(self.nodes)
        if len(self.weights) != nodes.size:
            raise ValueError("one weight per node is required")
        if not np.allclose(nodes, -nodes[::-1], rtol=0.0, atol=1e-14 * self.window):
            raise ValueError("grid must be mirror-symmetric about 0")
        if np.any(np.asarray(self.weights) <= 0.0):
            raise ValueError("grid weights must be positive")
        return self

    @property
    def size(self) -> int:
        return len(self.nodes)

    def integrate(self, values) -> complex:
        """Composite trapezoid sum of values sampled on the nodes."""
        return complex(np.dot(np.asarray(self.weights), np.asarray(values, dtype=complex)))

    def oscillatory_rule(self, k_max: float, order: int = None,
                         panels_per_period: int = None) -> Tuple[np.ndarray, np.ndarray]:
        """Gauss-Legendre rule on the panels between nodes (0 inserted).

        Panels are subdivided so that none is wider than 1/panels_per_period
        of the oscillation period 2 pi / k_max.
        """
        order = SETTINGS["oscillatory_order"] if order is None else order
        panels_per_period = SETTINGS["panels_per_period"] if panels_per_period is None else panels_per_period
        edges = np.union1d(np.asarray(self.nodes), [0.0])
        if k_max > 0.0:
            max_width = 2.0 * math.pi / k_max / panels_per_period
            widths = np.diff(edges)
            pieces = np.maximum(1, np.ceil(widths / max_width).astype(int))
            fractions = [np.arange(p) / p for p in pieces]
            starts = np.concatenate([lo + w * f for lo, w, f in zip(edges[:-1], widths, fractions)])
            edges = np.append(starts, edges[-1])
        logger.debug("oscillatory rule: %d panels x %d points for k_max = %g", edges.size - 1, order, k_max)
        return panel_rule(edges, order)


def build_grid(window: float = None, n_coarse: int = None, n_fine: int = None,
               fine_scale: float = None) -> NonUniformGrid:
    """Uniform coarse grid on [-window, window] merged with a geometric
    grid clustered within fine_scale of 0; trapezoid weights."""
    window = SETTINGS["grid_window"] if window is None else window
    n_coarse = SETTINGS["grid_coarse"] if n_coarse is None else n_coarse
    n_fine = SETTINGS["grid_fine"] if n_fine is None else n_fine
    fine_scale = SETTINGS["grid_fine_scale"] if fine_scale is None else fine_scale
    if n_coarse < MIN_POINTS or n_fine < MIN_POINTS:
        raise DomainError(f"grid needs at least {MIN_POINTS} coarse and fine points")
    if not window > 0.0 or not fine_scale > 0.0:
        raise DomainError("grid window and fine scale must be positive")

    coarse = np.linspace(0.0, window, n_coarse // 2 + 1)[1:]
    fine = fine_scale * 2.0 ** -np.arange(n_fine)
    positive = np.union1d(coarse, fine[fine < window])
    nodes = np.concatenate((-positive[::-1], positive))

    gaps = np.diff(nodes)
    weights = np.zeros_like(nodes)
    weights[:-1] += 0.5 * gaps
    weights[1:] += 0.5 * gaps
    logger.debug("grid: %d nodes on [-%g, %g], min |z| = %.3e", nodes.size, window, window, positive[0])
    return NonUniformGrid(nodes=tuple(nodes), weights=tuple(weights), window=window)
