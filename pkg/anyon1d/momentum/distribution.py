"""Numerical momentum distributions

n(k) = 2 int dz2 | int dz1 exp(-i k z1) Psi(z1, z2) |^2,

evaluated with the inner variable shifted to the pair separation
xi = z1 - z2, so the coincidence cusp sits at a panel edge.
"""
import logging
import math
from typing import Callable, Optional, Sequence, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator
from scipy.integrate import trapezoid

from ..config import SETTINGS
from ..exceptions import DomainError, WindowTooSmall
from ..models.observables import TailCoefficients
from ..models.statistics import StatisticsKind
from ..numerics.quadrature import QuadratureSpec
from ..physics.statistics import TwoBodyState
from .grid import NonUniformGrid

logger = logging.getLogger(__name__)

K_CHUNK = 32
ROW_CHUNK = 16


class MomentumDistribution(BaseModel):
    model_config = ConfigDict(frozen=True)

    k_nodes: Sequence[float]
    values: Sequence[float]
    kind: StatisticsKind
    norm_check: float = Field(math.nan, description="(1/2pi) int n dk; nan when not computable")

    @field_validator("values")
    @classmethod
    def _nonnegative(cls, values):
        if np.any(np.asarray(values) < 0.0):
            raise ValueError("momentum distribution values must be non-negative")
        return values

    @property
    def k(self) -> np.ndarray:
        return np.asarray(self.k_nodes, dtype=float)

    @property
    def n(self) -> np.ndarray:
        return np.asarray(self.values, dtype=float)

    def at(self, k: float) -> float:
        """Value at a sampled momentum."""
        matches = np.flatnonzero(np.isclose(self.k, k, rtol=1e-12, atol=1e-14))
        if matches.size == 0:
            raise DomainError(f"k = {k} is not a sampled momentum")
        return float(self.values[matches[0]])


def _fourier_rows(rows: np.ndarray, xi: np.ndarray, weights: np.ndarray, k_nodes: np.ndarray) -> np.ndarray:
    """int dxi exp(-i k xi) rows(xi) for every row and k, in k chunks."""
    out = np.empty((rows.shape[0], k_nodes.size), dtype=complex)
    for start in range(0, k_nodes.size, K_CHUNK):
        ks = k_nodes[start:start + K_CHUNK]
        kernel = np.exp(-1j * np.outer(xi, ks)) * weights[:, None]
        out[:, start:start + K_CHUNK] = rows @ kernel
    return out


def _check_window(values: np.ndarray, xi: np.ndarray, window: float) -> None:
    magnitude = np.abs(values)
    peak = np.max(magnitude)
    edge = np.max(magnitude[..., np.abs(xi) >= 0.999 * np.max(np.abs(xi))])
    if peak > 0.0 and edge > SETTINGS["window_edge_tol"] * peak:
        raise WindowTooSmall(f"|psi| at the window edge {window:g} is {edge / peak:.2e} of its peak")


def _norm_check(k_nodes: np.ndarray, values: np.ndarray, k_weights: Optional[np.ndarray],
                tail: Optional[TailCoefficients]) -> float:
    if k_weights is not None:
        total = float(np.dot(k_weights, values))
    elif k_nodes.size >= 2:
        order = np.argsort(k_nodes)
        total = float(trapezoid(values[order], k_nodes[order]))
    else:
        return math.nan
    if tail is not None:
        total += tail.remainder_beyond(float(np.max(np.abs(k_nodes))))
    return total / (2.0 * math.pi)


def _relative_route(state: TwoBodyState, xi: np.ndarray, weights: np.ndarray,
                    k_nodes: np.ndarray, window: float) -> np.ndarray:
    psi = state.relative(xi)
    _check_window(psi, xi, window)
    transform = _fourier_rows(psi[None, :], xi, weights, k_nodes)[0]
    return 2.0 * np.abs(transform) ** 2


def _nested_route(psi2: Callable, xi: np.ndarray, weights: np.ndarray, k_nodes: np.ndarray,
                  outer: QuadratureSpec, window: float, separable: Optional[TwoBodyState]) -> np.ndarray:
    z2, w2 = outer.nodes_and_weights()
    psi = separable.relative(xi) if separable is not None else None
    if psi is not None:
        _check_window(psi, xi, window)

    values = np.zeros(k_nodes.size)
    for start in range(0, z2.size, ROW_CHUNK):
        rows_z2 = z2[start:start + ROW_CHUNK, None]
        if psi is not None:
            rows = separable.com(rows_z2 + 0.5 * xi[None, :]) * psi[None, :]
        else:
            rows = np.asarray(psi2(rows_z2 + xi[None, :], rows_z2), dtype=complex)
            _check_window(rows, xi, window)
        transform = _fourier_rows(rows, xi, weights, k_nodes)
        values += 2.0 * (w2[start:start + ROW_CHUNK] @ np.abs(transform) ** 2)
    return values


def momentum_distribution(psi2: Union[TwoBodyState, Callable], grid: NonUniformGrid, k_nodes,
                          outer: Optional[QuadratureSpec] = None, kind: Optional[StatisticsKind] = None,
                          k_weights=None, tail: Optional[TailCoefficients] = None) -> MomentumDistribution:
    """n(k) on k_nodes for a two-body state or a two-coordinate evaluator.

    A TwoBodyState without a center-of-mass factor uses the translation
    invariant form n(k) = 2 |int exp(-i k z) psi(z) dz|^2; with a factor
    the relative part is evaluated once and reused for every z2 row. Plain
    callables go through the full nested quadrature and need ``kind``.
    ``k_weights`` and ``tail`` feed the normalization check.
    """
    k_nodes = np.asarray(k_nodes, dtype=float)
    if k_nodes.size == 0:
        raise DomainError("momentum_distribution needs at least one k node")
    k_max = float(np.max(np.abs(k_nodes)))
    xi, weights = grid.oscillatory_rule(k_max)

    if isinstance(psi2, TwoBodyState):
        kind = psi2.kind
    elif kind is None:
        raise DomainError("a statistics kind is required for a plain two-coordinate evaluator")

    if outer is None:
        window = SETTINGS["outer_window"]
        outer = QuadratureSpec.uniform(-window, window, SETTINGS["outer_panels"], SETTINGS["outer_order"])

    logger.debug("n(k): %d k nodes, %d xi nodes", k_nodes.size, xi.size)
    if isinstance(psi2, TwoBodyState) and psi2.com is None:
        values = _relative_route(psi2, xi, weights, k_nodes, grid.window)
    else:
        separable = psi2 if isinstance(psi2, TwoBodyState) else None
        values = _nested_route(psi2, xi, weights, k_nodes, outer, grid.window, separable)

    weights_k = None if k_weights is None else np.asarray(k_weights, dtype=float)
    norm = _norm_check(k_nodes, values, weights_k, tail)
    return MomentumDistribution(k_nodes=tuple(k_nodes), values=tuple(values), kind=kind, norm_check=norm)
