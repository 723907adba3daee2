"""States the property suite runs over.

A corpus entry fixes one physical pair (a free-space bound state of given
a_sc, or a trap eigenstate of given epsilon) together with a statistics
kind, and knows how to produce the wavefunctions and observables the checks
compare. ``scale`` multiplies the wavefunction and exists to build
deliberately unnormalized states.
"""
import logging
from abc import ABC, abstractmethod
from typing import List, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from ..config import SETTINGS
from ..models.statistics import StatisticsKind
from ..momentum.density import one_body_density_matrix
from ..momentum.distribution import momentum_distribution
from ..momentum.grid import build_grid
from ..numerics.quadrature import QuadratureSpec, integrate_converged, panel_rule
from ..physics.freespace import (
    bound_pair,
    contact_bound,
    contact_from_wavefunction,
    momentum_bound,
    normalization_bound,
    obdm_bound,
)
from ..physics.harmonic import TrapRelativeState, TrapTwoBodyState, contact_ho, tail_ho
from ..physics.statistics import RelativeWavefunction, TwoBodyState
from ..physics.zerorange import ScatteringModel, bound_state

logger = logging.getLogger(__name__)

TRAP_WINDOW = 12.0
TRAP_CONTACT_WINDOW = 10.0
TRAP_COM_WINDOW = 8.0


def _scaled(w: RelativeWavefunction, scale: float) -> RelativeWavefunction:
    if scale == 1.0:
        return w
    return RelativeWavefunction(func=lambda z: scale * w(z), kind=w.kind, label=w.label)


class CorpusState(BaseModel, ABC):
    model_config = ConfigDict(frozen=True)

    kind: StatisticsKind
    scale: float = Field(1.0, gt=0.0)

    @property
    @abstractmethod
    def physical_key(self) -> Tuple[str, float]:
        """Identifies the pair independently of its statistics."""

    @property
    @abstractmethod
    def a_sc(self) -> float:
        ...

    @property
    @abstractmethod
    def window(self) -> float:
        """Half-width beyond which the relative wavefunction is negligible."""

    @abstractmethod
    def _unscaled_wavefunction(self) -> RelativeWavefunction:
        ...

    @abstractmethod
    def two_body(self) -> TwoBodyState:
        ...

    @abstractmethod
    def contact(self) -> float:
        """Contact from the coincidence values of the two-body wavefunction."""

    @abstractmethod
    def analytic_contact(self) -> float:
        ...

    @abstractmethod
    def momentum(self, k: np.ndarray) -> np.ndarray:
        ...

    @abstractmethod
    def obdm(self, z1: float, z1p: float) -> complex:
        ...

    @abstractmethod
    def momentum_normalization(self) -> float:
        """(1/2pi) int n(k) dk."""

    @property
    def label(self) -> str:
        kind, value = self.physical_key
        suffix = "" if self.scale == 1.0 else f" x{self.scale:g}"
        return f"{kind} {value:g} {self.kind.label}{suffix}"

    def with_kind(self, kind: StatisticsKind) -> "CorpusState":
        return self.model_copy(update={"kind": kind})

    def wavefunction(self) -> RelativeWavefunction:
        return _scaled(self._unscaled_wavefunction(), self.scale)

    def parent(self, bosonic: bool) -> RelativeWavefunction:
        """Real boson or fermion wavefunction of the same pair."""
        kind = StatisticsKind.boson() if bosonic else StatisticsKind.fermion()
        return self.with_kind(kind).wavefunction()

    def density_normalization(self) -> float:
        """int rho(z, z) dz = 2 int |psi|^2 dz."""
        w = self.wavefunction()
        spec = QuadratureSpec.split_at([0.0], -self.window, self.window, 16, 16)
        return 2.0 * integrate_converged(lambda z: np.abs(w(z)) ** 2, spec).real


class BoundCorpusState(CorpusState):
    asc: float = Field(gt=0.0)

    @property
    def physical_key(self) -> Tuple[str, float]:
        return "bound", self.asc

    @property
    def a_sc(self) -> float:
        return self.asc

    @property
    def window(self) -> float:
        return SETTINGS["free_window_factor"] * self.asc

    def _unscaled_wavefunction(self) -> RelativeWavefunction:
        return bound_state(self.kind, ScatteringModel(a_sc=self.asc)).wavefunction

    def two_body(self) -> TwoBodyState:
        pair = bound_pair(self.kind, self.asc)
        return pair.model_copy(update={"relative": self.wavefunction()})

    def contact(self) -> float:
        psi2 = self.two_body().windowed(2.0 * self.window)
        quad = QuadratureSpec.uniform(-self.window, self.window, 4, 16)
        return contact_from_wavefunction(psi2, self.window, quad)

    def analytic_contact(self) -> float:
        return self.scale**2 * contact_bound(self.asc)

    def momentum(self, k: np.ndarray) -> np.ndarray:
        return self.scale**2 * momentum_bound(self.kind, self.asc, k)

    def obdm(self, z1: float, z1p: float) -> complex:
        return self.scale**2 * obdm_bound(self.kind, self.asc, z1, z1p)

    def momentum_normalization(self) -> float:
        return self.scale**2 * normalization_bound(self.kind, self.asc)


class TrapCorpusState(CorpusState):
    epsilon: float

    @property
    def physical_key(self) -> Tuple[str, float]:
        return "trap", self.epsilon

    @property
    def relative_state(self) -> TrapRelativeState:
        return TrapRelativeState.from_epsilon(self.epsilon, self.kind)

    @property
    def a_sc(self) -> float:
        return self.relative_state.a_sc

    @property
    def window(self) -> float:
        return TRAP_WINDOW

    def _unscaled_wavefunction(self) -> RelativeWavefunction:
        return self.relative_state.wavefunction()

    def two_body(self) -> TwoBodyState:
        pair = TrapTwoBodyState(relative=self.relative_state).to_two_body()
        return pair.model_copy(update={"relative": self.wavefunction()})

    def contact(self) -> float:
        quad = QuadratureSpec.uniform(-TRAP_COM_WINDOW, TRAP_COM_WINDOW, 8, 16)
        return contact_from_wavefunction(self.two_body(), TRAP_CONTACT_WINDOW, quad)

    def analytic_contact(self) -> float:
        return self.scale**2 * contact_ho(self.epsilon)

    def momentum(self, k: np.ndarray) -> np.ndarray:
        grid = build_grid(window=self.window)
        return momentum_distribution(self.two_body(), grid, k).n

    def obdm(self, z1: float, z1p: float) -> complex:
        return one_body_density_matrix(self.two_body(), z1, z1p, window=TRAP_COM_WINDOW)

    def momentum_normalization(self) -> float:
        """(1/2pi) int n dk, with the tail beyond K added analytically.

        The quadrature is cut at two K and the k^-5 remainder of the tail
        expansion is extrapolated away between them.
        """
        core, k_mid, k_max = SETTINGS["norm_k_core"], SETTINGS["norm_k_mid"], SETTINGS["norm_k_max"]
        positive = np.concatenate([
            np.linspace(0.0, core, SETTINGS["norm_k_core_panels"] + 1),
            np.geomspace(core, k_mid, SETTINGS["norm_k_mid_panels"] + 1)[1:],
            np.geomspace(k_mid, k_max, SETTINGS["norm_k_outer_panels"] + 1)[1:],
        ])
        k, weights = panel_rule(np.concatenate([-positive[:0:-1], positive]), SETTINGS["gauss_order"])
        n = self.momentum(k)
        tail = tail_ho(self.kind, self.epsilon)
        factor = self.scale**2
        tail = tail.model_copy(update={"c2": factor * tail.c2, "c3": factor * tail.c3, "c4": factor * tail.c4})

        def truncated(cut):
            inside = np.abs(k) <= cut
            return (float(np.dot(weights[inside], n[inside])) + tail.remainder_beyond(cut)) / (2.0 * np.pi)

        near, far = truncated(k_mid), truncated(k_max)
        power = (k_max / k_mid) ** 5
        total = (power * far - near) / (power - 1.0)
        logger.debug("%s: (1/2pi) int n dk = %.10f (K = %g: %.10f)", self.label, total, k_max, far)
        return total


def default_corpus(scale: float = 1.0, include_bound: bool = True,
                   include_trap: bool = True) -> List[CorpusState]:
    """Bound and trap states for every kind and alpha of the shipped corpus."""
    corpus: List[CorpusState] = []
    alphas = SETTINGS["corpus_alpha"]
    factories = (StatisticsKind.bosonic_anyon, StatisticsKind.fermionic_anyon)
    if include_bound:
        for asc in SETTINGS["corpus_asc"]:
            for alpha in alphas:
                for factory in factories:
                    corpus.append(BoundCorpusState(asc=asc, kind=factory(alpha), scale=scale))
    if include_trap:
        for epsilon in SETTINGS["corpus_epsilon"]:
            for alpha in alphas:
                for factory in factories:
                    corpus.append(TrapCorpusState(epsilon=epsilon, kind=factory(alpha), scale=scale))
    logger.info("corpus: %d states", len(corpus))
    return corpus
