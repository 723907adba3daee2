import logging
import math
from collections import defaultdict
from typing import Dict, List, Sequence, Tuple

import numpy as np

from ..config import SETTINGS
from ..exceptions import ComplexParent, DomainError
from ..models.observables import PropertyReport
from ..models.statistics import StatisticsKind
from ..physics.statistics import RelativeWavefunction, bare_anyonize, exchange_residual
from ..physics.zerorange import ScatteringModel, boundary_residual
from .corpus import CorpusState

logger = logging.getLogger(__name__)

REAL_PARENT_TOL = 1e-14


def z_samples() -> np.ndarray:
    """Log-spaced positive separations mirrored to negative ones."""
    lo, hi = SETTINGS["z_sample_range"]
    positive = np.logspace(math.log10(lo), math.log10(hi), SETTINGS["z_samples"])
    return np.concatenate((-positive[::-1], positive))


def k_samples() -> np.ndarray:
    """Symmetric momentum samples that never include k = 0."""
    k_max = SETTINGS["k_sample_max"]
    return np.linspace(-k_max, k_max, SETTINGS["k_samples"])


def _relative_sup(lhs, rhs) -> float:
    lhs, rhs = np.asarray(lhs), np.asarray(rhs)
    scale = max(float(np.max(np.abs(lhs))), 1e-300)
    return float(np.max(np.abs(lhs - rhs))) / scale


def _require_real(w: RelativeWavefunction, z: np.ndarray) -> None:
    values = w(z)
    if np.max(np.abs(np.imag(values))) > REAL_PARENT_TOL * np.max(np.abs(values)):
        raise ComplexParent(f"parent {w.kind.label} of {w.label} is not real-valued")


def _families(state: CorpusState) -> Tuple[RelativeWavefunction, RelativeWavefunction]:
    """(parent of the state's own family, parent of the other family)."""
    boson, fermion = state.parent(True), state.parent(False)
    return (boson, fermion) if state.kind.is_bosonic else (fermion, boson)


def _mirror_kind(kind: StatisticsKind) -> StatisticsKind:
    return kind.toggled().with_alpha(1.0 - kind.alpha)


class PropertyCheck:
    """One relation evaluated over a corpus; the report keeps the sup residual."""

    name = ""

    @property
    def tolerance(self) -> float:
        return SETTINGS["tolerances"][self.name]

    def evaluate(self, corpus: Sequence[CorpusState]) -> Tuple[float, Dict[str, float], int]:
        raise NotImplementedError

    def run(self, corpus: Sequence[CorpusState]) -> PropertyReport:
        if not corpus:
            raise DomainError(f"{self.name}: corpus is empty")
        residual, details, tested = self.evaluate(corpus)
        report = PropertyReport(
            name=self.name,
            max_residual=residual,
            tolerance=self.tolerance,
            states_tested=tested,
            details=details,
        )
        if not report.passed:
            logger.warning("%s failed: residual %.3e > %.1e", self.name, residual, self.tolerance)
        return report


class FormalShiftCheck(PropertyCheck):
    """Psi_{alpha,+-} = -+ i Psi_{-+, alpha +- 1} on the phase-only construction."""

    name = "formal_shift"

    def evaluate(self, corpus):
        z = z_samples()
        worst = {"shift_up": 0.0, "shift_down": 0.0}
        for state in corpus:
            same, other = _families(state)
            alpha = state.kind.alpha
            lhs = bare_anyonize(same, alpha)(z)
            up = -1j * bare_anyonize(other, alpha + 1.0)(z)
            down = 1j * bare_anyonize(other, alpha - 1.0)(z)
            worst["shift_up"] = max(worst["shift_up"], _relative_sup(lhs, up))
            worst["shift_down"] = max(worst["shift_down"], _relative_sup(lhs, down))
        return max(worst.values()), worst, len(corpus)


class ChiralMirrorCheck(PropertyCheck):
    """Psi_{alpha,+-} = i [Psi_{1-alpha,-+}]* and its consequences for rho and n(k)."""

    name = "chiral_mirror"

    def __init__(self, sign_flip: bool = False):
        self.sign_flip = sign_flip

    def evaluate(self, corpus):
        z = z_samples()
        k = k_samples()
        worst = {"wavefunction": 0.0, "obdm": 0.0, "momentum": 0.0}
        for state in corpus:
            same, other = _families(state)
            _require_real(same, z)
            _require_real(other, z)

            alpha = state.kind.alpha
            own = bare_anyonize(same, alpha)(z)
            partner = bare_anyonize(other, 1.0 - alpha)(z)
            if self.sign_flip:
                if state.kind.is_bosonic:
                    partner = -partner
                else:
                    own = -own
            worst["wavefunction"] = max(worst["wavefunction"], _relative_sup(own, 1j * np.conj(partner)))

            mirror = state.with_kind(_mirror_kind(state.kind))
            length = state.a_sc if 0.0 < state.a_sc < math.inf else 1.0
            points = [(s * length, -s * length) for s in (0.25, 1.0, 2.0)]
            rho = [state.obdm(z1, z1p) for z1, z1p in points]
            rho_mirror = [mirror.obdm(z1, z1p) for z1, z1p in points]
            worst["obdm"] = max(worst["obdm"], _relative_sup(rho, np.conj(rho_mirror)))

            worst["momentum"] = max(worst["momentum"], _relative_sup(state.momentum(k), mirror.momentum(-k)))
        return max(worst.values()), worst, len(corpus)


class ContactIndependenceCheck(PropertyCheck):
    """Boson, fermion, BA and FA versions of one pair share the same contact."""

    name = "contacts"

    def evaluate(self, corpus):
        groups = defaultdict(list)
        for state in corpus:
            groups[(state.physical_key, state.kind.alpha, state.scale)].append(state)

        worst_spread, worst_analytic, tested = 0.0, 0.0, 0
        for (_, alpha, _), members in groups.items():
            state = members[0]
            kinds = [
                StatisticsKind.boson(),
                StatisticsKind.fermion(),
                StatisticsKind.bosonic_anyon(alpha),
                StatisticsKind.fermionic_anyon(alpha),
            ]
            contacts = np.array([state.with_kind(kind).contact() for kind in kinds])
            mean = float(np.mean(contacts))
            spread = float(np.max(contacts) - np.min(contacts)) / max(mean, 1.0)
            analytic = state.analytic_contact()
            worst_spread = max(worst_spread, spread)
            worst_analytic = max(worst_analytic, abs(mean - analytic) / max(analytic, 1.0))
            tested += len(kinds)
            logger.debug("%s: contacts %s", state.label, contacts)
        return worst_spread, {"spread": worst_spread, "analytic_deviation": worst_analytic}, tested


class NormalizationCheck(PropertyCheck):
    """int rho(z, z) dz = 2 and (1/2pi) int n(k) dk = 2."""

    name = "normalizations"

    def evaluate(self, corpus):
        worst = {"density": 0.0, "momentum": 0.0}
        for state in corpus:
            density = state.density_normalization()
            momentum = state.momentum_normalization()
            worst["density"] = max(worst["density"], abs(density - 2.0))
            worst["momentum"] = max(worst["momentum"], abs(momentum - 2.0))
            logger.debug("%s: density %.12f momentum %.12f", state.label, density, momentum)
        return max(worst.values()), worst, len(corpus)


class ExchangeCheck(PropertyCheck):
    """psi(-z) = +-S_alpha(z) psi(z)."""

    name = "exchange"

    def evaluate(self, corpus):
        z = z_samples()
        positive = z[z > 0.0]
        residual = 0.0
        for state in corpus:
            w = state.wavefunction()
            scale = max(float(np.max(np.abs(w(z)))), 1e-300)
            residual = max(residual, exchange_residual(w, positive) / scale)
        return residual, {"exchange": residual}, len(corpus)


class BoundaryConditionCheck(PropertyCheck):
    """Zero-range boundary condition at contact; hard-core states are skipped."""

    name = "boundary"

    def evaluate(self, corpus):
        residual, tested = 0.0, 0
        for state in corpus:
            a_sc = state.a_sc
            if a_sc == 0.0:
                continue
            residual = max(residual, boundary_residual(state.wavefunction(), ScatteringModel(a_sc=a_sc)))
            tested += 1
        return residual, {"boundary": residual}, tested


CHECKS = {
    check.name: check
    for check in (
        FormalShiftCheck,
        ChiralMirrorCheck,
        ContactIndependenceCheck,
        NormalizationCheck,
        ExchangeCheck,
        BoundaryConditionCheck,
    )
}


def build_checks(suites: Sequence[str] = None, sign_flip: bool = False) -> List[PropertyCheck]:
    names = list(CHECKS) if not suites else list(suites)
    unknown = [name for name in names if name not in CHECKS]
    if unknown:
        raise DomainError(f"unknown property suites: {', '.join(unknown)}")
    return [
        ChiralMirrorCheck(sign_flip=sign_flip) if name == ChiralMirrorCheck.name else CHECKS[name]()
        for name in names
    ]


def verify_formal_shift(corpus: Sequence[CorpusState]) -> PropertyReport:
    return FormalShiftCheck().run(corpus)


def verify_chiral_mirror(corpus: Sequence[CorpusState], sign_flip: bool = False) -> PropertyReport:
    return ChiralMirrorCheck(sign_flip=sign_flip).run(corpus)


def verify_contact_independence(corpus: Sequence[CorpusState]) -> PropertyReport:
    return ContactIndependenceCheck().run(corpus)


def verify_normalizations(corpus: Sequence[CorpusState]) -> PropertyReport:
    return NormalizationCheck().run(corpus)


def verify_exchange(corpus: Sequence[CorpusState]) -> PropertyReport:
    return ExchangeCheck().run(corpus)


def verify_boundary_conditions(corpus: Sequence[CorpusState]) -> PropertyReport:
    return BoundaryConditionCheck().run(corpus)
