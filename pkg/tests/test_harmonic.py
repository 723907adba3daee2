import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from pydantic import ValidationError

from anyon1d.exceptions import (
    BranchOutOfRange,
    DomainError,
    KindMismatch,
    NumericFailure,
    ZeroScatteringLength,
)
from anyon1d.models.statistics import StatisticsKind
from anyon1d.numerics import QuadratureSpec, integrate
from anyon1d.physics import (
    TrapRelativeState,
    TrapTwoBodyState,
    asc_from_epsilon,
    branch_bounds,
    com_wavefunction,
    contact_ho,
    contact_over_asc,
    contact_over_asc_sq,
    epsilon_from_asc,
    exchange_residual,
    inverse_asc,
    k2_coefficient,
    limit_contact,
    limit_normalization,
    relative_wavefunction,
    short_distance_expansion,
    tail_ho,
)
from anyon1d.properties.corpus import TrapCorpusState

SQRT_2_OVER_PI = math.sqrt(2.0 / math.pi)


class TestSpectrum:
    def test_attractive_ground_state(self):
        assert asc_from_epsilon(-0.5) == pytest.approx(math.sqrt(math.pi / 2.0), abs=1e-10)
        assert epsilon_from_asc(math.sqrt(math.pi / 2.0), 0) == pytest.approx(-0.5, abs=1e-10)

    @pytest.mark.parametrize("branch", [0, 1, 2, 3])
    def test_limit_families(self, branch):
        assert epsilon_from_asc(math.inf, branch) == pytest.approx(0.5 + 2 * branch, abs=1e-10)
        assert epsilon_from_asc(0.0, branch) == pytest.approx(1.5 + 2 * branch, abs=1e-10)
        assert asc_from_epsilon(0.5 + 2 * branch) == math.inf
        assert asc_from_epsilon(1.5 + 2 * branch) == 0.0

    def test_inverse_scattering_length(self):
        assert inverse_asc(0.5) == 0.0
        assert inverse_asc(-0.5) == pytest.approx(1.0 / math.sqrt(math.pi / 2.0), rel=1e-13)
        with pytest.raises(ZeroScatteringLength):
            inverse_asc(1.5)

    @given(epsilon=st.floats(min_value=-6.0, max_value=1.4))
    @settings(max_examples=40, deadline=None)
    def test_round_trip_ground_branch(self, epsilon):
        a_sc = asc_from_epsilon(epsilon)
        assert epsilon_from_asc(a_sc, 0) == pytest.approx(epsilon, abs=1e-8)

    @given(epsilon=st.floats(min_value=1.6, max_value=3.4))
    @settings(max_examples=40, deadline=None)
    def test_round_trip_first_branch(self, epsilon):
        a_sc = asc_from_epsilon(epsilon)
        assert epsilon_from_asc(a_sc, 1) == pytest.approx(epsilon, abs=1e-8)

    def test_branch_bounds(self):
        assert branch_bounds(0) == (-math.inf, 1.5)
        assert branch_bounds(2) == (3.5, 5.5)
        for branch in (-1, 31):
            with pytest.raises(BranchOutOfRange):
                branch_bounds(branch)

    def test_repulsive_scattering_lengths_sit_above_the_noninteracting_level(self):
        assert 0.5 < epsilon_from_asc(-1.0, 0) < 1.5
        assert -math.inf < epsilon_from_asc(0.3, 0) < 0.5

    @pytest.mark.parametrize("a_sc", [0.05, 0.03, 1e-4])
    def test_small_scattering_lengths_resolve(self, a_sc):
        epsilon = epsilon_from_asc(a_sc, 0)
        assert math.isfinite(epsilon)
        assert epsilon < -0.5 / a_sc**2
        assert inverse_asc(epsilon) == pytest.approx(1.0 / a_sc, rel=1e-10)

    def test_deep_molecular_energy(self):
        a_sc = asc_from_epsilon(-400.0)
        assert 0.0 < a_sc < 0.06
        assert a_sc * inverse_asc(-400.0) == pytest.approx(1.0, rel=1e-12)

    def test_profile_outside_supported_range_is_a_numeric_failure(self):
        with pytest.raises(NumericFailure, match="radial profile"):
            TrapRelativeState.from_asc(0.03, 0, StatisticsKind.boson())


class TestRelativeStates:
    @pytest.mark.parametrize("epsilon", [0.5, 1.5, 2.5, 3.5])
    def test_closed_form_normalization(self, epsilon):
        state = TrapRelativeState.from_epsilon(epsilon, StatisticsKind.boson())
        assert state.norm == pytest.approx(limit_normalization(epsilon), rel=1e-8)

    def test_noninteracting_pair_is_gaussian(self):
        z = np.array([-3.0, -0.2, 0.7, 2.5])
        state = TrapRelativeState.from_epsilon(0.5, StatisticsKind.boson())
        expected = (2.0 * math.pi) ** -0.25 * np.exp(-z**2 / 4.0)
        np.testing.assert_allclose(np.real(relative_wavefunction(state, z)), expected, rtol=1e-8)

    def test_hard_core_pair_is_odd_gaussian_times_sign(self):
        z = np.array([-2.0, -0.5, 0.5, 2.0])
        fermion = TrapRelativeState.from_epsilon(1.5, StatisticsKind.fermion())
        values = np.real(relative_wavefunction(fermion, z))
        np.testing.assert_allclose(values, -values[::-1], atol=1e-14)
        expected = (2.0 / math.pi) ** 0.25 * z / math.sqrt(2.0) * np.exp(-z**2 / 4.0)
        np.testing.assert_allclose(values, expected, rtol=1e-8)

    @pytest.mark.parametrize("epsilon", [-0.5, 0.9])
    def test_anyonic_states_obey_exchange(self, anyon_kind, epsilon, positive_z):
        w = TrapRelativeState.from_epsilon(epsilon, anyon_kind).wavefunction()
        assert exchange_residual(w, positive_z) < 1e-12

    @pytest.mark.parametrize("epsilon", [-0.5, 0.9, 2.5])
    def test_solves_the_relative_equation(self, epsilon):
        h = 2e-3
        side = np.linspace(0.2, 5.0, 25)
        z = np.concatenate([-side[::-1], side])
        state = TrapRelativeState.from_epsilon(epsilon, StatisticsKind.boson())

        def psi(points):
            return np.real(relative_wavefunction(state, points))

        second = (psi(z + h) - 2.0 * psi(z) + psi(z - h)) / h**2
        residual = -second + 0.25 * z**2 * psi(z) - epsilon * psi(z)
        assert np.max(np.abs(residual)) < 1e-5 * np.max(np.abs(psi(z)))

    def test_inconsistent_indices_rejected(self):
        with pytest.raises(ValidationError):
            TrapRelativeState(epsilon=0.5, nu_plus=0.3, nu_minus=-0.2, a_sc=math.inf, norm=1.0,
                              kind=StatisticsKind.boson())

    def test_from_asc(self):
        state = TrapRelativeState.from_asc(math.inf, 1, StatisticsKind.bosonic_anyon(0.2))
        assert state.epsilon == pytest.approx(2.5)
        assert state.nu_plus == pytest.approx(1.0)
        assert state.nu_minus == pytest.approx(0.5)


class TestCenterOfMass:
    @pytest.mark.parametrize("m", [0, 1, 3, 10])
    def test_normalized(self, m):
        spec = QuadratureSpec.uniform(-8.0, 8.0, 16, 16)
        assert integrate(lambda big_z: com_wavefunction(m, big_z) ** 2, spec).real == pytest.approx(1.0, rel=1e-12)

    def test_orthogonal(self):
        spec = QuadratureSpec.uniform(-8.0, 8.0, 16, 16)
        overlap = integrate(lambda big_z: com_wavefunction(1, big_z) * com_wavefunction(3, big_z), spec).real
        assert overlap == pytest.approx(0.0, abs=1e-13)

    def test_range(self):
        with pytest.raises(DomainError):
            com_wavefunction(201, 0.0)

    def test_total_energy(self):
        relative = TrapRelativeState.from_epsilon(-0.5, StatisticsKind.boson())
        assert TrapTwoBodyState(com_quantum_number=2, relative=relative).energy == pytest.approx(2.0)


class TestContacts:
    def test_noninteracting_contact(self):
        assert contact_ho(0.5) == pytest.approx(SQRT_2_OVER_PI, rel=1e-8)
        assert contact_ho(0.5) == pytest.approx(limit_contact(0.5), rel=1e-8)
        assert contact_over_asc(0.5) == 0.0

    def test_hard_core_contact(self):
        assert contact_ho(1.5) == 0.0
        assert contact_over_asc_sq(1.5) == pytest.approx(limit_contact(1.5), rel=1e-8)
        assert contact_over_asc(1.5) == 0.0

    @pytest.mark.parametrize("epsilon", [2.5, 3.5])
    def test_excited_limits(self, epsilon):
        closed = limit_contact(epsilon)
        value = contact_ho(epsilon) if epsilon == 2.5 else contact_over_asc_sq(epsilon)
        assert value == pytest.approx(closed, rel=1e-8)

    @pytest.mark.parametrize("epsilon", [-0.5, -1.3, 0.9])
    def test_contact_ratios_are_consistent(self, epsilon):
        a_sc = asc_from_epsilon(epsilon)
        assert contact_over_asc(epsilon) == pytest.approx(contact_ho(epsilon) / a_sc, rel=1e-12)
        assert contact_over_asc_sq(epsilon) == pytest.approx(contact_ho(epsilon) / a_sc**2, rel=1e-12)

    @pytest.mark.parametrize("epsilon", [-0.5, -1.3, 0.9])
    def test_coincidence_route(self, epsilon):
        state = TrapCorpusState(epsilon=epsilon, kind=StatisticsKind.bosonic_anyon(0.3))
        assert state.contact() == pytest.approx(contact_ho(epsilon), rel=1e-7)

    def test_k2(self):
        assert k2_coefficient(0.5) == pytest.approx(1.75)
        assert k2_coefficient(-0.5) == pytest.approx(-0.25 * math.pi / 2.0)


class TestTails:
    def test_half_anyon_noninteracting(self):
        tail = tail_ho(StatisticsKind.bosonic_anyon(0.5), 0.5)
        assert tail.c2 == pytest.approx(2.0 * SQRT_2_OVER_PI, rel=1e-8)
        assert tail.c3 == 0.0

    def test_hard_core_has_no_k3_term(self):
        assert tail_ho(StatisticsKind.bosonic_anyon(0.5), 1.5).c3 == 0.0

    def test_family_swap(self):
        ba = tail_ho(StatisticsKind.bosonic_anyon(0.3), -0.5)
        fa = tail_ho(StatisticsKind.fermionic_anyon(0.7), -0.5)
        assert fa.c2 == pytest.approx(ba.c2, rel=1e-12)
        assert fa.c3 == pytest.approx(-ba.c3, rel=1e-12)
        assert fa.c4 == pytest.approx(ba.c4, rel=1e-12)

    def test_boson_tail_is_universal(self):
        tail = tail_ho(StatisticsKind.boson(), -0.5)
        assert tail.c2 == 0.0
        assert tail.c4 == pytest.approx(4.0 * contact_over_asc_sq(-0.5), rel=1e-12)

    def test_excited_center_of_mass_rejected(self):
        with pytest.raises(DomainError):
            tail_ho(StatisticsKind.boson(), 0.5, com_quantum_number=1)


class TestShortDistance:
    @pytest.mark.parametrize("z2", [0.0, 0.5, 1.0])
    @pytest.mark.parametrize("alpha", [0.0, 0.5])
    def test_matches_the_assembled_product(self, z2, alpha):
        state = TrapTwoBodyState(relative=TrapRelativeState.from_epsilon(-0.5, StatisticsKind.bosonic_anyon(alpha)))
        coefficients = short_distance_expansion(state, z2)
        xi = np.array([-1e-2, -3e-3, 3e-3, 1e-2])
        direct = com_wavefunction(0, z2 + 0.5 * xi) * relative_wavefunction(state.relative, xi)
        np.testing.assert_allclose(coefficients.evaluate(xi), direct, rtol=1e-5)

    def test_cusp_ratio_is_the_boundary_condition(self):
        state = TrapTwoBodyState(relative=TrapRelativeState.from_epsilon(-0.5, StatisticsKind.boson()))
        coefficients = short_distance_expansion(state, 0.3)
        assert coefficients.abs_xi / coefficients.constant == pytest.approx(-inverse_asc(-0.5), rel=1e-14)

    def test_restrictions(self):
        fermionic = TrapTwoBodyState(relative=TrapRelativeState.from_epsilon(-0.5, StatisticsKind.fermion()))
        with pytest.raises(KindMismatch):
            short_distance_expansion(fermionic, 0.0)
        relative = TrapRelativeState.from_epsilon(-0.5, StatisticsKind.boson())
        with pytest.raises(DomainError):
            short_distance_expansion(TrapTwoBodyState(relative=relative), 5.0)
        with pytest.raises(DomainError):
            short_distance_expansion(TrapTwoBodyState(com_quantum_number=1, relative=relative), 0.0)
