import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from pydantic import ValidationError

from anyon1d.exceptions import DomainError, KindMismatch
from anyon1d.models.statistics import StatisticsKind, Variant
from anyon1d.physics import (
    ReferenceKind,
    RelativeWavefunction,
    TwoBodyState,
    anyon_norm,
    anyonize,
    ba_fa_map,
    bare_anyonize,
    exchange_phase,
    exchange_residual,
    reference_function,
)
from anyon1d.physics.statistics import sign

from .strategies import alpha_strategy


def _boson():
    return RelativeWavefunction(func=lambda z: np.exp(-np.abs(z)), kind=StatisticsKind.boson(), label="cusp")


def _fermion():
    return RelativeWavefunction(func=lambda z: np.sign(z) * np.exp(-np.abs(z)), kind=StatisticsKind.fermion(),
                                label="cusp")


class TestStatisticsKind:
    def test_plain_kinds_carry_no_alpha(self):
        with pytest.raises(ValidationError):
            StatisticsKind(variant=Variant.BOSON, alpha=0.3)

    def test_alpha_range(self):
        with pytest.raises(ValidationError):
            StatisticsKind.bosonic_anyon(1.5)

    def test_from_label(self):
        kind = StatisticsKind.from_label("FA", 0.2)
        assert kind.variant is Variant.FERMIONIC_ANYON
        assert kind.family == -1
        assert kind.parent == StatisticsKind.fermion()

    def test_toggled_and_with_alpha(self):
        assert StatisticsKind.boson().toggled() == StatisticsKind.fermion()
        assert StatisticsKind.bosonic_anyon(0.3).toggled() == StatisticsKind.fermionic_anyon(0.3)
        assert StatisticsKind.fermion().with_alpha(0.4) == StatisticsKind.fermionic_anyon(0.4)


class TestExchangeOperator:
    def test_half_alpha_is_minus_i_sign(self):
        z = np.array([-2.0, -0.1, 0.3, 4.0])
        np.testing.assert_allclose(exchange_phase(0.5, z), -1j * np.sign(z), atol=1e-15)
        np.testing.assert_allclose(exchange_phase(-0.5, z), 1j * np.sign(z), atol=1e-15)

    def test_sign_rewritten_through_exchange(self):
        z = np.array([-1.0, 1.0])
        np.testing.assert_allclose(np.sign(z), 1j * exchange_phase(0.5, z), atol=1e-15)
        np.testing.assert_allclose(np.sign(z), -1j * exchange_phase(-0.5, z), atol=1e-15)

    def test_extended_range_only(self):
        assert exchange_phase(2.0, 1.0) == pytest.approx(1.0)
        with pytest.raises(DomainError):
            exchange_phase(2.5, 1.0)

    def test_zero_separation_is_excluded(self):
        with pytest.raises(DomainError):
            sign([1.0, 0.0])
        with pytest.raises(DomainError):
            exchange_phase(0.3, 0.0)

    @given(alpha=alpha_strategy)
    def test_norm_is_a_phase(self, alpha):
        assert abs(anyon_norm(alpha)) == pytest.approx(1.0, abs=1e-15)

    def test_norm_values(self):
        assert anyon_norm(0.0) == pytest.approx(1.0)
        assert anyon_norm(1.0) == pytest.approx(-1j)
        assert anyon_norm(0.5) == pytest.approx((1 - 1j) / math.sqrt(2.0))
        with pytest.raises(DomainError):
            anyon_norm(-0.1)


class TestAnyonization:
    @given(alpha=alpha_strategy)
    @settings(max_examples=40, deadline=None)
    def test_bosonic_anyon_exchange(self, alpha):
        w = anyonize(StatisticsKind.bosonic_anyon(alpha), _boson())
        assert exchange_residual(w, np.logspace(-3, 1, 25)) < 1e-12

    @given(alpha=alpha_strategy)
    @settings(max_examples=40, deadline=None)
    def test_fermionic_anyon_exchange(self, alpha):
        w = anyonize(StatisticsKind.fermionic_anyon(alpha), _fermion())
        assert exchange_residual(w, np.logspace(-3, 1, 25)) < 1e-12

    def test_wrong_parent(self):
        with pytest.raises(KindMismatch):
            anyonize(StatisticsKind.bosonic_anyon(0.3), _fermion())

    def test_alpha_zero_is_the_parent(self):
        z = np.array([-1.0, 0.5])
        w = anyonize(StatisticsKind.bosonic_anyon(0.0), _boson())
        np.testing.assert_allclose(w(z), _boson()(z))

    def test_bare_anyonization_drops_normalization(self):
        z = np.array([-0.7, 0.7])
        bare = bare_anyonize(_boson(), 0.5)(z)
        full = anyonize(StatisticsKind.bosonic_anyon(0.5), _boson())(z)
        np.testing.assert_allclose(full, anyon_norm(0.5) * bare)

    @given(alpha=alpha_strategy)
    @settings(max_examples=25, deadline=None)
    def test_ba_fa_map_toggles_family(self, alpha):
        w = ba_fa_map(anyonize(StatisticsKind.bosonic_anyon(alpha), _boson()))
        assert w.kind == StatisticsKind.fermionic_anyon(alpha)
        assert exchange_residual(w, np.logspace(-3, 1, 25)) < 1e-12


class TestReferenceFunctions:
    def test_boson_rows(self):
        z = np.array([-1.2, 0.4])
        boson = StatisticsKind.boson()
        np.testing.assert_allclose(reference_function(boson, ReferenceKind.REGULAR, 2.0, z),
                                   np.sign(z) * np.sin(2.0 * z))
        np.testing.assert_allclose(reference_function(boson, ReferenceKind.IRREGULAR, 2.0, z), np.cos(2.0 * z))

    @pytest.mark.parametrize("which", list(ReferenceKind))
    def test_reference_functions_obey_exchange(self, anyon_kind, which):
        w = RelativeWavefunction(func=lambda z: reference_function(anyon_kind, which, 1.3, z), kind=anyon_kind)
        assert exchange_residual(w, np.linspace(0.05, 5.0, 30)) < 1e-12

    def test_needs_positive_k(self):
        with pytest.raises(DomainError):
            reference_function(StatisticsKind.boson(), ReferenceKind.REGULAR, 0.0, 1.0)


class TestTwoBodyState:
    def test_translation_invariant_state_needs_a_box(self):
        pair = TwoBodyState(relative=_boson())
        with pytest.raises(DomainError):
            pair(0.1, 0.2)
        psi2 = pair.windowed(4.0)
        assert psi2(0.3, -0.2) == pytest.approx(0.5 * math.exp(-0.5))

    def test_product_form(self):
        pair = TwoBodyState(relative=_boson(), com=lambda big_z: np.exp(-big_z**2), com_quantum_number=0)
        assert pair(0.5, -0.5) == pytest.approx(cmath.exp(-1.0))
        assert pair.kind == StatisticsKind.boson()

    @given(alpha=alpha_strategy)
    @settings(max_examples=30, deadline=None)
    def test_anyon_rows_are_anyonized_parent_rows(self, alpha):
        z = np.array([-3.1, -0.4, 0.05, 1.7])
        for target in (StatisticsKind.bosonic_anyon(alpha), StatisticsKind.fermionic_anyon(alpha)):
            for which in ReferenceKind:
                parent = RelativeWavefunction(
                    func=lambda points, which=which, target=target: reference_function(target.parent, which, 0.8, points),
                    kind=target.parent,
                )
                np.testing.assert_allclose(reference_function(target, which, 0.8, z), anyonize(target, parent)(z),
                                           rtol=1e-13, atol=1e-14)

    def test_bosonic_anyon_at_alpha_one_is_plain_sine(self):
        z = np.array([-2.0, -0.3, 0.3, 2.0])
        regular = reference_function(StatisticsKind.bosonic_anyon(1.0), ReferenceKind.REGULAR, 1.3, z)
        np.testing.assert_allclose(regular, np.sin(1.3 * z), atol=1e-15)
