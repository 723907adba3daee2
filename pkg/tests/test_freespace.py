import math

import numpy as np
import pytest
from hypothesis import given, settings
from scipy.optimize import minimize_scalar

from anyon1d.exceptions import DomainError, NonNormalizedWarning
from anyon1d.models.observables import ExtremumKind, Universality
from anyon1d.models.statistics import StatisticsKind
from anyon1d.numerics import QuadratureSpec
from anyon1d.physics import (
    ScatteringModel,
    bound_pair,
    bound_state,
    contact_bound,
    contact_from_wavefunction,
    extrema_bound,
    momentum_bound,
    normalization_bound,
    obdm_bound,
    obdm_numeric,
    tail_bound,
)

from .conftest import anyon_kinds
from .strategies import alpha_strategy, asc_strategy

SWEEP = [round(0.1 * i, 1) for i in range(1, 10)]


def _argmax(kind, a_sc, location):
    half_width = 0.5 * abs(location) + 0.05
    result = minimize_scalar(
        lambda k: -momentum_bound(kind, a_sc, k),
        bounds=(location - half_width, location + half_width),
        method="bounded",
        options={"xatol": 1e-12},
    )
    return result.x, -result.fun


class TestDensityMatrix:
    def test_diagonal_is_one(self, anyon_kind):
        assert obdm_bound(anyon_kind, 1.7, 0.3, 0.3) == pytest.approx(1.0, abs=1e-15)

    def test_boson_value(self):
        value = obdm_bound(StatisticsKind.bosonic_anyon(0.0), 1.0, 0.5, -0.5)
        assert value == pytest.approx(2.0 * math.exp(-1.0), rel=1e-14)

    def test_half_anyon_value(self):
        value = obdm_bound(StatisticsKind.bosonic_anyon(0.5), 1.0, 0.5, -0.5)
        assert value == pytest.approx(math.exp(-1.0) * (1.0 + 1j), rel=1e-14)

    def test_hermitian(self, anyon_kind):
        z1 = np.linspace(-3.0, 3.0, 13)
        z1p = 0.4 - z1
        np.testing.assert_allclose(obdm_bound(anyon_kind, 1.2, z1, z1p),
                                   np.conj(obdm_bound(anyon_kind, 1.2, z1p, z1)), atol=1e-15)

    @pytest.mark.parametrize("alpha", [0.0, 0.3, 0.5, 1.0])
    def test_overlap_route(self, alpha):
        kind = StatisticsKind.bosonic_anyon(alpha)
        psi = bound_state(kind, ScatteringModel(a_sc=1.0)).wavefunction
        quad = QuadratureSpec.uniform(-40.0, 40.0, 32, 16)
        for z1, z1p in [(0.5, -0.5), (1.3, 0.2), (-2.0, 1.0)]:
            numeric = obdm_numeric(psi, z1, z1p, quad)
            assert numeric == pytest.approx(obdm_bound(kind, 1.0, z1, z1p), rel=1e-9, abs=1e-12)

    def test_requires_positive_asc(self):
        with pytest.raises(DomainError):
            obdm_bound(StatisticsKind.boson(), -1.0, 0.0, 1.0)


class TestMomentumDistribution:
    def test_boson_peak(self):
        assert momentum_bound(StatisticsKind.boson(), 1.0, 0.0) == pytest.approx(8.0, abs=1e-12)

    def test_fully_anyonic_extrema(self):
        records = extrema_bound(StatisticsKind.bosonic_anyon(1.0), 1.0)
        assert [r.value for r in records] == pytest.approx([2.0, 2.0], abs=1e-12)

    def test_half_anyon_global_maximum(self):
        global_max, local_max = extrema_bound(StatisticsKind.bosonic_anyon(0.5), 1.0)
        assert global_max.which is ExtremumKind.GLOBAL_MAX
        assert global_max.location_k == pytest.approx(math.tan(math.pi / 8), rel=1e-14)
        assert global_max.value == pytest.approx(8.0 * math.cos(math.pi / 8) ** 4, rel=1e-14)
        assert local_max.which is ExtremumKind.LOCAL_MAX

    def test_degenerate_local_maximum(self):
        assert extrema_bound(StatisticsKind.bosonic_anyon(0.0), 1.0)[1].location_k == -math.inf
        assert extrema_bound(StatisticsKind.fermionic_anyon(1.0), 1.0)[1].location_k == math.inf

    @pytest.mark.parametrize("kind", anyon_kinds(SWEEP), ids=lambda kind: kind.label)
    def test_extrema_match_direct_maximization(self, kind):
        a_sc = 1.3
        records = extrema_bound(kind, a_sc)
        for record in records:
            location, value = _argmax(kind, a_sc, record.location_k)
            assert location == pytest.approx(record.location_k, rel=1e-6)
            assert value == pytest.approx(record.value, rel=1e-9)
            assert momentum_bound(kind, a_sc, record.location_k) == pytest.approx(record.value, rel=1e-12)
        assert records[0].value >= records[1].value

    @given(alpha=alpha_strategy)
    @settings(max_examples=30, deadline=None)
    def test_ba_fa_mirror(self, alpha):
        k = np.linspace(-6.0, 6.0, 25)
        np.testing.assert_allclose(
            momentum_bound(StatisticsKind.bosonic_anyon(alpha), 1.0, k),
            momentum_bound(StatisticsKind.fermionic_anyon(1.0 - alpha), 1.0, -k),
            rtol=1e-12, atol=1e-14,
        )

    @given(alpha=alpha_strategy, a_sc=asc_strategy)
    @settings(max_examples=25, deadline=None)
    def test_normalization(self, alpha, a_sc):
        for kind in (StatisticsKind.bosonic_anyon(alpha), StatisticsKind.fermionic_anyon(alpha)):
            assert normalization_bound(kind, a_sc) == pytest.approx(2.0, abs=1e-8)


class TestTail:
    def test_contact(self):
        assert contact_bound(1.0) == 2.0
        assert contact_bound(4.0) == 0.5

    def test_fermionic_half_anyon(self):
        tail = tail_bound(StatisticsKind.fermionic_anyon(0.5), 2.0)
        assert (tail.c2, tail.c3, tail.c4) == pytest.approx((2.0, -2.0, -0.5), abs=1e-14)
        assert tail.universal_flags[2] is Universality.MIXED

    def test_bosonic_half_anyon(self):
        tail = tail_bound(StatisticsKind.bosonic_anyon(0.5), 1.0)
        assert (tail.c2, tail.c3, tail.c4) == pytest.approx((4.0, 8.0, -4.0), abs=1e-14)

    def test_boson_has_only_the_universal_k4_term(self):
        tail = tail_bound(StatisticsKind.boson(), 1.0)
        assert tail.universal_flags == (Universality.ABSENT, Universality.ABSENT, Universality.UNIVERSAL)
        assert tail.c4 == pytest.approx(8.0)

    @pytest.mark.parametrize("kind", anyon_kinds((0.25, 0.5, 0.75)), ids=lambda kind: kind.label)
    def test_tail_matches_large_k(self, kind):
        tail = tail_bound(kind, 1.0)
        for k in (1e4, -1e4):
            n = momentum_bound(kind, 1.0, k)
            assert (n - tail.c2 / k**2 - tail.c3 / k**3) * k**4 == pytest.approx(tail.c4, rel=1e-3, abs=1e-3)


class TestNumericalContact:
    @pytest.mark.parametrize("kind", anyon_kinds((0.0, 0.5, 1.0)), ids=lambda kind: kind.label)
    def test_contact_from_boxed_pair(self, kind):
        a_sc, window = 1.0, 40.0
        psi2 = bound_pair(kind, a_sc).windowed(2.0 * window)
        quad = QuadratureSpec.uniform(-window, window, 4, 16)
        assert contact_from_wavefunction(psi2, window, quad) == pytest.approx(contact_bound(a_sc), rel=1e-8)

    def test_unnormalized_state_warns(self):
        psi2 = bound_pair(StatisticsKind.boson(), 1.0).windowed(20.0)
        quad = QuadratureSpec.uniform(-40.0, 40.0, 4, 16)
        with pytest.warns(NonNormalizedWarning):
            contact_from_wavefunction(psi2, 40.0, quad)
