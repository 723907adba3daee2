import numpy as np
import pytest

from anyon1d.models.statistics import StatisticsKind
from anyon1d.properties.corpus import default_corpus

ALPHAS = (0.0, 0.25, 0.5, 0.75, 1.0)


def anyon_kinds(alphas=ALPHAS):
    kinds = []
    for alpha in alphas:
        kinds.append(StatisticsKind.bosonic_anyon(alpha))
        kinds.append(StatisticsKind.fermionic_anyon(alpha))
    return kinds


@pytest.fixture(params=anyon_kinds(), ids=lambda kind: kind.label)
def anyon_kind(request):
    return request.param


@pytest.fixture(scope="session")
def bound_corpus():
    return default_corpus(include_trap=False)


@pytest.fixture
def positive_z():
    return np.logspace(-3, 1, 40)
