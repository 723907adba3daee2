from .observables import (
    ExtremumKind,
    ExtremumRecord,
    PropertyReport,
    TailCoefficients,
    Universality,
    classify,
)
from .statistics import StatisticsKind, Variant

__all__ = [
    'ExtremumKind',
    'ExtremumRecord',
    'PropertyReport',
    'TailCoefficients',
    'Universality',
    'classify',
    'StatisticsKind',
    'Variant',
]
