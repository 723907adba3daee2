from .freespace import (
    bound_pair,
    contact_bound,
    contact_from_wavefunction,
    extrema_bound,
    momentum_bound,
    normalization_bound,
    obdm_bound,
    obdm_numeric,
    tail_bound,
)
from .harmonic import (
    ShortDistanceCoefficients,
    TrapRelativeState,
    TrapTwoBodyState,
    asc_from_epsilon,
    branch_bounds,
    com_wavefunction,
    contact_ho,
    contact_over_asc,
    contact_over_asc_sq,
    epsilon_from_asc,
    inverse_asc,
    k2_coefficient,
    limit_contact,
    limit_normalization,
    relative_wavefunction,
    short_distance_expansion,
    tail_ho,
)
from .statistics import (
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
from .zerorange import (
    BoundState,
    ScatteringModel,
    boundary_residual,
    bound_state,
    continued_tan_phase_shift,
    couplings,
    outside_solution,
    tan_phase_shift,
)

__all__ = [
    'bound_pair',
    'contact_bound',
    'contact_from_wavefunction',
    'extrema_bound',
    'momentum_bound',
    'normalization_bound',
    'obdm_bound',
    'obdm_numeric',
    'tail_bound',
    'ShortDistanceCoefficients',
    'TrapRelativeState',
    'TrapTwoBodyState',
    'asc_from_epsilon',
    'branch_bounds',
    'com_wavefunction',
    'contact_ho',
    'contact_over_asc',
    'contact_over_asc_sq',
    'epsilon_from_asc',
    'inverse_asc',
    'k2_coefficient',
    'limit_contact',
    'limit_normalization',
    'relative_wavefunction',
    'short_distance_expansion',
    'tail_ho',
    'ReferenceKind',
    'RelativeWavefunction',
    'TwoBodyState',
    'anyon_norm',
    'anyonize',
    'ba_fa_map',
    'bare_anyonize',
    'exchange_phase',
    'exchange_residual',
    'reference_function',
    'BoundState',
    'ScatteringModel',
    'boundary_residual',
    'bound_state',
    'continued_tan_phase_shift',
    'couplings',
    'outside_solution',
    'tan_phase_shift',
]
