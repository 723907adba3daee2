from .density import one_body_density_matrix
from .distribution import MomentumDistribution, momentum_distribution
from .grid import NonUniformGrid, build_grid
from .tails import FitMethod, TailFit, fit_tail, theta_xi_upsilon, universal_c2_c3

__all__ = [
    'one_body_density_matrix',
    'MomentumDistribution',
    'momentum_distribution',
    'NonUniformGrid',
    'build_grid',
    'FitMethod',
    'TailFit',
    'fit_tail',
    'theta_xi_upsilon',
    'universal_c2_c3',
]
