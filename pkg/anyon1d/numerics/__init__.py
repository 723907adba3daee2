from .limits import one_sided_limit
from .quadrature import (
    QuadratureScheme,
    QuadratureSpec,
    gauss_legendre,
    integrate,
    integrate_converged,
    panel_rule,
)
from .roots import RootBracket, find_root
from .special import (
    gamma,
    gamma_ratio,
    hermite,
    hermite_function,
    kummer_u,
    pochhammer,
    reciprocal_gamma,
)

__all__ = [
    'one_sided_limit',
    'QuadratureScheme',
    'QuadratureSpec',
    'gauss_legendre',
    'integrate',
    'integrate_converged',
    'panel_rule',
    'RootBracket',
    'find_root',
    'gamma',
    'gamma_ratio',
    'hermite',
    'hermite_function',
    'kummer_u',
    'pochhammer',
    'reciprocal_gamma',
]
