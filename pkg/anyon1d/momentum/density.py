from typing import Callable

import numpy as np

from ..config import SETTINGS
from ..numerics.quadrature import QuadratureSpec, integrate_converged


def one_body_density_matrix(psi2: Callable, z1: float, z1p: float, window: float,
                            panels: int = 16, order: int = None) -> complex:
    """rho(z1, z1') = 2 int dz2 Psi*(z1', z2) Psi(z1, z2) over [-window, window].

    The z2 panels are split on the cusp lines z2 = z1 and z2 = z1'.
    """
    order = SETTINGS["gauss_order"] if order is None else order
    spec = QuadratureSpec.uniform(-window, window, panels, order).with_breakpoints([z1, z1p])

    def integrand(z2):
        return np.conj(psi2(z1p, z2)) * psi2(z1, z2)

    return 2.0 * integrate_converged(integrand, spec)
