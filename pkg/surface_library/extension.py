'''
Extension of interface quantities off the zero level set, constant along
the normals.
'''
import logging

import numpy as np

from .grid import ScalarField, central_gradient, interface_cells
from .stencils import transport_sweep
from .metrics import curvature_values
from .reinit import smooth_sign

logger = logging.getLogger(__name__)


def extend_velocity(v_interface, phi, sweeps, gradient_floor=1e-8):
    '''
    Transport v away from the interface along the normals of phi by
    integrating

        q_tau + S(phi) * n . grad(q) = 0

    with first order upwinding, for a fixed number of pseudo time steps of
    half a cell.  Cells next to the interface keep their input values.

    :param v_interface: ScalarField (or array) holding the interface values
    :param phi: distance-like ScalarField
    :param sweeps: number of pseudo time steps
    '''
    grid = phi.grid
    h = grid.h

    if isinstance(v_interface, ScalarField):
        q = v_interface.values.copy()
    else:
        q = np.array(v_interface, dtype=np.float64)

    gx, gy, gz = central_gradient(phi.values, h)
    norm = np.maximum(np.sqrt(gx * gx + gy * gy + gz * gz), gradient_floor)

    sign = smooth_sign(phi.values, grid.h_min)
    speeds = [sign * g / norm for g in (gx, gy, gz)]

    fixed = interface_cells(phi.values)
    dtau = 0.5 * grid.h_min

    for _sweep in range(int(sweeps)):
        q = transport_sweep(q, speeds, fixed, h, dtau)

    return ScalarField(grid, q)


def extended_curvature(phi, sweeps, gradient_floor=1e-8):
    '''
    div(n) of phi, clipped to what the grid can resolve and extended off
    the interface.
    '''
    grid = phi.grid
    kappa, _degenerate = curvature_values(phi.values, grid.h, gradient_floor)

    limit = 1.0 / grid.h_min
    kappa = np.clip(kappa, -limit, limit)

    return extend_velocity(kappa, phi, sweeps, gradient_floor)
