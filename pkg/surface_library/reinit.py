'''
Reinitialization: restore phi to an approximate signed distance function
in a band around its zero level set, without moving the zero level set.

We integrate

    phi_tau + S(phi_0) * (|grad(phi)| - 1) = 0

in pseudo time with Godunov upwinding.  Cells next to the interface are
not transported; they are relaxed toward a subcell estimate of their
distance to the interface computed once from phi_0, which keeps the zero
crossings anchored.  Outside the band, phi is clamped to +/- band_width.
'''
import logging

import numpy as np

from .grid import (ScalarField, godunov_norm, central_norm,
                   forward_difference, backward_difference, interface_cells)
from .errors import EmptySurface

logger = logging.getLogger(__name__)


class ReinitParams(object):
    '''
    :param band_width: half width of the band kept distance-like
    :param pseudo_time_step: step in pseudo time, at most min(h)
    :param max_sweeps=None: defaults to 2 * band_width / pseudo_time_step
    :param convergence_tol=1e-2: tolerance on mean(| |grad(phi)| - 1 |)
                                 in the band
    '''
    def __init__(self, band_width, pseudo_time_step, max_sweeps=None,
                 convergence_tol=1e-2):
        if not band_width > 0.0:
            raise ValueError('band width must be positive, got {0}'
                             .format(band_width))

        if not pseudo_time_step > 0.0:
            raise ValueError('pseudo time step must be positive, got {0}'
                             .format(pseudo_time_step))

        if not convergence_tol > 0.0:
            raise ValueError('convergence tolerance must be positive, got {0}'
                             .format(convergence_tol))

        if max_sweeps is None:
            max_sweeps = int(np.ceil(2.0 * band_width / pseudo_time_step))

        self.band_width = float(band_width)
        self.pseudo_time_step = float(pseudo_time_step)
        self.max_sweeps = int(max_sweeps)
        self.convergence_tol = float(convergence_tol)

    @classmethod
    def from_grid(cls, grid, band_cells=12, step_fraction=0.5, **kwargs):
        return cls(band_cells * grid.h_min, step_fraction * grid.h_min,
                   **kwargs)

    def validate(self, grid, smoothing=None):
        'check the grid dependent invariants'
        if self.pseudo_time_step > grid.h_min:
            raise ValueError('pseudo time step {0} exceeds the grid spacing '
                             '{1}'.format(self.pseudo_time_step, grid.h_min))

        if (smoothing is not None and
                self.band_width < 2.0 * smoothing.epsilon):
            raise ValueError('band width {0} is less than twice the smoothing '
                             'width {1}'.format(self.band_width,
                                                smoothing.epsilon))

    def __repr__(self):
        return ('{0.__class__.__name__}(band_width={0.band_width}, '
                'pseudo_time_step={0.pseudo_time_step}, '
                'max_sweeps={0.max_sweeps}, '
                'convergence_tol={0.convergence_tol})'.format(self))


def smooth_sign(values, h):
    return values / np.sqrt(values * values + h * h)


def distance_error(values, h, band_width):
    '''
    mean | |grad(phi)| - 1 | over the cells strictly inside the band
    '''
    inside = np.abs(values) < band_width - max(h)

    if not np.any(inside):
        return 0.0

    return float(np.mean(np.abs(central_norm(values, h)[inside] - 1.0)))


def _anchor_distance(values, h, near):
    '''
    Subcell estimate of the signed distance to the interface for the cells
    next to it: phi over its central gradient norm.  Where the central
    differences cancel across a thin feature, the one sided slopes are
    used instead.  Zero away from the interface.
    '''
    central = central_norm(values, h)

    one_sided = np.zeros_like(values)
    for axis in range(3):
        slope = np.maximum(np.abs(forward_difference(values, axis, h[axis])),
                           np.abs(backward_difference(values, axis, h[axis])))
        one_sided += slope * slope
    one_sided = np.sqrt(one_sided)

    slope = np.where(central >= 0.5 * one_sided, central, one_sided)
    slope = np.maximum(slope, np.finfo(np.float64).tiny)

    anchor = np.zeros_like(values)
    anchor[near] = values[near] / slope[near]

    return anchor


def reinitialize(phi, params):
    '''
    Restore phi to a signed distance function near its zero level set.

    :param phi: ScalarField with a nonempty zero level set
    :param params: ReinitParams

    :returns: new ScalarField
    '''
    grid = phi.grid
    h = grid.h
    dtau = params.pseudo_time_step
    band = params.band_width

    near = interface_cells(phi.values)
    if not np.any(near):
        raise EmptySurface('phi has no sign change, there is no surface '
                           'to reinitialize')

    # remove the overall scale of phi, so the iteration starts close to
    # unit slope
    scale = float(np.median(central_norm(phi.values, h)[near]))
    if scale > 0.0 and abs(scale - 1.0) > params.convergence_tol:
        values0 = phi.values / scale
    else:
        values0 = phi.values.copy()

    values = np.clip(values0, -band, band)

    error = distance_error(values, h, band)
    if error <= params.convergence_tol:
        logger.debug('reinitialize: already distance-like, '
                     'error {0:.3g}'.format(error))
        return ScalarField(grid, values)

    sign0 = smooth_sign(values0, grid.h_min)
    hard_sign = np.sign(values0)
    anchor = _anchor_distance(values0, h, near)

    far = ~near
    relax = dtau / grid.h_min

    sweep = 0
    for sweep in range(1, params.max_sweeps + 1):
        transported = values - dtau * sign0 * (godunov_norm(values, h, sign0)
                                               - 1.0)
        anchored = values - relax * (hard_sign * np.abs(values) - anchor)

        values = np.clip(np.where(far, transported, anchored), -band, band)

        error = distance_error(values, h, band)
        if error <= params.convergence_tol:
            break

    logger.debug('reinitialize: {0} sweeps, error {1:.3g}'
                 .format(sweep, error))

    return ScalarField(grid, values)
