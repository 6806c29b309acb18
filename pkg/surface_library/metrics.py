'''
Level set functionals of an embedding function phi:

- smoothed delta and Heaviside functions
- surface area and volume fraction
- the curvature field div(n), with n = grad(phi) / |grad(phi)|
- surface integrals, and the Lagrange multiplier of the volume constraint

Phase 1 is the region where phi < 0.  Surface integrals are converted to
volume sums with the smoothed delta function:

    integral over surface of p dS ~= sum(p * delta(phi) * |grad(phi)|) dV
'''
import logging

import numpy as np

from .grid import ScalarField, central_norm
from .stencils import curvature, ordered_sum
from .errors import DistortedField, EmptySurface

logger = logging.getLogger(__name__)

EMPTY_AREA = 1e-8

# |grad(phi)| inside the delta support must stay within these bounds
DISTORTION_BOUNDS = (0.1, 10.0)


class SmoothingParams(object):
    '''
    Width of the smoothed delta function, plus the gradient floor used by
    the curvature stencil.

    :param epsilon: half width of the delta function support, in the units
                    of phi (i.e. length, since phi is kept distance-like)
    :param gradient_floor=1e-8: lower bound on |grad(phi)| when dividing
                                by it
    '''
    def __init__(self, epsilon, gradient_floor=1e-8):
        if not epsilon > 0.0:
            raise ValueError('smoothing epsilon must be positive, got {0}'
                             .format(epsilon))

        if not gradient_floor > 0.0:
            raise ValueError('gradient floor must be positive, got {0}'
                             .format(gradient_floor))

        self.epsilon = float(epsilon)
        self.gradient_floor = float(gradient_floor)

    @classmethod
    def from_grid(cls, grid, epsilon_mult=3.0, gradient_floor=1e-8):
        return cls(epsilon_mult * grid.h_max, gradient_floor=gradient_floor)

    def __repr__(self):
        return ('{0.__class__.__name__}(epsilon={0.epsilon}, '
                'gradient_floor={0.gradient_floor})'.format(self))


class SurfaceMetrics(object):
    '''
    Summary of the surface described by a level set function.

    mean_curvature_avg is always lagrange_multiplier / 2.
    '''
    def __init__(self, area, volume_fraction, lagrange_multiplier,
                 curvature_stddev):
        self.area = area
        self.volume_fraction = volume_fraction
        self.lagrange_multiplier = lagrange_multiplier
        self.curvature_stddev = curvature_stddev

    @property
    def mean_curvature_avg(self):
        return self.lagrange_multiplier / 2.0

    def __repr__(self):
        return ('{0.__class__.__name__}(area={0.area:.6g}, '
                'volume_fraction={0.volume_fraction:.6g}, '
                'lagrange_multiplier={0.lagrange_multiplier:.6g}, '
                'curvature_stddev={0.curvature_stddev:.6g})'.format(self))


def smoothed_delta(phi_value, params):
    '''
    (1 / 2eps) * (1 + cos(pi * phi / eps)) for |phi| <= eps, else 0

    Works on scalars or arrays.
    '''
    eps = params.epsilon
    phi_value = np.asarray(phi_value, dtype=np.float64)

    delta = (1.0 + np.cos(np.pi * phi_value / eps)) / (2.0 * eps)

    return np.where(np.abs(phi_value) <= eps, delta, 0.0)


def smoothed_heaviside(phi_value, params):
    '''
    The antiderivative of smoothed_delta: 0 below -eps, 1 above eps.
    '''
    eps = params.epsilon
    phi_value = np.asarray(phi_value, dtype=np.float64)

    ramp = 0.5 * (1.0 + phi_value / eps +
                  np.sin(np.pi * phi_value / eps) / np.pi)

    return np.where(phi_value < -eps, 0.0,
                    np.where(phi_value > eps, 1.0, ramp))


def _surface_weights(phi, params):
    '''
    per cell delta(phi) * |grad(phi)| * dV, after checking that phi is
    distance-like where the delta function is nonzero
    '''
    grid = phi.grid
    values = phi.values

    norm = central_norm(values, grid.h)
    support = np.abs(values) <= params.epsilon

    if np.any(support):
        in_band = norm[support]
        lo, hi = in_band.min(), in_band.max()

        if lo < DISTORTION_BOUNDS[0] or hi > DISTORTION_BOUNDS[1]:
            raise DistortedField('|grad(phi)| in the interface band is in '
                                 '[{0:.3g}, {1:.3g}], reinitialization '
                                 'needed'.format(lo, hi),
                                 grad_range=(lo, hi))

    return smoothed_delta(values, params) * norm * grid.cell_volume


def surface_integral(phi, integrand, params):
    '''
    Integral of a per cell quantity over the zero level set of phi.

    :param integrand: a scalar, an array with the grid shape,
                      or a ScalarField
    '''
    if isinstance(integrand, ScalarField):
        integrand = integrand.values

    return ordered_sum(integrand * _surface_weights(phi, params))


def surface_area(phi, params):
    return surface_integral(phi, 1.0, params)


def volume_fraction(phi, params):
    '''
    Fraction of the unit cell occupied by phase 1 (phi < 0)
    '''
    grid = phi.grid
    heaviside = smoothed_heaviside(phi.values, params)

    return ordered_sum(1.0 - heaviside) * grid.cell_volume


def curvature_values(values, h, gradient_floor=1e-8):
    '''
    div(grad(phi) / |grad(phi)|) from central first and second differences.

    :returns: (curvature array, number of cells where |grad(phi)| was
              below the floor)
    '''
    return curvature(values, h, gradient_floor)


def mean_curvature_divergence(phi, gradient_floor=1e-8):
    '''
    The curvature field div(n) of the level sets of phi.

    For a sphere with phase 1 inside this is 2/r on the interface.
    '''
    kappa, degenerate = curvature_values(phi.values, phi.grid.h,
                                         gradient_floor)

    if degenerate:
        logger.debug('{0} cells with |grad(phi)| below {1}'
                     .format(degenerate, gradient_floor))

    return ScalarField(phi.grid, kappa)


def mean_curvature_field(phi, gradient_floor=1e-8):
    '''
    The mean curvature H = -div(n) / 2
    '''
    kappa = mean_curvature_divergence(phi, gradient_floor)

    return kappa.new(-0.5 * kappa.values)


def lagrange_multiplier(phi, params, curvature=None):
    '''
    lambda = -(integral of div(n) over the surface) / area

    :param curvature=None: precomputed div(n) field, if the caller has it
    '''
    weights = _surface_weights(phi, params)
    area = ordered_sum(weights)

    if area < EMPTY_AREA:
        raise EmptySurface('surface area {0:.3g} is below {1}, the zero '
                           'level set has vanished'.format(area, EMPTY_AREA))

    if curvature is None:
        curvature = mean_curvature_divergence(phi, params.gradient_floor)

    return -ordered_sum(curvature.values * weights) / area


def curvature_statistics(phi, params, curvature=None):
    '''
    Area weighted mean and standard deviation of div(n) over the interface
    band.
    '''
    weights = _surface_weights(phi, params)
    total = ordered_sum(weights)

    if total < EMPTY_AREA:
        raise EmptySurface('no interface to compute curvature over')

    if curvature is None:
        curvature = mean_curvature_divergence(phi, params.gradient_floor)

    kappa = curvature.values
    mean = ordered_sum(kappa * weights) / total
    var = ordered_sum((kappa - mean) ** 2 * weights) / total

    return mean, np.sqrt(var)


def measure(phi, params):
    '''
    Compute the full SurfaceMetrics for phi.
    '''
    curvature = mean_curvature_divergence(phi, params.gradient_floor)
    mean, stddev = curvature_statistics(phi, params, curvature=curvature)

    return SurfaceMetrics(area=surface_area(phi, params),
                          volume_fraction=volume_fraction(phi, params),
                          lagrange_multiplier=-mean,
                          curvature_stddev=stddev)
