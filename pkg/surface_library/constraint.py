'''
Newton iteration enforcing a target volume fraction, with continuation in
the target for distant fractions.

The correction is

    dphi(lambda) = alpha * (div(n) + lambda) * |grad(phi)|

which moves the surface along its own curvature flow direction and so
tends to preserve its shape.  The curvature is frozen at phi_0, which
makes

    df/dlambda = -alpha * integral(delta(phi_0 + dphi) * |grad(phi)|) dV

the exact derivative of the iterated map.
'''
import logging

import numpy as np

from .grid import ScalarField, central_norm
from .metrics import smoothed_delta, volume_fraction
from .extension import extended_curvature
from .reinit import reinitialize
from .stencils import ordered_sum
from .errors import DerivativeVanished, NoConvergence, SurfaceError

logger = logging.getLogger(__name__)

VANISHING_DERIVATIVE = 1e-10


class NewtonParams(object):
    '''
    :param alpha: scale of the correction, defaults to min(h)**2 when
                  built with from_grid()
    :param tol=1e-6: tolerance on |f - f_target|
    :param max_iters=50:
    :param lambda_init=0.0: initial guess for the multiplier
    :param max_halvings=8: step halvings allowed when a Newton step
                           increases the error
    :param extension_sweeps=20: sweeps used to extend the frozen curvature
    '''
    def __init__(self, alpha, tol=1e-6, max_iters=50, lambda_init=0.0,
                 max_halvings=8, extension_sweeps=20):
        if not alpha > 0.0:
            raise ValueError('Newton alpha must be positive, got {0}'
                             .format(alpha))

        if not tol > 0.0:
            raise ValueError('Newton tolerance must be positive, got {0}'
                             .format(tol))

        if max_iters < 1:
            raise ValueError('Newton max_iters must be at least 1')

        self.alpha = float(alpha)
        self.tol = float(tol)
        self.max_iters = int(max_iters)
        self.lambda_init = float(lambda_init)
        self.max_halvings = int(max_halvings)
        self.extension_sweeps = int(extension_sweeps)

    @classmethod
    def from_grid(cls, grid, **kwargs):
        return cls(grid.h_min ** 2, **kwargs)

    def __repr__(self):
        return ('{0.__class__.__name__}(alpha={0.alpha}, tol={0.tol}, '
                'max_iters={0.max_iters}, lambda_init={0.lambda_init})'
                .format(self))


class ContinuationParams(object):
    def __init__(self, max_step=0.05, reinit_between=True):
        if not 0.0 < max_step <= 0.5:
            raise ValueError('continuation max_step must be in (0, 0.5], '
                             'got {0}'.format(max_step))

        self.max_step = float(max_step)
        self.reinit_between = bool(reinit_between)

    def __repr__(self):
        return ('{0.__class__.__name__}(max_step={0.max_step}, '
                'reinit_between={0.reinit_between})'.format(self))


def _check_target(f_target):
    if not 0.0 < f_target < 1.0:
        raise ValueError('target volume fraction must be in (0, 1), got {0}'
                         .format(f_target))


def newton_volume_correction(phi, f_target, params, smoothing,
                             history=None):
    '''
    Correct phi so that its volume fraction is f_target.

    :param phi: reinitialized ScalarField
    :param f_target: target volume fraction
    :param params: NewtonParams
    :param smoothing: SmoothingParams
    :param history=None: if a list is passed, |f - f_target| of every
                         iterate is appended to it

    :returns: (corrected ScalarField, lambda, number of Newton iterations)
    '''
    _check_target(f_target)

    grid = phi.grid
    values0 = phi.values
    norm = central_norm(values0, grid.h)
    kappa = extended_curvature(phi, params.extension_sweeps,
                               smoothing.gradient_floor).values

    def corrected(lam):
        return values0 + params.alpha * (kappa + lam) * norm

    def residual(values):
        return volume_fraction(ScalarField(grid, values), smoothing) - f_target

    lam = params.lambda_init
    values = corrected(lam)
    err = residual(values)

    if history is not None:
        history.append(abs(err))

    iterations = 0
    while abs(err) > params.tol:
        if iterations >= params.max_iters:
            raise NoConvergence('Newton volume correction did not reach '
                                '|f - f0| <= {0} in {1} iterations '
                                '(|f - f0| = {2:.3g})'
                                .format(params.tol, params.max_iters,
                                        abs(err)),
                                iterations=iterations)

        derivative = -(params.alpha *
                       ordered_sum(smoothed_delta(values, smoothing) * norm)
                       * grid.cell_volume)

        if abs(derivative) < VANISHING_DERIVATIVE:
            raise DerivativeVanished('df/dlambda = {0:.3g}, the zero level '
                                     'set has left the band'
                                     .format(derivative),
                                     iterations=iterations)

        assert derivative < 0.0

        step = -err / derivative

        for _halving in range(params.max_halvings + 1):
            trial = corrected(lam + step)
            trial_err = residual(trial)

            if abs(trial_err) < abs(err):
                break

            step *= 0.5
        else:
            raise NoConvergence('no Newton step within {0} halvings reduces '
                                '|f - f0| = {1:.3g}'
                                .format(params.max_halvings, abs(err)),
                                iterations=iterations)

        # trial was built from lam + step
        lam += step
        values, err = trial, trial_err
        iterations += 1

        if history is not None:
            history.append(abs(err))

        logger.debug('Newton iteration {0}: lambda {1:.6g}, |f - f0| {2:.3g}'
                     .format(iterations, lam, abs(err)))

    return ScalarField(grid, values), lam, iterations


def stage_targets(f_start, f_target, max_step, tol=0.0):
    '''
    The sequence of intermediate targets, each at most max_step apart.
    Empty when f_start is already within tol of f_target.
    '''
    delta = f_target - f_start

    if abs(delta) <= tol:
        return []

    n_stages = max(1, int(np.ceil(abs(delta) / max_step - 1e-9)))

    targets = [f_start + delta * k / n_stages for k in range(1, n_stages)]
    targets.append(f_target)

    return targets


def drive_to_volume_fraction(phi, f_target, cont, newton, smoothing,
                             reinit_params=None, stage_callback=None):
    '''
    Reach f_target through stages of at most cont.max_step in volume
    fraction, one Newton correction per stage.

    :param reinit_params=None: ReinitParams used between stages when
                               cont.reinit_between is set
    :param stage_callback=None: called as stage_callback(stage, target,
                                phi) after each stage's correction

    Newton failures are re-raised with the stage index attached.
    '''
    _check_target(f_target)

    f_start = volume_fraction(phi, smoothing)
    targets = stage_targets(f_start, f_target, cont.max_step, newton.tol)

    if not targets:
        logger.debug('volume fraction {0:.6g} already at target'
                     .format(f_start))
        return phi

    logger.info('driving volume fraction {0:.4f} -> {1:.4f} in {2} stage(s)'
                .format(f_start, f_target, len(targets)))

    for stage, target in enumerate(targets, 1):
        try:
            phi, lam, iterations = newton_volume_correction(phi, target,
                                                            newton, smoothing)
        except SurfaceError as err:
            if hasattr(err, 'stage'):
                err.stage = stage
            raise

        logger.debug('stage {0}: f0 = {1:.6g}, lambda = {2:.6g}, '
                     '{3} iterations'.format(stage, target, lam, iterations))

        if stage_callback is not None:
            stage_callback(stage, target, phi)

        if (stage < len(targets) and cont.reinit_between and
                reinit_params is not None):
            phi = reinitialize(phi, reinit_params)

    return phi
