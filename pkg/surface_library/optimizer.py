'''
Constrained steepest descent of the surface area.

Each descent step moves phi by

    dphi = beta * [(div(n) + lambda) * |grad(phi)|]

with lambda = -(integral of div(n) dS) / A, which keeps the volume
fraction fixed to first order.  Drift in the volume fraction is removed
with the Newton corrector, and phi is reinitialized on a fixed cadence.
'''
import logging

import numpy as np

from .grid import ScalarField, central_norm, godunov_norm
from .metrics import (SmoothingParams, surface_area, volume_fraction,
                      lagrange_multiplier, mean_curvature_divergence,
                      measure)
from .extension import extend_velocity
from .reinit import ReinitParams, reinitialize
from .constraint import (NewtonParams, ContinuationParams,
                         newton_volume_correction, drive_to_volume_fraction)
from .run_record import RunRecord, RunStatus
from . import stencils
from .errors import SurfaceError

logger = logging.getLogger(__name__)

__all__ = ['OptimizerConfig', 'extend_velocity', 'descent_step',
           'lagrangian', 'optimize']


class OptimizerConfig(object):
    '''
    All the numerical settings of an optimization run.

    Grid dependent defaults:

    - beta = min(h)**2 / 6
    - smoothing epsilon = 3 * max(h)
    - reinit band 12 * min(h), pseudo time step min(h) / 2
    - Newton alpha = min(h)**2

    Any of the nested parameter objects may be passed in directly.
    workers=None keeps the kernel thread count numba starts with.
    '''
    def __init__(self, grid, beta=None, area_tol=1e-6, area_patience=5,
                 reinit_every=10, drift_tol=1e-4, max_iters=100000,
                 extension_sweeps=20, log_every=100, checkpoint_every=0,
                 workers=None, smoothing=None, newton=None, continuation=None,
                 reinit=None):
        beta_limit = grid.h_min ** 2 / 6.0

        if beta is None:
            beta = beta_limit

        if not beta > 0.0:
            raise ValueError('beta must be positive, got {0}'.format(beta))

        # a little slack so the default itself always passes
        if beta > beta_limit * (1.0 + 1e-12):
            raise ValueError('beta {0:.4g} exceeds the stability limit '
                             'min(h)**2 / 6 = {1:.4g}'
                             .format(beta, beta_limit))

        if not area_tol > 0.0:
            raise ValueError('area_tol must be positive, got {0}'
                             .format(area_tol))

        if reinit_every < 1 or area_patience < 1 or max_iters < 1:
            raise ValueError('reinit_every, area_patience and max_iters '
                             'must all be at least 1')

        if workers is not None and int(workers) < 1:
            raise ValueError('workers must be at least 1, got {0}'
                             .format(workers))

        self.grid = grid
        self.beta = float(beta)
        self.area_tol = float(area_tol)
        self.area_patience = int(area_patience)
        self.reinit_every = int(reinit_every)
        self.drift_tol = float(drift_tol)
        self.max_iters = int(max_iters)
        self.extension_sweeps = int(extension_sweeps)
        self.log_every = int(log_every)
        self.checkpoint_every = int(checkpoint_every)
        self.workers = None if workers is None else int(workers)

        self.smoothing = (SmoothingParams.from_grid(grid)
                          if smoothing is None else smoothing)
        self.newton = (NewtonParams.from_grid(
                           grid, extension_sweeps=self.extension_sweeps)
                       if newton is None else newton)
        self.continuation = (ContinuationParams()
                             if continuation is None else continuation)
        self.reinit = (ReinitParams.from_grid(grid)
                       if reinit is None else reinit)

        self.reinit.validate(grid, self.smoothing)

    def __repr__(self):
        return ('{0.__class__.__name__}(grid={0.grid!r}, beta={0.beta:.4g}, '
                'area_tol={0.area_tol}, reinit_every={0.reinit_every}, '
                'drift_tol={0.drift_tol}, max_iters={0.max_iters})'
                .format(self))


def lagrangian(phi, lam, f_target, params):
    '''
    A + lambda * (f - f_target)
    '''
    return (surface_area(phi, params) +
            lam * (volume_fraction(phi, params) - f_target))


def descent_step(phi, cfg):
    '''
    One steepest descent step.

    :returns: (updated ScalarField, lambda used)
    '''
    grid = phi.grid
    h = grid.h
    values = phi.values

    curvature = mean_curvature_divergence(phi, cfg.smoothing.gradient_floor)
    lam = lagrange_multiplier(phi, cfg.smoothing, curvature=curvature)

    limit = 1.0 / grid.h_min
    kappa = extend_velocity(np.clip(curvature.values, -limit, limit), phi,
                            cfg.extension_sweeps,
                            cfg.smoothing.gradient_floor).values

    # the lambda part is a constant speed motion, phi_t + (-lambda)|grad|=0
    dphi = (kappa * central_norm(values, h) +
            lam * godunov_norm(values, h, -lam))

    band = cfg.reinit.band_width
    in_band = np.abs(values) < band

    updated = np.where(in_band, values + cfg.beta * dphi, values)

    return ScalarField(grid, np.clip(updated, -band, band)), lam


def _newton_correct(phi, f_target, cfg):
    phi, lam, iterations = newton_volume_correction(phi, f_target,
                                                    cfg.newton,
                                                    cfg.smoothing)
    logger.info('volume correction: lambda {0:.6g} after {1} Newton '
                'iterations'.format(lam, iterations))

    return phi


def _restore_volume(phi, f_target, cfg):
    '''
    reinitialize, Newton correct, reinitialize.  If the trailing
    reinitialization moved f past drift_tol again, correct once more
    without it.
    '''
    phi = reinitialize(phi, cfg.reinit)
    phi = _newton_correct(phi, f_target, cfg)
    phi = reinitialize(phi, cfg.reinit)

    if abs(volume_fraction(phi, cfg.smoothing) - f_target) > cfg.drift_tol:
        phi = _newton_correct(phi, f_target, cfg)

    return phi


def optimize(phi0, f_target, cfg, checkpoint=None):
    '''
    Evolve phi0 toward a surface of locally minimal area with volume
    fraction f_target.

    :param phi0: initial ScalarField, need not be distance-like
    :param f_target: target volume fraction, in (0, 1)
    :param cfg: OptimizerConfig
    :param checkpoint=None: callable checkpoint(iteration, phi), called
                            every cfg.checkpoint_every iterations

    :returns: (final ScalarField, RunRecord)

    The run stops when |dA| stays below area_tol for area_patience
    consecutive iterations, or when the area change across a whole
    reinitialization period, per iteration, stays below area_tol at
    area_patience consecutive period ends.

    Numerical failures do not raise: the record's status is set to Failed
    with the reason.
    '''
    if not 0.0 < f_target < 1.0:
        raise ValueError('target volume fraction must be in (0, 1), got {0}'
                         .format(f_target))

    workers = stencils.set_workers(cfg.workers)

    smoothing = cfg.smoothing
    period = cfg.reinit_every
    record = RunRecord()
    record.f_target = f_target
    phi = phi0

    try:
        phi = reinitialize(phi, cfg.reinit)
        phi = drive_to_volume_fraction(phi, f_target, cfg.continuation,
                                       cfg.newton, smoothing,
                                       reinit_params=cfg.reinit)
        phi = reinitialize(phi, cfg.reinit)

        f = volume_fraction(phi, smoothing)
        if abs(f - f_target) > cfg.drift_tol:
            phi = _newton_correct(phi, f_target, cfg)
            f = volume_fraction(phi, smoothing)

        record.initial_area = surface_area(phi, smoothing)
        quiet = quiet_periods = 0

        logger.info('starting descent: A = {0:.6f}, f = {1:.6f}, '
                    '{2} workers'.format(record.initial_area, f, workers))

        for iteration in range(1, cfg.max_iters + 1):
            newton_invoked = reinit_invoked = False

            if abs(f - f_target) > cfg.drift_tol:
                phi = _restore_volume(phi, f_target, cfg)
                newton_invoked = reinit_invoked = True

            phi, lam = descent_step(phi, cfg)

            if iteration % period == 0:
                phi = reinitialize(phi, cfg.reinit)
                reinit_invoked = True

                if (abs(volume_fraction(phi, smoothing) - f_target) >
                        cfg.drift_tol):
                    phi = _newton_correct(phi, f_target, cfg)
                    newton_invoked = True

            area = surface_area(phi, smoothing)
            f = volume_fraction(phi, smoothing)
            row = record.add_row(iteration, area, f, lam,
                                 newton_invoked, reinit_invoked)

            if cfg.log_every and iteration % cfg.log_every == 0:
                logger.info('iteration {0}: A = {1:.6f}, f = {2:.6f}, '
                            'lambda = {3:.4f}, dA = {4:.3g}'
                            .format(iteration, area, f, lam,
                                    float(row['delta_area'])))

            if (checkpoint is not None and cfg.checkpoint_every and
                    iteration % cfg.checkpoint_every == 0):
                checkpoint(iteration, phi)

            if abs(float(row['delta_area'])) < cfg.area_tol:
                quiet += 1
            else:
                quiet = 0

            if iteration % period == 0:
                change = record.area_change(period)

                if change is not None and abs(change) < cfg.area_tol * period:
                    quiet_periods += 1
                else:
                    quiet_periods = 0

            if quiet >= cfg.area_patience:
                record.finish(RunStatus.converged_area)
                break

            if quiet_periods >= cfg.area_patience:
                logger.info('area unchanged over {0} reinitialization '
                            'periods'.format(quiet_periods))
                record.finish(RunStatus.converged_area)
                break
        else:
            record.finish(RunStatus.max_iters)

        if abs(f - f_target) > cfg.drift_tol:
            phi = _restore_volume(phi, f_target, cfg)

        record.final_metrics = measure(phi, smoothing)
    except SurfaceError as err:
        record.fail(str(err))

        try:
            record.final_metrics = measure(phi, smoothing)
        except SurfaceError:
            pass

    logger.info('run finished: {0} after {1} iterations'
                .format(record.status_string, len(record)))

    return phi, record
