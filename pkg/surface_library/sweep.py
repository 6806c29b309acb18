'''
Family sweeps: optimize one nodal family over a list of volume fractions,
using continuation in the volume fraction.

The sweep starts at the fraction nearest 0.5 and proceeds outward along
two branches.  Every run starts from the last converged field of its
branch, so each target is reached from a nearby surface.
'''
import os
import logging

import numpy as np

from slugify import slugify_filename

from .grid import PeriodicGrid
from .initializers import (NodalSpec, FAMILIES, nodal_field,
                           symmetry_residual)
from .config import optimizer_config_from_settings
from .optimizer import optimize
from .field_file import write_field
from .reference_tables import expected_mean_curvature, expected_area

logger = logging.getLogger(__name__)

# converged fields whose symmetry residual exceeds this fraction of a cell
# are flagged
SYMMETRY_TOL = 0.5


class SweepSpec(object):
    '''
    :param family: 'P', 'D' or 'G'
    :param fractions: target volume fractions, all in (0, 1)
    :param n: grid cells per axis
    :param settings=None: dict of dotted config settings for every run
    :param weights=(1.0, 0.0): nodal term weights of the seed field
    '''
    def __init__(self, family, fractions, n, settings=None,
                 weights=(1.0, 0.0)):
        family = str(family).upper()

        if family not in FAMILIES:
            raise ValueError('unknown family {0!r}'.format(family))

        fractions = sorted(set(float(f) for f in fractions))

        if not fractions:
            raise ValueError('a sweep needs at least one volume fraction')

        for f in fractions:
            if not 0.0 < f < 1.0:
                raise ValueError('volume fraction {0} is not in (0, 1)'
                                 .format(f))

        self.family = family
        self.fractions = fractions
        self.n = int(n)
        self.settings = dict(settings or {})
        self.weights = tuple(weights)

    def __repr__(self):
        return ('{0.__class__.__name__}({0.family!r}, {0.fractions}, '
                'n={0.n})'.format(self))

    @property
    def start(self):
        return min(self.fractions, key=lambda f: (abs(f - 0.5), f))

    def branches(self):
        '''
        the outward branches, each a list of fractions ordered away from
        the start fraction
        '''
        start = self.start
        upper = [f for f in self.fractions if f > start]
        lower = [f for f in reversed(self.fractions) if f < start]

        return [upper, lower]


class SweepRow(object):
    def __init__(self, f, H=np.nan, A=np.nan, status=None, iterations=0,
                 curvature_stddev=np.nan, symmetry_broken=False):
        self.f = f
        self.H = H
        self.A = A
        self.status = status
        self.iterations = iterations
        self.curvature_stddev = curvature_stddev
        self.symmetry_broken = symmetry_broken

    def __repr__(self):
        return ('{0.__class__.__name__}(f={0.f}, H={0.H:.4f}, A={0.A:.4f}, '
                'status={0.status!r})'.format(self))

    @property
    def failed(self):
        return self.status is not None and self.status.startswith('Failed')

    def csv_line(self):
        return '{0:.4f},{1:.4f},{2:.4f}'.format(self.f, self.H, self.A)


def output_name(family, f, ext):
    return slugify_filename('{0}_f{1:.3f}'.format(family, f)) + ext


def _run_one(spec, cfg, phi_start, f, out_dir):
    phi, record = optimize(phi_start, f, cfg)

    row = SweepRow(f, status=record.status_string, iterations=len(record))

    if record.final_metrics is not None and not record.failed:
        m = record.final_metrics
        row.H = m.mean_curvature_avg
        row.A = m.area
        row.curvature_stddev = m.curvature_stddev

        grid = phi.grid
        if grid.is_cubic and grid.n[0] % 2 == 0:
            residual = symmetry_residual(phi, spec.family)
            row.symmetry_broken = residual > SYMMETRY_TOL * grid.h_min

            if row.symmetry_broken:
                logger.warning('{0} surface at f = {1} lost its symmetry '
                               '(residual {2:.3g})'
                               .format(spec.family, f, residual))

    if out_dir is not None:
        record.to_csv(os.path.join(out_dir,
                                   output_name(spec.family, f, '.csv')))

        if not record.failed:
            write_field(os.path.join(out_dir,
                                     output_name(spec.family, f, '.lsf')),
                        phi)

    return phi, row


def run_sweep(spec, out_dir=None):
    '''
    Optimize every fraction of the sweep.

    A failed run is recorded and its branch continues from the last
    successful field.

    :returns: list of SweepRow, in increasing volume fraction
    '''
    grid = PeriodicGrid(spec.n)
    cfg = optimizer_config_from_settings(grid, spec.settings)

    if out_dir is not None and not os.path.isdir(out_dir):
        os.makedirs(out_dir)

    seed = nodal_field(NodalSpec(spec.family, spec.weights), grid)

    logger.info('sweep {0!r}: starting at f = {1}'.format(spec, spec.start))

    start_phi, start_row = _run_one(spec, cfg, seed, spec.start, out_dir)
    rows = [start_row]

    if start_row.failed:
        start_phi = seed

    for branch in spec.branches():
        phi = start_phi

        for f in branch:
            logger.info('sweep {0}: f = {1}'.format(spec.family, f))
            new_phi, row = _run_one(spec, cfg, phi, f, out_dir)
            rows.append(row)

            if not row.failed:
                phi = new_phi

    return sorted(rows, key=lambda r: r.f)


def compare_to_reference(rows, family):
    '''
    Deviations of sweep rows from the published table.

    :returns: list of (f, H - H_expected, (A - A_expected) / A_expected)
    '''
    deviations = []

    for row in rows:
        try:
            h_ref = expected_mean_curvature(family, row.f)
            a_ref = expected_area(family, row.f)
        except ValueError:
            continue

        deviations.append((row.f, row.H - h_ref, (row.A - a_ref) / a_ref))

    return deviations


def symmetry_residuals(rows):
    '''
    Phase swap check: for each f < 0.5 whose complement 1 - f was also
    computed, (H(f) + H(1 - f), |A(f) - A(1 - f)| / A(f)).
    '''
    by_f = {round(r.f, 9): r for r in rows}
    residuals = []

    for row in sorted(rows, key=lambda r: r.f):
        if row.f >= 0.5:
            continue

        other = by_f.get(round(1.0 - row.f, 9))
        if other is None:
            continue

        residuals.append((row.f, row.H + other.H,
                          abs(row.A - other.A) / row.A))

    return residuals
