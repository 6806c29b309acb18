'''
Periodic unit-cell grid and the finite difference stencils used by the
rest of the package.

The unit cell is [0, 1)^3, sampled at cell centers x_i = (i + 1/2) * h.
Field values are stored in a numpy array indexed [ix, iy, iz], so a
Fortran-order ravel gives the x-fastest layout used on disk.

The difference operators use np.roll, so the wrap-around at the cell
boundary is built in.  The two gradient norms used by the iterative
schemes run as slab parallel kernels from stencils.py with the same
wrap-around.  Every stencil commutes exactly with a cyclic shift of the
field.
'''
import logging
from collections import namedtuple

import numpy as np

from . import stencils

logger = logging.getLogger(__name__)

MIN_CELLS = 8

Hessian = namedtuple('Hessian', ['xx', 'yy', 'zz', 'xy', 'xz', 'yz'])


class PeriodicGrid(object):
    '''
    Uniform Cartesian discretization of the periodic unit cell.

    :param n: number of cells.  Either a single int for a cubic grid,
              or a sequence of three ints (nx, ny, nz)
    '''
    def __init__(self, n):
        if np.isscalar(n):
            n = (n, n, n)

        n = tuple(int(ni) for ni in n)

        if len(n) != 3:
            raise ValueError('grid needs three extents, got {0}'.format(n))

        if min(n) < MIN_CELLS:
            raise ValueError('grid extents must be at least {0} cells, '
                             'got {1}'.format(MIN_CELLS, n))

        self.n = n
        self.h = tuple(1.0 / ni for ni in n)

    def __repr__(self):
        return '{0.__class__.__name__}(n={0.n})'.format(self)

    def __eq__(self, other):
        return isinstance(other, PeriodicGrid) and self.n == other.n

    def __ne__(self, other):
        return not self == other

    @property
    def shape(self):
        return self.n

    @property
    def size(self):
        return int(np.prod(self.n))

    @property
    def h_min(self):
        return min(self.h)

    @property
    def h_max(self):
        return max(self.h)

    @property
    def cell_volume(self):
        return self.h[0] * self.h[1] * self.h[2]

    @property
    def is_cubic(self):
        return self.n[0] == self.n[1] == self.n[2]

    def axis_coordinates(self, axis):
        return (np.arange(self.n[axis]) + 0.5) * self.h[axis]

    def coordinates(self):
        '''
        returns the (x, y, z) cell center coordinate arrays, each with the
        full grid shape
        '''
        return np.meshgrid(*[self.axis_coordinates(a) for a in range(3)],
                           indexing='ij')


class ScalarField(object):
    '''
    Values of a real field sampled on a PeriodicGrid.

    Values may be passed either with the grid shape, or as a flat array in
    x-fastest order.  Non-finite values are rejected.
    '''
    def __init__(self, grid, values):
        values = np.asarray(values, dtype=np.float64)

        if values.ndim == 1 and values.size == grid.size:
            values = values.reshape(grid.shape, order='F')

        if values.shape != grid.shape:
            raise ValueError('field shape {0} does not match grid {1}'
                             .format(values.shape, grid.shape))

        if not np.all(np.isfinite(values)):
            raise ValueError('field contains non-finite values')

        self.grid = grid
        self.values = values

    def __repr__(self):
        return ('{0.__class__.__name__}(grid={0.grid!r}, '
                'range=({1:.4g}, {2:.4g}))'
                .format(self, self.values.min(), self.values.max()))

    def __neg__(self):
        return ScalarField(self.grid, -self.values)

    def __mul__(self, other):
        return ScalarField(self.grid, self.values * other)

    __rmul__ = __mul__

    def copy(self):
        return ScalarField(self.grid, self.values.copy())

    def new(self, values):
        'a field on the same grid with new values'
        return ScalarField(self.grid, values)

    def flat(self):
        'values in x-fastest order'
        return self.values.ravel(order='F')

    def shifted(self, offsets):
        '''
        cyclic shift by whole cells: offsets is (sx, sy, sz)
        '''
        return self.new(np.roll(self.values, tuple(offsets), axis=(0, 1, 2)))


def _values(field):
    if isinstance(field, ScalarField):
        return field.values

    return np.asarray(field, dtype=np.float64)


#
# array level stencils, used directly by the iterative schemes
#
def forward_difference(values, axis, h):
    return (np.roll(values, -1, axis=axis) - values) / h


def backward_difference(values, axis, h):
    return (values - np.roll(values, 1, axis=axis)) / h


def central_difference(values, axis, h):
    return ((np.roll(values, -1, axis=axis) - np.roll(values, 1, axis=axis))
            / (2.0 * h))


def central_gradient(values, h):
    return [central_difference(values, a, h[a]) for a in range(3)]


def central_norm(values, h):
    return stencils.central_norm(values, h)


def godunov_norm(values, h, speed_sign):
    '''
    Godunov upwind approximation of |grad(phi)| for
    phi_t + s * |grad(phi)| = 0.

    speed_sign may be a scalar or an array with the grid shape.  Cells
    with zero speed get the central norm.
    '''
    return stencils.godunov_norm(values, h, speed_sign)


def hessian(values, h):
    second = []
    for axis in range(3):
        second.append((np.roll(values, -1, axis=axis) - 2.0 * values +
                       np.roll(values, 1, axis=axis)) / (h[axis] * h[axis]))

    cross = []
    for a, b in ((0, 1), (0, 2), (1, 2)):
        pp = np.roll(values, (-1, -1), axis=(a, b))
        mm = np.roll(values, (1, 1), axis=(a, b))
        pm = np.roll(values, (-1, 1), axis=(a, b))
        mp = np.roll(values, (1, -1), axis=(a, b))

        cross.append((pp - pm - mp + mm) / (4.0 * h[a] * h[b]))

    return Hessian(second[0], second[1], second[2],
                   cross[0], cross[1], cross[2])


def interface_cells(values):
    '''
    boolean mask of cells whose value changes sign (or touches zero)
    against at least one of the six face neighbors
    '''
    mask = values == 0.0

    for axis in range(3):
        for step in (-1, 1):
            mask |= values * np.roll(values, step, axis=axis) < 0.0

    return mask


#
# field level operations
#
def gradient_central(field):
    '''
    second order central differences with periodic wrap

    :returns: three ScalarFields, the partial derivatives along x, y, z
    '''
    grid = field.grid

    return tuple(ScalarField(grid, g)
                 for g in central_gradient(field.values, grid.h))


def gradient_norm_central(field):
    return ScalarField(field.grid, central_norm(field.values, field.grid.h))


def gradient_norm_godunov(field, speed_sign):
    '''
    First order upwind |grad(phi)|, with the upwind direction taken from
    the sign of the speed in phi_t + speed * |grad(phi)| = 0.

    A zero speed returns the central scheme norm.
    '''
    return ScalarField(field.grid,
                       godunov_norm(field.values, field.grid.h, speed_sign))


def hessian_central(field):
    '''
    :returns: Hessian named tuple of ScalarFields (xx, yy, zz, xy, xz, yz)
    '''
    grid = field.grid

    return Hessian(*[ScalarField(grid, d)
                     for d in hessian(field.values, grid.h)])
