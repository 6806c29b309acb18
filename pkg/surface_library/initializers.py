'''
Initial embedding functions.

Nodal fields are truncated trigonometric approximations of the
Schwartz P, Schwartz D and Schoen G minimal surfaces.  With
c = cos(2 pi .), s = sin(2 pi .), c2 = cos(4 pi .), s2 = sin(4 pi .):

    P:  T1 = cx + cy + cz
        T2 = cx cy + cy cz + cz cx
    D:  T1 = sx sy sz + sx cy cz + cx sy cz + cx cy sz
        T2 = s2x s2y + s2y s2z + s2z s2x
    G:  T1 = sx cy + sy cz + sz cx
        T2 = c2x c2y + c2y c2z + c2z c2x

The field is w1 * T1 + w2 * T2.  Both terms of each family are invariant
under that family's generating symmetry operations (see
symmetry_operations()), so perturbed fields keep the family's symmetry.

Primitive fields are signed distance functions of simple shapes, negative
inside phase 1, computed with the minimum image convention so they wrap
cleanly across the cell boundary.
'''
import logging

import numpy as np

from .grid import ScalarField
from .errors import ShapeTooLarge

logger = logging.getLogger(__name__)

FAMILIES = ('P', 'D', 'G')
PRIMITIVES = ('sphere', 'cube', 'square_channel', 'circular_channels')


class NodalSpec(object):
    '''
    :param family: one of 'P', 'D', 'G'
    :param term_weights=(1.0, 0.0): weights on the first and second
                                    nodal terms
    '''
    def __init__(self, family, term_weights=(1.0, 0.0)):
        family = str(family).upper()

        if family not in FAMILIES:
            raise ValueError('unknown nodal family {0!r}, expected one of {1}'
                             .format(family, FAMILIES))

        term_weights = tuple(float(w) for w in term_weights)

        if len(term_weights) != 2:
            raise ValueError('two term weights are needed, got {0}'
                             .format(term_weights))

        if term_weights == (0.0, 0.0):
            raise ValueError('at least one nodal term weight must be nonzero')

        self.family = family
        self.term_weights = term_weights

    def __repr__(self):
        return ('{0.__class__.__name__}({0.family!r}, '
                'term_weights={0.term_weights})'.format(self))


class PrimitiveSpec(object):
    '''
    :param kind: one of 'sphere', 'cube', 'square_channel',
                 'circular_channels'
    :param size: radius (sphere, channels) or half edge (cube, square
                 channel)
    :param center=(0.5, 0.5, 0.5): center point of the shape
    '''
    def __init__(self, kind, size, center=(0.5, 0.5, 0.5)):
        if kind not in PRIMITIVES:
            raise ValueError('unknown primitive {0!r}, expected one of {1}'
                             .format(kind, PRIMITIVES))

        size = float(size)
        if not size > 0.0:
            raise ValueError('primitive size must be positive, got {0}'
                             .format(size))

        center = tuple(float(c) % 1.0 for c in center)
        if len(center) != 3:
            raise ValueError('center needs three coordinates')

        self.kind = kind
        self.size = size
        self.center = center

    def __repr__(self):
        return ('{0.__class__.__name__}({0.kind!r}, {0.size}, '
                'center={0.center})'.format(self))


def _nodal_terms(family, x, y, z):
    tau = 2.0 * np.pi

    if family == 'P':
        cx, cy, cz = np.cos(tau * x), np.cos(tau * y), np.cos(tau * z)

        return (cx + cy + cz,
                cx * cy + cy * cz + cz * cx)
    elif family == 'D':
        sx, sy, sz = np.sin(tau * x), np.sin(tau * y), np.sin(tau * z)
        cx, cy, cz = np.cos(tau * x), np.cos(tau * y), np.cos(tau * z)
        s2x, s2y, s2z = (np.sin(2 * tau * x), np.sin(2 * tau * y),
                         np.sin(2 * tau * z))

        return (sx * sy * sz + sx * cy * cz + cx * sy * cz + cx * cy * sz,
                s2x * s2y + s2y * s2z + s2z * s2x)
    else:
        sx, sy, sz = np.sin(tau * x), np.sin(tau * y), np.sin(tau * z)
        cx, cy, cz = np.cos(tau * x), np.cos(tau * y), np.cos(tau * z)
        c2x, c2y, c2z = (np.cos(2 * tau * x), np.cos(2 * tau * y),
                         np.cos(2 * tau * z))

        return (sx * cy + sy * cz + sz * cx,
                c2x * c2y + c2y * c2z + c2z * c2x)


def nodal_value(spec, x, y, z):
    '''
    evaluate the nodal formula at arbitrary coordinates
    '''
    t1, t2 = _nodal_terms(spec.family, x, y, z)
    w1, w2 = spec.term_weights

    return w1 * t1 + w2 * t2


def nodal_field(spec, grid):
    x, y, z = grid.coordinates()

    return ScalarField(grid, nodal_value(spec, x, y, z))


def _min_image(coord, center):
    d = coord - center

    return d - np.round(d)


def primitive_value(spec, x, y, z):
    '''
    signed distance to the primitive at arbitrary coordinates
    '''
    dx = _min_image(x, spec.center[0])
    dy = _min_image(y, spec.center[1])
    dz = _min_image(z, spec.center[2])
    a = spec.size

    if spec.kind == 'sphere':
        return np.sqrt(dx * dx + dy * dy + dz * dz) - a
    elif spec.kind == 'cube':
        return _box_distance([np.abs(dx) - a, np.abs(dy) - a, np.abs(dz) - a])
    elif spec.kind == 'square_channel':
        # channel runs along z
        return _box_distance([np.abs(dx) - a, np.abs(dy) - a])
    else:
        # union of cylinders along x, y and z
        return np.minimum(np.minimum(np.sqrt(dy * dy + dz * dz),
                                     np.sqrt(dx * dx + dz * dz)),
                          np.sqrt(dx * dx + dy * dy)) - a


def _box_distance(q):
    outside = np.sqrt(sum(np.maximum(qi, 0.0) ** 2 for qi in q))
    inside = np.minimum(np.maximum.reduce(q), 0.0)

    return outside + inside


def primitive_field(spec, grid):
    limit = 0.5 - grid.h_max

    if spec.size >= limit:
        raise ShapeTooLarge('{0} size {1} does not fit in the unit cell '
                            '(must be below {2:.4g})'
                            .format(spec.kind, spec.size, limit),
                            size=spec.size)

    x, y, z = grid.coordinates()

    return ScalarField(grid, primitive_value(spec, x, y, z))


#
# symmetry operations on cubic grid arrays
#
def _swap_xy(a):
    return np.transpose(a, (1, 0, 2))


def _cycle_axes(a):
    return np.transpose(a, (1, 2, 0))


def _mirror_x(a):
    return a[::-1, :, :]


def _half_shift(axes):
    def shift(a):
        return np.roll(a, tuple(a.shape[ax] // 2 for ax in axes), axis=axes)

    return shift


def symmetry_operations(family):
    '''
    Generating symmetry operations that leave both nodal terms of a family
    unchanged, as functions on cubic, even sized grid arrays.

    P: axis exchange, cyclic axis permutation, mirror x -> -x
    D: axis exchange, cyclic axis permutation, translation (1/2, 1/2, 0)
    G: cyclic axis permutation, translation (1/2, 1/2, 1/2)

    :returns: list of (name, function) pairs
    '''
    family = family.upper()

    if family == 'P':
        return [('swap_xy', _swap_xy),
                ('cycle_axes', _cycle_axes),
                ('mirror_x', _mirror_x)]
    elif family == 'D':
        return [('swap_xy', _swap_xy),
                ('cycle_axes', _cycle_axes),
                ('half_shift_xy', _half_shift((0, 1)))]
    elif family == 'G':
        return [('cycle_axes', _cycle_axes),
                ('half_shift_xyz', _half_shift((0, 1, 2)))]

    raise ValueError('unknown nodal family {0!r}'.format(family))


def symmetry_residual(field, family):
    '''
    Largest change of the field values under the family's symmetry
    operations.
    '''
    grid = field.grid

    if not grid.is_cubic or grid.n[0] % 2:
        raise ValueError('symmetry checks need a cubic grid with an even '
                         'number of cells, got {0}'.format(grid.n))

    values = field.values

    return max(float(np.max(np.abs(op(values) - values)))
               for _name, op in symmetry_operations(family))
