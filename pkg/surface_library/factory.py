'''
Factory methods for getting an initial level set field
'''
import logging

from .initializers import (NodalSpec, PrimitiveSpec, FAMILIES, PRIMITIVES,
                           nodal_field, primitive_field)
from .reinit import reinitialize

logger = logging.getLogger(__name__)


def _floats(text):
    return tuple(float(v) for v in text.split(','))


def parse_shape(shape):
    '''
    Turn a shape description into a NodalSpec or PrimitiveSpec.

    :param shape: Either a string or a dict.
                  - Strings look like 'nodal:P', 'nodal:G:0.05,1',
                    'sphere:0.25' or 'cube:0.25@0.5,0.5,0.5'.
                  - Dicts have either a 'nodal' key with the family name
                    (and optionally 'weights'), or a 'kind' and 'size' key
                    (and optionally 'center').
    :type shape: str or dict
    '''
    if isinstance(shape, (NodalSpec, PrimitiveSpec)):
        return shape

    if isinstance(shape, dict):
        if 'nodal' in shape:
            return NodalSpec(shape['nodal'],
                             shape.get('weights', (1.0, 0.0)))

        return PrimitiveSpec(shape['kind'], shape['size'],
                             shape.get('center', (0.5, 0.5, 0.5)))

    text = str(shape).strip()
    center = (0.5, 0.5, 0.5)

    if '@' in text:
        text, center_text = text.split('@', 1)
        center = _floats(center_text)

    parts = text.split(':')
    kind = parts[0].strip().lower()

    try:
        if kind == 'nodal':
            if len(parts) not in (2, 3):
                raise ValueError

            weights = _floats(parts[2]) if len(parts) == 3 else (1.0, 0.0)

            return NodalSpec(parts[1].strip(), weights)
        elif kind in PRIMITIVES:
            if len(parts) != 2:
                raise ValueError

            return PrimitiveSpec(kind, float(parts[1]), center)
    except ValueError as err:
        if err.args:
            raise

    raise ValueError('cannot parse shape {0!r}: expected nodal:<{1}>[:w1,w2] '
                     'or <{2}>:<size>[@x,y,z]'
                     .format(shape, '|'.join(FAMILIES), '|'.join(PRIMITIVES)))


def get_initial_field(shape, grid):
    '''
    The generated (not yet reinitialized) field for a shape description.
    '''
    spec = parse_shape(shape)
    logger.debug('generating {0!r} on {1!r}'.format(spec, grid))

    if isinstance(spec, NodalSpec):
        return nodal_field(spec, grid)

    return primitive_field(spec, grid)


def get_reinitialized_field(shape, grid, params):
    return reinitialize(get_initial_field(shape, grid), params)
