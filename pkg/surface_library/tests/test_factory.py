'''
Tests for the shape description factory
'''
import numpy as np

import pytest

from surface_library.grid import PeriodicGrid
from surface_library.initializers import (NodalSpec, PrimitiveSpec,
                                          nodal_field, primitive_field)
from surface_library.reinit import ReinitParams
from surface_library.factory import (parse_shape, get_initial_field,
                                     get_reinitialized_field)


@pytest.mark.parametrize(('shape', 'family', 'weights'),
                         [('nodal:P', 'P', (1.0, 0.0)),
                          ('nodal:g', 'G', (1.0, 0.0)),
                          ('nodal:D:0.05,1', 'D', (0.05, 1.0)),
                          ({'nodal': 'G', 'weights': (0.5, 0.5)}, 'G',
                           (0.5, 0.5)),
                          ])
def test_parse_nodal(shape, family, weights):
    spec = parse_shape(shape)

    assert isinstance(spec, NodalSpec)
    assert spec.family == family
    assert spec.term_weights == weights


@pytest.mark.parametrize(('shape', 'kind', 'size', 'center'),
                         [('sphere:0.25', 'sphere', 0.25, (0.5, 0.5, 0.5)),
                          ('cube:0.2@0.25,0.5,0.75', 'cube', 0.2,
                           (0.25, 0.5, 0.75)),
                          ('square_channel:0.1', 'square_channel', 0.1,
                           (0.5, 0.5, 0.5)),
                          ({'kind': 'circular_channels', 'size': 0.15,
                            'center': (0.0, 0.0, 0.0)},
                           'circular_channels', 0.15, (0.0, 0.0, 0.0)),
                          ])
def test_parse_primitive(shape, kind, size, center):
    spec = parse_shape(shape)

    assert isinstance(spec, PrimitiveSpec)
    assert spec.kind == kind
    assert spec.size == size
    assert spec.center == center


def test_parse_spec_passes_through():
    spec = NodalSpec('P')

    assert parse_shape(spec) is spec


@pytest.mark.parametrize('shape', ['nodal', 'nodal:Q', 'nodal:P:1',
                                   'sphere', 'sphere:big', 'blob:0.2',
                                   'cube:0.2@0.5,0.5', ''])
def test_parse_bad_shape(shape):
    with pytest.raises(ValueError):
        parse_shape(shape)


def test_initial_field():
    grid = PeriodicGrid(16)

    assert np.array_equal(get_initial_field('nodal:P', grid).values,
                          nodal_field(NodalSpec('P'), grid).values)
    assert np.array_equal(get_initial_field('sphere:0.2', grid).values,
                          primitive_field(PrimitiveSpec('sphere', 0.2),
                                          grid).values)


def test_reinitialized_field():
    grid = PeriodicGrid(32)
    params = ReinitParams.from_grid(grid)

    phi = get_reinitialized_field('nodal:P', grid, params)
    raw = get_initial_field('nodal:P', grid)

    assert np.max(np.abs(phi.values)) <= params.band_width
    assert np.array_equal(np.sign(phi.values[np.abs(raw.values) > 0.5]),
                          np.sign(raw.values[np.abs(raw.values) > 0.5]))
