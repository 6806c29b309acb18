'''
Triangle meshes of the zero level set, for viewing and as an independent
check of the surface area.

The field is padded with one wrapped layer on the high side of each axis
so the mesh covers a full period.  Vertices on opposite faces of the cell
are not merged.
'''
import logging
import os

import numpy as np

import meshio
from skimage import measure

from .errors import EmptySurface

logger = logging.getLogger(__name__)

MESH_FORMATS = {'.obj': 'obj', '.ply': 'ply'}


def extract_zero_surface(phi):
    '''
    Marching cubes triangulation of phi = 0.

    :returns: (vertices, faces) arrays, vertices in unit cell coordinates
    '''
    grid = phi.grid
    values = np.pad(phi.values, [(0, 1)] * 3, mode='wrap')

    if values.min() >= 0.0 or values.max() <= 0.0:
        raise EmptySurface('phi does not change sign, no surface to mesh')

    verts, faces, _normals, _values = measure.marching_cubes(values,
                                                             level=0.0,
                                                             spacing=grid.h)

    # samples sit at cell centers
    verts = verts + 0.5 * np.asarray(grid.h)

    logger.debug('marching cubes: {0} vertices, {1} faces'
                 .format(len(verts), len(faces)))

    return verts, faces


def mesh_area(vertices, faces):
    return float(measure.mesh_surface_area(vertices, faces))


def mesh_format(path, file_format=None):
    if file_format is not None:
        return file_format

    ext = os.path.splitext(path)[1].lower()

    return MESH_FORMATS.get(ext, 'obj')


def write_mesh(path, vertices, faces, file_format=None):
    '''
    Write an OBJ (the default) or PLY file.
    '''
    mesh = meshio.Mesh(np.asarray(vertices, dtype=np.float64),
                       [('triangle', np.asarray(faces, dtype=np.int64))])

    meshio.write(path, mesh, file_format=mesh_format(path, file_format))
