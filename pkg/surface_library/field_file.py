'''
Binary file format for level set fields.

Layout, all little-endian:

    magic    4 bytes   b'LSF1'
    n        3 x u32   nx, ny, nz
    h        3 x f64   dx, dy, dz
    payload  nx*ny*nz x f64, x fastest
'''
import logging

import numpy as np

from .grid import PeriodicGrid, ScalarField
from .errors import FieldFileHeaderError, FieldFileLengthError

logger = logging.getLogger(__name__)

MAGIC = b'LSF1'

header_dtype = np.dtype([('magic', 'S4'),
                         ('n', '<u4', (3,)),
                         ('h', '<f8', (3,))])

payload_dtype = np.dtype('<f8')

SPACING_TOL = 1e-12


class FieldFile(object):
    '''
    A reader for field files.

    The header is read and validated when the object is created; the
    payload is read by read().

    :param name: path of the field file
    '''
    def __init__(self, name):
        self.name = name

        with open(name, 'rb') as infile:
            header = np.fromfile(infile, dtype=header_dtype, count=1)

        if header.size != 1:
            raise FieldFileHeaderError('Bad file header: file too short\n'
                                       'file: {0}'.format(name))

        self.header = header[0]
        self._check_header()

        self.grid = PeriodicGrid([int(n) for n in self.header['n']])

    def __repr__(self):
        return '{0.__class__.__name__}({0.name!r})'.format(self)

    def _check_header(self):
        magic = self.header['magic']

        if magic != MAGIC:
            raise FieldFileHeaderError('Bad file header: magic {0!r} is not '
                                       '{1!r}\nfile: {2}'
                                       .format(magic, MAGIC, self.name))

        for n, h in zip(self.header['n'], self.header['h']):
            if n < 1 or abs(float(h) * int(n) - 1.0) > SPACING_TOL:
                raise FieldFileHeaderError('Bad file header: spacing {0} '
                                           'times {1} cells is not the unit '
                                           'cell\nfile: {2}'
                                           .format(h, n, self.name))

    def read(self):
        '''
        :returns: ScalarField
        '''
        with open(self.name, 'rb') as infile:
            infile.seek(header_dtype.itemsize)
            payload = np.fromfile(infile, dtype=payload_dtype)

        if payload.size != self.grid.size:
            raise FieldFileLengthError('payload has {0} values, header says '
                                       '{1}\nfile: {2}'
                                       .format(payload.size, self.grid.size,
                                               self.name))

        return ScalarField(self.grid,
                           payload.astype(np.float64).reshape(self.grid.shape,
                                                              order='F'))


def write_field(path, field):
    grid = field.grid

    header = np.zeros(1, dtype=header_dtype)
    header['magic'] = MAGIC
    header['n'] = grid.n
    header['h'] = grid.h

    with open(path, 'wb') as outfile:
        header.tofile(outfile)
        field.flat().astype(payload_dtype).tofile(outfile)

    logger.debug('wrote {0} field to {1}'.format(grid.n, path))


def read_field(path):
    return FieldFile(path).read()
