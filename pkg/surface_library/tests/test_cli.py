'''
Tests for the surface_library command line front end
'''
import os

import numpy as np

import pytest

from surface_library.grid import PeriodicGrid, ScalarField
from surface_library.field_file import read_field, write_field
from surface_library.run_record import RunRecord
from surface_library.scripts.surface_cmds import run, EXIT_OK, EXIT_INVALID, \
    EXIT_FAILED

quiet = ['--log-level', 'error']


def output_values(text):
    'key=value lines of the command output, as floats'
    values = {}

    for line in text.splitlines():
        key, sep, value = line.partition('=')

        if sep:
            try:
                values[key] = float(value)
            except ValueError:
                values[key] = value

    return values


@pytest.fixture(scope='module')
def sphere_file(tmpdir_factory):
    path = str(tmpdir_factory.mktemp('fields').join('sphere.lsf'))

    assert run(quiet + ['init', '--sphere', '0.25', '--n', '64',
                        '--out', path]) == EXIT_OK

    return path


def test_init_sphere(sphere_file, capsys, root_logger):
    path = sphere_file.replace('.lsf', '_2.lsf')

    assert run(quiet + ['init', '--seed-shape', 'sphere:0.25', '--n', '64',
                        '--out', path]) == EXIT_OK
    values = output_values(capsys.readouterr().out)

    assert np.isclose(values['f'], 4. / 3 * np.pi * 0.25 ** 3, rtol=0.03)
    assert np.isclose(values['A'], 4 * np.pi * 0.25 ** 2, rtol=0.02)

    assert np.array_equal(read_field(path).values,
                          read_field(sphere_file).values)


def test_init_nodal(capsys, root_logger):
    assert run(quiet + ['init', '--nodal', 'P', '--weights', '0.05,1',
                        '--n', '24']) == EXIT_OK

    assert 'f' in output_values(capsys.readouterr().out)


def test_measure(sphere_file, capsys, root_logger):
    assert run(quiet + ['measure', sphere_file]) == EXIT_OK
    values = output_values(capsys.readouterr().out)

    assert np.isclose(values['H'], -4.0, rtol=0.05)
    assert np.isclose(values['lambda'], 2 * values['H'], atol=1e-5)
    assert np.isclose(values['A'], 4 * np.pi * 0.25 ** 2, rtol=0.02)
    assert values['curvature_stddev'] >= 0.0


def test_mesh(sphere_file, tmpdir, capsys, root_logger):
    path = str(tmpdir.join('sphere.ply'))

    assert run(quiet + ['mesh', sphere_file, '--out', path]) == EXIT_OK
    values = output_values(capsys.readouterr().out)

    assert os.path.isfile(path)
    assert np.isclose(values['mesh_area'], values['delta_area'], rtol=0.03)


def test_optimize(tmpdir, capsys, root_logger):
    out = str(tmpdir.join('out.lsf'))
    csv = str(tmpdir.join('out.csv'))

    assert run(quiet + ['optimize', '--sphere', '0.25', '--n', '24',
                        '--f', '0.07', '--max-iters', '3',
                        '--checkpoint-every', '2',
                        '--out', out, '--csv', csv]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()

    assert lines[-3] == 'status=MaxIters'
    f, H, A = [float(v) for v in lines[-1].split(',')]
    assert abs(f - 0.07) < 1e-3
    assert H < 0.0

    assert read_field(out).grid == PeriodicGrid(24)
    assert os.path.isfile(str(tmpdir.join('out_0000002.lsf')))
    assert len(RunRecord.from_csv(csv)) == 3


def test_optimize_constant_field(tmpdir, capsys, root_logger):
    grid = PeriodicGrid(16)
    path = str(tmpdir.join('flat.lsf'))
    write_field(path, ScalarField(grid, np.ones(grid.shape)))

    assert run(quiet + ['optimize', path, '--f', '0.3']) == EXIT_FAILED
    assert capsys.readouterr().out.startswith('FAILED: ')


def test_sweep(tmpdir, capsys, root_logger):
    csv = str(tmpdir.join('table.csv'))

    assert run(quiet + ['sweep', '--family', 'P', '--fractions', '0.5',
                        '--n', '24', '--max-iters', '2',
                        '--csv', csv]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()

    assert lines[0] == 'f,H,A'
    assert lines[1].startswith('0.5000,')

    with open(csv) as infile:
        assert infile.read().splitlines() == lines[:2]


@pytest.mark.parametrize('argv',
                         [[],
                          ['init'],
                          ['init', '--sphere', '0.6', '--n', '16'],
                          ['init', '--nodal', 'P', '--weights', '1'],
                          ['init', '--nodal', 'Q'],
                          ['init', '--nodal', 'P', '--n', '16',
                           '--beta', '1.0'],
                          ['init', '--seed-shape', 'blob:1', '--n', '16'],
                          ['optimize', '--sphere', '0.2', '--n', '16'],
                          ['optimize', '--sphere', '0.2', '--n', '16',
                           '--f', '1.5'],
                          ['optimize', '--f', '0.3'],
                          ['optimize', '--sphere', '0.2', '--n', '16',
                           '--f', '0.03', '--workers', '0'],
                          ['measure', 'no_such_file.lsf'],
                          ['sweep', '--family', 'P', '--fractions', 'half'],
                          ])
def test_invalid_input(argv, capsys, root_logger):
    assert run(quiet + argv) == EXIT_INVALID


def test_bad_field_file(tmpdir, root_logger):
    path = tmpdir.join('bad.lsf')
    path.write_binary(b'LSF0' + b'\x00' * 100)

    assert run(quiet + ['measure', str(path)]) == EXIT_INVALID
