#!/usr/bin/env python
'''
Command line front end:

    surface_library init      generate and reinitialize a starting field
    surface_library optimize  minimize area at a fixed volume fraction
    surface_library measure   report A, f, lambda, H of a field
    surface_library mesh      triangulate the zero level set
    surface_library sweep     run a family over several volume fractions

Exit codes: 0 on success, 2 for invalid input, 3 for a numerical failure.
'''
import os
import sys
import argparse
import logging

import surface_library
from surface_library.grid import PeriodicGrid
from surface_library.factory import (get_initial_field,
                                     get_reinitialized_field)
from surface_library.stencils import set_workers
from surface_library.field_file import read_field, write_field
from surface_library.config import (read_settings,
                                    optimizer_config_from_settings)
from surface_library.metrics import measure as measure_field
from surface_library.reinit import reinitialize
from surface_library.optimizer import optimize
from surface_library.mesh import (extract_zero_surface, mesh_area,
                                  write_mesh)
from surface_library.sweep import (SweepSpec, run_sweep, compare_to_reference,
                                   symmetry_residuals)
from surface_library.reference_tables import desk_scale_fractions
from surface_library.errors import (SurfaceError, DistortedField,
                                    ShapeTooLarge, FieldFileHeaderError,
                                    FieldFileLengthError)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_FAILED = 3


class InvalidInput(Exception):
    pass


def _floats(text):
    try:
        return [float(v) for v in text.split(',')]
    except ValueError:
        raise argparse.ArgumentTypeError('expected comma separated numbers, '
                                         'got {0!r}'.format(text))


def _weights(text):
    weights = _floats(text)

    if len(weights) != 2:
        raise argparse.ArgumentTypeError('expected two weights w1,w2')

    return weights


def _add_config_args(parser):
    parser.add_argument('--config', help='settings file ([surface_library] '
                                         'section of dotted keys)')
    parser.add_argument('--tol-area', type=float, dest='tol_area',
                        help='area stopping tolerance')
    parser.add_argument('--beta', type=float, help='descent step scale')
    parser.add_argument('--epsilon-mult', type=float, dest='epsilon_mult',
                        help='smoothed delta width in cells')
    parser.add_argument('--max-iters', type=int, dest='max_iters')
    parser.add_argument('--workers', type=int,
                        help='threads for the stencil kernels')


def _add_shape_args(parser):
    group = parser.add_mutually_exclusive_group()
    group.add_argument('--seed-shape', dest='seed_shape',
                       help='shape spec, e.g. nodal:P, nodal:G:0.05,1, '
                            'sphere:0.25, cube:0.25@0.5,0.5,0.5')
    group.add_argument('--nodal', choices=('P', 'D', 'G'))
    group.add_argument('--sphere', type=float, metavar='RADIUS')
    group.add_argument('--cube', type=float, metavar='HALF_EDGE')
    group.add_argument('--square-channel', type=float, dest='square_channel',
                       metavar='HALF_WIDTH')
    group.add_argument('--circular-channels', type=float,
                       dest='circular_channels', metavar='RADIUS')

    parser.add_argument('--weights', type=_weights,
                        help='nodal term weights w1,w2')
    parser.add_argument('--center', type=_floats,
                        help='primitive center x,y,z')
    parser.add_argument('--n', type=int, default=100,
                        help='grid cells per axis (default 100)')


def build_parser():
    parser = argparse.ArgumentParser(prog='surface_library',
                                     description='Level set area '
                                     'minimization of triply periodic '
                                     'surfaces')
    parser.add_argument('--log-level', default='info', dest='log_level',
                        choices=sorted(surface_library.log_levels))
    parser.add_argument('--log-file', dest='log_file')

    sub = parser.add_subparsers(dest='command')
    sub.required = True

    p = sub.add_parser('init', help='generate a reinitialized field')
    _add_shape_args(p)
    _add_config_args(p)
    p.add_argument('--out', help='field file to write')

    p = sub.add_parser('optimize', help='minimize area at fixed volume '
                                        'fraction')
    p.add_argument('infile', nargs='?', help='starting field file')
    _add_shape_args(p)
    _add_config_args(p)
    p.add_argument('--f', type=float, required=True, dest='f_target',
                   help='target volume fraction')
    p.add_argument('--out', help='final field file')
    p.add_argument('--csv', help='per iteration record')
    p.add_argument('--checkpoint-every', type=int, dest='checkpoint_every')

    p = sub.add_parser('measure', help='report the surface metrics')
    p.add_argument('infile')
    p.add_argument('--reinit', action='store_true',
                   help='reinitialize before measuring')
    _add_config_args(p)

    p = sub.add_parser('mesh', help='triangulate the zero level set')
    p.add_argument('infile')
    p.add_argument('--out', required=True, help='mesh file (.obj or .ply)')
    p.add_argument('--format', dest='mesh_format', choices=('obj', 'ply'))
    _add_config_args(p)

    p = sub.add_parser('sweep', help='optimize a family over several '
                                     'volume fractions')
    p.add_argument('--family', required=True, choices=('P', 'D', 'G'))
    p.add_argument('--fractions', type=_floats,
                   help='volume fractions (default: the desk scale set)')
    p.add_argument('--n', type=int, default=100)
    p.add_argument('--weights', type=_weights)
    p.add_argument('--out-dir', dest='out_dir',
                   help='directory for the converged fields and records')
    p.add_argument('--csv', help='write the f,H,A table here')
    _add_config_args(p)

    return parser


def gather_settings(args):
    '''
    Settings file values, with the command line flags on top.
    '''
    settings = read_settings(args.config) if args.config else {}

    overrides = {'optimizer.area_tol': getattr(args, 'tol_area', None),
                 'optimizer.beta': getattr(args, 'beta', None),
                 'optimizer.max_iters': getattr(args, 'max_iters', None),
                 'optimizer.workers': getattr(args, 'workers', None),
                 'optimizer.checkpoint_every': getattr(args,
                                                       'checkpoint_every',
                                                       None),
                 'smoothing.epsilon_mult': getattr(args, 'epsilon_mult',
                                                   None),
                 }
    settings.update({k: v for k, v in overrides.items() if v is not None})

    return settings


def shape_from_args(args):
    if args.seed_shape:
        return args.seed_shape

    if args.nodal:
        return {'nodal': args.nodal,
                'weights': args.weights or (1.0, 0.0)}

    center = args.center or (0.5, 0.5, 0.5)
    for kind in ('sphere', 'cube', 'square_channel', 'circular_channels'):
        size = getattr(args, kind)

        if size is not None:
            return {'kind': kind, 'size': size, 'center': center}

    return None


def _config_for(grid, args):
    cfg = optimizer_config_from_settings(grid, gather_settings(args))
    set_workers(cfg.workers)

    return cfg


def init(args):
    shape = shape_from_args(args)
    if shape is None:
        raise InvalidInput('init needs a shape: --nodal, --sphere, --cube, '
                           '--square-channel, --circular-channels or '
                           '--seed-shape')

    grid = PeriodicGrid(args.n)
    cfg = _config_for(grid, args)

    phi = get_reinitialized_field(shape, grid, cfg.reinit)
    m = measure_field(phi, cfg.smoothing)

    if args.out:
        write_field(args.out, phi)

    print('f={0:.6f}'.format(m.volume_fraction))
    print('A={0:.6f}'.format(m.area))

    return EXIT_OK


def optimize_cmd(args):
    shape = shape_from_args(args)

    if args.infile:
        phi0 = read_field(args.infile)
    elif shape is not None:
        phi0 = get_initial_field(shape, PeriodicGrid(args.n))
    else:
        raise InvalidInput('optimize needs an input field file or a shape')

    cfg = _config_for(phi0.grid, args)

    checkpoint = None
    if cfg.checkpoint_every:
        base = os.path.splitext(args.out or 'checkpoint.lsf')[0]

        def checkpoint(iteration, phi):
            write_field('{0}_{1:07d}.lsf'.format(base, iteration), phi)

    phi, record = optimize(phi0, args.f_target, cfg, checkpoint=checkpoint)

    if args.csv:
        record.to_csv(args.csv)

    if record.failed:
        print('FAILED: {0}'.format(record.reason))
        return EXIT_FAILED

    if args.out:
        write_field(args.out, phi)

    print('status={0}'.format(record.status_string))
    print('curvature_stddev={0:.6f}'
          .format(record.final_metrics.curvature_stddev))
    print(record.summary_line())

    return EXIT_OK


def measure(args):
    phi = read_field(args.infile)
    cfg = _config_for(phi.grid, args)

    if args.reinit:
        phi = reinitialize(phi, cfg.reinit)

    try:
        m = measure_field(phi, cfg.smoothing)
    except DistortedField as err:
        logger.warning('{0}; measuring the reinitialized field instead'
                       .format(err.message))
        m = measure_field(reinitialize(phi, cfg.reinit), cfg.smoothing)

    print('A={0:.6f}'.format(m.area))
    print('f={0:.6f}'.format(m.volume_fraction))
    print('lambda={0:.6f}'.format(m.lagrange_multiplier))
    print('H={0:.6f}'.format(m.mean_curvature_avg))
    print('curvature_stddev={0:.6f}'.format(m.curvature_stddev))

    return EXIT_OK


def mesh(args):
    phi = read_field(args.infile)
    cfg = _config_for(phi.grid, args)

    vertices, faces = extract_zero_surface(phi)
    write_mesh(args.out, vertices, faces, file_format=args.mesh_format)

    print('mesh_area={0:.6f}'.format(mesh_area(vertices, faces)))

    try:
        print('delta_area={0:.6f}'
              .format(measure_field(phi, cfg.smoothing).area))
    except DistortedField as err:
        logger.warning(err.message)

    return EXIT_OK


def sweep(args):
    fractions = args.fractions or desk_scale_fractions[args.family]
    spec = SweepSpec(args.family, fractions, args.n,
                     settings=gather_settings(args),
                     weights=args.weights or (1.0, 0.0))

    rows = run_sweep(spec, out_dir=args.out_dir)

    lines = ['f,H,A'] + [r.csv_line() for r in rows]
    print('\n'.join(lines))

    if args.csv:
        with open(args.csv, 'w') as outfile:
            outfile.write('\n'.join(lines) + '\n')

    for f, dH, dA in compare_to_reference(rows, args.family):
        logger.info('f = {0:.2f}: H - H_ref = {1:+.3f}, '
                    'A relative error = {2:+.2%}'.format(f, dH, dA))

    for f, h_sum, a_diff in symmetry_residuals(rows):
        logger.info('f = {0:.2f} vs {1:.2f}: H sum {2:+.3f}, '
                    'A difference {3:.2%}'.format(f, 1.0 - f, h_sum, a_diff))

    failed = [r for r in rows if r.failed]
    for r in failed:
        print('FAILED f={0}: {1}'.format(r.f, r.status), file=sys.stderr)

    return EXIT_FAILED if failed else EXIT_OK


commands = {'init': init,
            'optimize': optimize_cmd,
            'measure': measure,
            'mesh': mesh,
            'sweep': sweep,
            }


def run(argv):
    '''
    Run a subcommand.

    :param argv: argument list, without the program name
    :returns: exit code
    '''
    parser = build_parser()

    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return EXIT_OK if err.code == 0 else EXIT_INVALID

    surface_library.initialize_console_log(args.log_level)
    if args.log_file:
        surface_library.add_file_log(args.log_file, args.log_level)

    try:
        return commands[args.command](args)
    except (InvalidInput, ValueError, ShapeTooLarge,
            FieldFileHeaderError, FieldFileLengthError,
            IOError) as err:
        print('invalid input: {0}'.format(err), file=sys.stderr)
        return EXIT_INVALID
    except SurfaceError as err:
        print('numerical failure: {0}'.format(err), file=sys.stderr)
        return EXIT_FAILED


def main_cmd(argv=sys.argv):
    sys.exit(run(argv[1:]))


if __name__ == '__main__':
    main_cmd()
