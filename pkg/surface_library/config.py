'''
Settings files and the OptimizerConfig built from them.

A settings file is an INI file with a [surface_library] section of dotted
keys that mirror the configuration objects:

    [surface_library]
    optimizer.beta = 1.5e-5
    optimizer.area_tol = 1e-5
    reinit.band_width = 0.12
    newton.alpha = 1e-4
    smoothing.epsilon_mult = 3.0

Any key left out keeps its grid dependent default.  Command line flags are
merged on top of the file settings before the config is built.
'''
import logging
import configparser

from .metrics import SmoothingParams
from .reinit import ReinitParams
from .constraint import NewtonParams, ContinuationParams
from .optimizer import OptimizerConfig

logger = logging.getLogger(__name__)

SECTION = 'surface_library'


def _as_bool(value):
    if isinstance(value, bool):
        return value

    value = str(value).strip().lower()

    if value in ('1', 'true', 'yes', 'on'):
        return True
    elif value in ('0', 'false', 'no', 'off'):
        return False

    raise ValueError('not a boolean setting: {0!r}'.format(value))


settings_types = {'smoothing.epsilon_mult': float,
                  'smoothing.gradient_floor': float,
                  'reinit.band_width': float,
                  'reinit.pseudo_time_step': float,
                  'reinit.max_sweeps': int,
                  'reinit.convergence_tol': float,
                  'newton.alpha': float,
                  'newton.tol': float,
                  'newton.max_iters': int,
                  'newton.lambda_init': float,
                  'newton.max_halvings': int,
                  'continuation.max_step': float,
                  'continuation.reinit_between': _as_bool,
                  'optimizer.beta': float,
                  'optimizer.area_tol': float,
                  'optimizer.area_patience': int,
                  'optimizer.reinit_every': int,
                  'optimizer.drift_tol': float,
                  'optimizer.max_iters': int,
                  'optimizer.extension_sweeps': int,
                  'optimizer.log_every': int,
                  'optimizer.checkpoint_every': int,
                  'optimizer.workers': int,
                  }


def read_settings(path):
    '''
    :returns: dict of the dotted keys in the file's [surface_library]
              section, values still as strings
    '''
    parser = configparser.ConfigParser()

    if not parser.read(path):
        raise ValueError('cannot read settings file {0}'.format(path))

    if not parser.has_section(SECTION):
        raise ValueError('settings file {0} has no [{1}] section'
                         .format(path, SECTION))

    return dict(parser.items(SECTION))


def parse_settings(settings):
    '''
    Check the keys and convert the values of a settings dict.
    '''
    parsed = {}

    for key, value in settings.items():
        if value is None:
            continue

        try:
            convert = settings_types[key]
        except KeyError:
            raise ValueError('unknown setting {0!r}'.format(key))

        try:
            parsed[key] = convert(value)
        except ValueError:
            raise ValueError('bad value {0!r} for setting {1!r}'
                             .format(value, key))

    return parsed


def _with_prefix(settings, prefix):
    return {k[len(prefix):]: v for k, v in settings.items()
            if k.startswith(prefix)}


def optimizer_config_from_settings(grid, settings=None):
    '''
    Build an OptimizerConfig for grid from a dict of dotted settings.
    '''
    settings = parse_settings(settings or {})

    smoothing = _with_prefix(settings, 'smoothing.')
    reinit = _with_prefix(settings, 'reinit.')
    newton = _with_prefix(settings, 'newton.')
    continuation = _with_prefix(settings, 'continuation.')
    optimizer = _with_prefix(settings, 'optimizer.')

    smoothing_params = SmoothingParams.from_grid(grid, **smoothing)

    reinit_params = ReinitParams(
        reinit.pop('band_width', 12 * grid.h_min),
        reinit.pop('pseudo_time_step', 0.5 * grid.h_min),
        **reinit)

    newton.setdefault('extension_sweeps',
                      optimizer.get('extension_sweeps', 20))
    newton_params = NewtonParams(newton.pop('alpha', grid.h_min ** 2),
                                 **newton)

    cfg = OptimizerConfig(grid,
                          smoothing=smoothing_params,
                          reinit=reinit_params,
                          newton=newton_params,
                          continuation=ContinuationParams(**continuation),
                          **optimizer)

    logger.debug('built {0!r} from {1} settings'.format(cfg, len(settings)))

    return cfg
