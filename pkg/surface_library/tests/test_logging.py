'''
Tests for the logging helpers
'''
import logging

import pytest

import surface_library


@pytest.mark.parametrize(('name', 'level'), [('debug', logging.DEBUG),
                                             ('INFO', logging.INFO),
                                             ('warning', logging.WARNING)])
def test_console_log(root_logger, name, level):
    surface_library.initialize_console_log(name)

    assert root_logger.level == level


def test_unknown_level(root_logger):
    with pytest.raises(KeyError):
        surface_library.initialize_console_log('verbose')


def test_file_log(root_logger, tmpdir):
    path = str(tmpdir.join('run.log'))

    root_logger.setLevel(logging.DEBUG)
    surface_library.add_file_log(path, 'warning')

    logger = logging.getLogger('surface_library.optimizer')
    logger.info('not written')
    logger.warning('run failed: no surface')

    for handler in root_logger.handlers:
        handler.flush()

    with open(path) as infile:
        lines = infile.read().splitlines()

    assert len(lines) == 1
    assert lines[0].startswith('WARNING - ')
    assert lines[0].endswith('run failed: no surface')
