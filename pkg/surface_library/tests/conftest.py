import logging

import pytest


def pytest_addoption(parser):
    parser.addoption('--runslow', action='store_true', default=False,
                     help='run the full resolution optimization tests')
    parser.addoption('--runfullscale', action='store_true', default=False,
                     help='also run the cases that need grids beyond desk '
                          'scale (tens of GB of memory)')


def pytest_configure(config):
    config.addinivalue_line('markers',
                            'slow: full resolution optimization run')
    config.addinivalue_line('markers',
                            'fullscale: needs a grid beyond desk scale')


def pytest_collection_modifyitems(config, items):
    skip_slow = pytest.mark.skip(reason='needs --runslow')
    skip_fullscale = pytest.mark.skip(reason='needs --runfullscale')

    for item in items:
        if 'slow' in item.keywords and not config.getoption('--runslow'):
            item.add_marker(skip_slow)

        if ('fullscale' in item.keywords and
                not config.getoption('--runfullscale')):
            item.add_marker(skip_fullscale)


@pytest.fixture
def root_logger():
    '''
    The root logger, with its handlers and level put back afterwards, since
    the console log setup replaces them.
    '''
    root = logging.getLogger('')
    handlers = list(root.handlers)
    level = root.level

    yield root

    for handler in list(root.handlers):
        if handler not in handlers:
            root.removeHandler(handler)
            handler.close()

    for handler in handlers:
        if handler not in root.handlers:
            root.addHandler(handler)

    root.setLevel(level)
