'''
Tests for the per iteration run record
'''
import numpy as np

import pytest

from surface_library.run_record import RunRecord, RunStatus, record_dtype
from surface_library.metrics import SurfaceMetrics


def filled_record():
    record = RunRecord(initial_area=2.5)

    record.add_row(1, 2.4, 0.5, 0.01, newton_invoked=True)
    record.add_row(2, 2.35, 0.50001, 0.02)
    record.add_row(3, 2.36, 0.5, -0.01, reinit_invoked=True)

    return record


def test_columns():
    assert record_dtype.names == ('iter', 'area', 'volume_fraction',
                                  'lambda', 'delta_area', 'newton_invoked',
                                  'reinit_invoked')


def test_add_row():
    record = filled_record()
    rows = record.rows

    assert len(record) == 3
    assert np.array_equal(rows['iter'], [1, 2, 3])
    assert np.allclose(rows['delta_area'], [0.1, 0.05, -0.01])
    assert rows['newton_invoked'].tolist() == [True, False, False]
    assert rows['reinit_invoked'].tolist() == [False, False, True]
    assert record.last_area == 2.36


def test_first_row_without_initial_area():
    record = RunRecord()
    row = record.add_row(1, 2.0, 0.5, 0.0)

    assert row['delta_area'] == 0.0


class TestAreaChange(object):
    def test_windows(self):
        record = filled_record()

        assert np.isclose(record.area_change(1), -0.01)
        assert np.isclose(record.area_change(2), 0.04)
        assert np.isclose(record.area_change(3), 0.14)

    def test_too_short(self):
        record = filled_record()

        assert record.area_change(4) is None
        assert record.area_change(0) is None

    def test_without_initial_area(self):
        record = RunRecord()
        record.add_row(1, 2.0, 0.5, 0.0)
        record.add_row(2, 1.9, 0.5, 0.0)

        assert record.area_change(2) is None
        assert np.isclose(record.area_change(1), 0.1)



@pytest.mark.parametrize('iteration', [3, 2, -1])
def test_iterations_increase(iteration):
    record = filled_record()

    with pytest.raises(ValueError):
        record.add_row(iteration, 2.3, 0.5, 0.0)


class TestStatus(object):
    def test_running(self):
        record = RunRecord()

        assert record.status == RunStatus.running
        assert record.status_string == 'Running'
        assert not record.failed

    def test_finish(self):
        record = filled_record()
        record.finish(RunStatus.converged_area)

        assert record.status_string == 'ConvergedArea'
        assert not record.failed

    def test_fail(self):
        record = filled_record()
        record.fail('volume drift')

        assert record.failed
        assert record.status_string == 'Failed(volume drift)'
        assert record.reason == 'volume drift'


def test_summary_line():
    record = filled_record()
    record.final_metrics = SurfaceMetrics(area=2.3456, volume_fraction=0.35,
                                          lagrange_multiplier=-1.54,
                                          curvature_stddev=0.1)

    assert record.summary_line() == '0.3500,-0.7700,2.3456'


def test_csv(tmpdir):
    path = str(tmpdir.join('run.csv'))
    record = filled_record()

    record.to_csv(path)

    with open(path) as infile:
        lines = infile.read().splitlines()

    assert lines[0] == ','.join(record_dtype.names)
    assert lines[1] == '1,2.4,0.5,0.01,0.1,1,0'
    assert len(lines) == 4

    read_back = RunRecord.from_csv(path)

    assert len(read_back) == 3
    assert np.allclose(read_back.initial_area, 2.5)
    for name in ('iter', 'area', 'volume_fraction', 'lambda', 'delta_area',
                 'newton_invoked', 'reinit_invoked'):
        assert np.allclose(read_back.rows[name].astype(float),
                           record.rows[name].astype(float), rtol=1e-12)


def test_csv_bad_header(tmpdir):
    path = tmpdir.join('bad.csv')
    path.write('iteration,area\n1,2.0\n')

    with pytest.raises(ValueError):
        RunRecord.from_csv(str(path))
