'''
Tests for family sweeps
'''
import os

import numpy as np

import pytest

from surface_library.sweep import (SweepSpec, SweepRow, output_name,
                                   run_sweep, compare_to_reference,
                                   symmetry_residuals)


class TestSweepSpec(object):
    def test_branches(self):
        spec = SweepSpec('p', [0.65, 0.35, 0.5, 0.45, 0.55, 0.4, 0.6], 100)

        assert spec.family == 'P'
        assert spec.start == 0.5
        assert spec.branches() == [[0.55, 0.6, 0.65], [0.45, 0.4, 0.35]]

    def test_start_off_center(self):
        spec = SweepSpec('G', [0.3, 0.35, 0.7], 100)

        assert spec.start == 0.35
        assert spec.branches() == [[0.7], [0.3]]

    def test_duplicates_removed(self):
        spec = SweepSpec('D', [0.5, 0.5, 0.45], 50)

        assert spec.fractions == [0.45, 0.5]

    @pytest.mark.parametrize(('family', 'fractions'),
                             [('Q', [0.5]),
                              ('P', []),
                              ('P', [0.5, 1.0]),
                              ('P', [0.0, 0.5]),
                              ])
    def test_invalid(self, family, fractions):
        with pytest.raises(ValueError):
            SweepSpec(family, fractions, 50)


def test_output_name():
    assert output_name('G', 0.35, '.lsf') == 'G_f0.350.lsf'


def test_row_csv_line():
    row = SweepRow(0.35, H=-0.7712, A=2.23456, status='ConvergedArea')

    assert row.csv_line() == '0.3500,-0.7712,2.2346'
    assert not row.failed
    assert SweepRow(0.4, status='Failed(no surface)').failed


def make_rows(values):
    return [SweepRow(f, H=H, A=A, status='ConvergedArea')
            for f, H, A in values]


def test_compare_to_reference():
    rows = make_rows([(0.35, -0.80, 2.23 * 1.01),
                      (0.5, 0.01, 2.34),
                      (0.52, 0.0, 2.34)])

    deviations = compare_to_reference(rows, 'P')

    assert len(deviations) == 2
    f, dH, dA = deviations[0]
    assert f == 0.35
    assert np.isclose(dH, -0.03)
    assert np.isclose(dA, 0.01)


def test_symmetry_residuals():
    rows = make_rows([(0.4, -0.5, 2.30),
                      (0.45, -0.24, 2.33),
                      (0.5, 0.0, 2.34),
                      (0.6, 0.49, 2.31)])

    residuals = symmetry_residuals(rows)

    assert len(residuals) == 1
    f, h_sum, a_diff = residuals[0]
    assert f == 0.4
    assert np.isclose(h_sum, -0.01)
    assert np.isclose(a_diff, 0.01 / 2.30)


def test_run_sweep(tmpdir):
    out_dir = str(tmpdir.join('sweep'))
    spec = SweepSpec('P', [0.45, 0.5, 0.55], 24,
                     settings={'optimizer.max_iters': 3,
                               'optimizer.log_every': 0})

    rows = run_sweep(spec, out_dir=out_dir)

    assert [r.f for r in rows] == [0.45, 0.5, 0.55]

    for row in rows:
        assert not row.failed
        assert row.iterations == 3
        assert os.path.isfile(os.path.join(out_dir,
                                           output_name('P', row.f, '.csv')))
        assert os.path.isfile(os.path.join(out_dir,
                                           output_name('P', row.f, '.lsf')))

    # mean curvature grows with the volume fraction of phase 1
    assert rows[0].H < rows[1].H < rows[2].H
