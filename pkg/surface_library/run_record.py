'''
Per iteration history of an optimization run.
'''
import logging

import numpy as np

logger = logging.getLogger(__name__)


# dtype for storing the rows of a run in a numpy array
record_dtype = np.dtype([('iter', np.int64),
                         ('area', np.float64),
                         ('volume_fraction', np.float64),
                         ('lambda', np.float64),
                         ('delta_area', np.float64),
                         ('newton_invoked', np.bool_),
                         ('reinit_invoked', np.bool_)])

CSV_FORMAT = ['%d', '%.15g', '%.15g', '%.15g', '%.15g', '%d', '%d']


class RunStatus(object):
    running = 'Running'
    converged_area = 'ConvergedArea'
    max_iters = 'MaxIters'
    failed = 'Failed'


class RunRecord(object):
    '''
    Rows of (iter, area, volume_fraction, lambda, delta_area,
    newton_invoked, reinit_invoked), plus the terminal status of the run.

    delta_area of a row is the previous row's area minus this row's area,
    so a decreasing area gives positive values.  The first row is compared
    against initial_area.
    '''
    def __init__(self, initial_area=None):
        self.initial_area = initial_area
        self._rows = []

        self.status = RunStatus.running
        self.reason = None
        self.final_metrics = None
        self.f_target = None

    def __repr__(self):
        return ('{0.__class__.__name__}(rows={1}, status={2!r})'
                .format(self, len(self), self.status_string))

    def __len__(self):
        return len(self._rows)

    @property
    def rows(self):
        return np.array(self._rows, dtype=record_dtype)

    @property
    def status_string(self):
        if self.status == RunStatus.failed:
            return '{0}({1})'.format(self.status, self.reason)

        return self.status

    @property
    def failed(self):
        return self.status == RunStatus.failed

    @property
    def last_area(self):
        if self._rows:
            return self._rows[-1][1]

        return self.initial_area

    def area_change(self, window):
        '''
        area `window` rows back minus the last area, or None if the record
        is not that long yet
        '''
        if window < 1 or len(self._rows) < window:
            return None

        if len(self._rows) == window:
            before = self.initial_area
        else:
            before = self._rows[-window - 1][1]

        if before is None:
            return None

        return before - self._rows[-1][1]

    def add_row(self, iteration, area, f, lam,
                newton_invoked=False, reinit_invoked=False):
        if self._rows and iteration <= self._rows[-1][0]:
            raise ValueError('iterations must be strictly increasing: '
                             '{0} after {1}'.format(iteration,
                                                    self._rows[-1][0]))

        previous = self.last_area
        delta_area = 0.0 if previous is None else previous - area

        row = (int(iteration), float(area), float(f), float(lam),
               float(delta_area), bool(newton_invoked), bool(reinit_invoked))
        self._rows.append(row)

        return np.array(row, dtype=record_dtype)

    def finish(self, status, reason=None):
        self.status = status
        self.reason = reason

    def fail(self, reason):
        logger.warning('run failed: {0}'.format(reason))
        self.finish(RunStatus.failed, reason)

    def summary_line(self):
        '''
        "f,H,A" of the final surface
        '''
        m = self.final_metrics

        return '{0:.4f},{1:.4f},{2:.4f}'.format(m.volume_fraction,
                                                m.mean_curvature_avg,
                                                m.area)

    def to_csv(self, path):
        rows = self.rows
        table = np.column_stack([rows[name].astype(np.float64)
                                 for name in record_dtype.names])

        np.savetxt(path, table, fmt=CSV_FORMAT, delimiter=',',
                   header=','.join(record_dtype.names), comments='')

    @classmethod
    def from_csv(cls, path):
        with open(path) as infile:
            header = infile.readline().strip().split(',')

            if tuple(header) != record_dtype.names:
                raise ValueError('unexpected run record header: {0}'
                                 .format(header))

            data = np.loadtxt(infile, delimiter=',', ndmin=2)

        record = cls()
        for line in data.reshape(-1, len(record_dtype.names)):
            record._rows.append((int(line[0]), line[1], line[2], line[3],
                                 line[4], bool(line[5]), bool(line[6])))

        if record._rows:
            first = record._rows[0]
            record.initial_area = first[1] + first[4]

        return record
