'''
Slab parallel kernels for the stencils and reductions on the hot path of
an optimization run.

Every kernel loops over z slabs with numba's prange, so a worker always
owns whole slabs ``values[:, :, k]``.  Per cell kernels do the same
arithmetic in the same order whatever the slab split, and reductions sum
each slab serially before adding the slab totals in slab order, so all
results are bitwise independent of the worker count.
'''
import logging

import numpy as np
import numba
from numba import njit, prange

logger = logging.getLogger(__name__)


def available_workers():
    'the most threads the kernels can use in this process'
    return int(numba.config.NUMBA_NUM_THREADS)


def get_workers():
    return int(numba.get_num_threads())


def set_workers(workers):
    '''
    Set the number of threads the kernels run on.

    :param workers: a count between 1 and available_workers(), or None to
                    keep the current setting

    :returns: the count in effect
    '''
    if workers is None:
        return get_workers()

    workers = int(workers)
    if not 1 <= workers <= available_workers():
        raise ValueError('workers must be between 1 and {0}, got {1}'
                         .format(available_workers(), workers))

    numba.set_num_threads(workers)
    logger.debug('stencil kernels running on {0} workers'.format(workers))

    return workers


@njit(parallel=True, cache=True)
def _central_norm(values, hx, hy, hz, out):
    nx, ny, nz = values.shape

    for k in prange(nz):
        kp = k + 1 if k + 1 < nz else 0
        km = k - 1 if k > 0 else nz - 1

        for j in range(ny):
            jp = j + 1 if j + 1 < ny else 0
            jm = j - 1 if j > 0 else ny - 1

            for i in range(nx):
                ip = i + 1 if i + 1 < nx else 0
                im = i - 1 if i > 0 else nx - 1

                gx = (values[ip, j, k] - values[im, j, k]) / (2.0 * hx)
                gy = (values[i, jp, k] - values[i, jm, k]) / (2.0 * hy)
                gz = (values[i, j, kp] - values[i, j, km]) / (2.0 * hz)

                out[i, j, k] = np.sqrt(gx * gx + gy * gy + gz * gz)


@njit(parallel=True, cache=True)
def _godunov_norm(values, hx, hy, hz, speed, out):
    nx, ny, nz = values.shape

    for k in prange(nz):
        kp = k + 1 if k + 1 < nz else 0
        km = k - 1 if k > 0 else nz - 1

        for j in range(ny):
            jp = j + 1 if j + 1 < ny else 0
            jm = j - 1 if j > 0 else ny - 1

            for i in range(nx):
                ip = i + 1 if i + 1 < nx else 0
                im = i - 1 if i > 0 else nx - 1

                v = values[i, j, k]
                s = speed[i, j, k]

                if s == 0.0:
                    gx = (values[ip, j, k] - values[im, j, k]) / (2.0 * hx)
                    gy = (values[i, jp, k] - values[i, jm, k]) / (2.0 * hy)
                    gz = (values[i, j, kp] - values[i, j, km]) / (2.0 * hz)
                    out[i, j, k] = np.sqrt(gx * gx + gy * gy + gz * gz)
                    continue

                bx = (v - values[im, j, k]) / hx
                fx = (values[ip, j, k] - v) / hx
                by = (v - values[i, jm, k]) / hy
                fy = (values[i, jp, k] - v) / hy
                bz = (v - values[i, j, km]) / hz
                fz = (values[i, j, kp] - v) / hz

                if s > 0.0:
                    total = (max(max(bx, 0.0) ** 2, min(fx, 0.0) ** 2) +
                             max(max(by, 0.0) ** 2, min(fy, 0.0) ** 2) +
                             max(max(bz, 0.0) ** 2, min(fz, 0.0) ** 2))
                else:
                    total = (max(min(bx, 0.0) ** 2, max(fx, 0.0) ** 2) +
                             max(min(by, 0.0) ** 2, max(fy, 0.0) ** 2) +
                             max(min(bz, 0.0) ** 2, max(fz, 0.0) ** 2))

                out[i, j, k] = np.sqrt(total)


@njit(parallel=True, cache=True)
def _curvature(values, hx, hy, hz, floor, out, degenerate):
    nx, ny, nz = values.shape

    for k in prange(nz):
        kp = k + 1 if k + 1 < nz else 0
        km = k - 1 if k > 0 else nz - 1
        count = 0

        for j in range(ny):
            jp = j + 1 if j + 1 < ny else 0
            jm = j - 1 if j > 0 else ny - 1

            for i in range(nx):
                ip = i + 1 if i + 1 < nx else 0
                im = i - 1 if i > 0 else nx - 1

                v = values[i, j, k]

                px = (values[ip, j, k] - values[im, j, k]) / (2.0 * hx)
                py = (values[i, jp, k] - values[i, jm, k]) / (2.0 * hy)
                pz = (values[i, j, kp] - values[i, j, km]) / (2.0 * hz)

                dxx = ((values[ip, j, k] - 2.0 * v + values[im, j, k]) /
                       (hx * hx))
                dyy = ((values[i, jp, k] - 2.0 * v + values[i, jm, k]) /
                       (hy * hy))
                dzz = ((values[i, j, kp] - 2.0 * v + values[i, j, km]) /
                       (hz * hz))

                dxy = (values[ip, jp, k] - values[ip, jm, k] -
                       values[im, jp, k] + values[im, jm, k]) / (4.0 * hx * hy)
                dxz = (values[ip, j, kp] - values[ip, j, km] -
                       values[im, j, kp] + values[im, j, km]) / (4.0 * hx * hz)
                dyz = (values[i, jp, kp] - values[i, jp, km] -
                       values[i, jm, kp] + values[i, jm, km]) / (4.0 * hy * hz)

                px2 = px * px
                py2 = py * py
                pz2 = pz * pz

                norm = np.sqrt(px2 + py2 + pz2)
                if norm < floor:
                    count += 1
                    norm = floor

                numerator = (dxx * (py2 + pz2) +
                             dyy * (px2 + pz2) +
                             dzz * (px2 + py2) -
                             2.0 * px * py * dxy -
                             2.0 * px * pz * dxz -
                             2.0 * py * pz * dyz)

                out[i, j, k] = numerator / norm ** 3

        degenerate[k] = count


@njit(parallel=True, cache=True)
def _transport_sweep(q, ax, ay, az, fixed, hx, hy, hz, dtau, out):
    nx, ny, nz = q.shape

    for k in prange(nz):
        kp = k + 1 if k + 1 < nz else 0
        km = k - 1 if k > 0 else nz - 1

        for j in range(ny):
            jp = j + 1 if j + 1 < ny else 0
            jm = j - 1 if j > 0 else ny - 1

            for i in range(nx):
                v = q[i, j, k]

                if fixed[i, j, k]:
                    out[i, j, k] = v
                    continue

                ip = i + 1 if i + 1 < nx else 0
                im = i - 1 if i > 0 else nx - 1

                a = ax[i, j, k]
                b = ay[i, j, k]
                c = az[i, j, k]

                if a > 0.0:
                    dx = (v - q[im, j, k]) / hx
                else:
                    dx = (q[ip, j, k] - v) / hx

                if b > 0.0:
                    dy = (v - q[i, jm, k]) / hy
                else:
                    dy = (q[i, jp, k] - v) / hy

                if c > 0.0:
                    dz = (v - q[i, j, km]) / hz
                else:
                    dz = (q[i, j, kp] - v) / hz

                out[i, j, k] = v - dtau * (a * dx + b * dy + c * dz)


@njit(parallel=True, cache=True)
def _slab_sums(values, out):
    nx, ny, nz = values.shape

    for k in prange(nz):
        total = 0.0

        for j in range(ny):
            for i in range(nx):
                total += values[i, j, k]

        out[k] = total


def _as_array(values):
    return np.asarray(values, dtype=np.float64)


def central_norm(values, h):
    values = _as_array(values)
    out = np.empty(values.shape)

    _central_norm(values, h[0], h[1], h[2], out)

    return out


def godunov_norm(values, h, speed):
    '''
    speed may be a scalar or an array with the grid shape; only its sign
    is used, and zero speed gives the central norm
    '''
    values = _as_array(values)
    speed = _as_array(speed)

    if speed.ndim == 0:
        speed = np.full(values.shape, float(speed))

    out = np.empty(values.shape)
    _godunov_norm(values, h[0], h[1], h[2], speed, out)

    return out


def curvature(values, h, gradient_floor):
    '''
    :returns: (div(grad / |grad|) array, count of cells where |grad| was
              floored)
    '''
    values = _as_array(values)
    out = np.empty(values.shape)
    degenerate = np.zeros(values.shape[2], dtype=np.int64)

    _curvature(values, h[0], h[1], h[2], float(gradient_floor), out,
               degenerate)

    return out, int(degenerate.sum())


def transport_sweep(q, speeds, fixed, h, dtau):
    '''
    One upwind step of q_tau + a . grad(q) = 0; cells flagged in fixed keep
    their values.
    '''
    out = np.empty(q.shape)
    _transport_sweep(q, speeds[0], speeds[1], speeds[2],
                     np.asarray(fixed, dtype=np.bool_), h[0], h[1], h[2],
                     float(dtau), out)

    return out


def ordered_sum(values):
    '''
    Sum of a grid shaped array, slab by slab in z order.
    '''
    values = _as_array(values)
    partial = np.empty(values.shape[2])

    _slab_sums(values, partial)

    total = 0.0
    for s in partial:
        total += s

    return float(total)
