# cython: boundscheck=False, wraparound=False, cdivision=True
"""Batched projected-Newton refinement of stationary directions (compiled).

Mirrors the arithmetic of the numpy fallback in ``_kernels_py``.
"""

import numpy as np

cimport cython
from libc.math cimport fabs, sqrt

DEF STEP_CAP = 0.5


@cython.boundscheck(False)
@cython.wraparound(False)
def refine(const double[:, :, ::1] a, const double[:, ::1] x0, int max_iter,
           double residual_tol, double step_tol):
    """Drive unit-vector starts toward solutions of A x^2 = lambda x.

    Same contract as the numpy fallback: a is a (3,3,3) fully symmetric
    array, x0 an (n,3) array of unit rows; returns (x, lam, resid).
    """
    cdef Py_ssize_t n = x0.shape[0]
    x_arr = np.array(x0, dtype=np.float64)
    lam_arr = np.zeros(n, dtype=np.float64)
    res_arr = np.zeros(n, dtype=np.float64)
    cdef double[:, ::1] x = x_arr
    cdef double[::1] lam_out = lam_arr
    cdef double[::1] res_out = res_arr

    cdef Py_ssize_t p, it, i, j, k, kmin
    cdef double xi[3]
    cdef double b[3][3]
    cdef double g[3]
    cdef double r[3]
    cdef double u[3]
    cdef double v[3]
    cdef double bu[3]
    cdef double bv[3]
    cdef double lam, rn, amin, dot, norm
    cdef double j11, j12, j21, j22, r1, r2, det, s, t, wn, scale
    cdef double w0, w1, w2

    for p in range(n):
        for i in range(3):
            xi[i] = x[p, i]
        for it in range(max_iter):
            for i in range(3):
                for j in range(3):
                    b[i][j] = a[i, j, 0] * xi[0] + a[i, j, 1] * xi[1] + a[i, j, 2] * xi[2]
            for i in range(3):
                g[i] = b[i][0] * xi[0] + b[i][1] * xi[1] + b[i][2] * xi[2]
            lam = g[0] * xi[0] + g[1] * xi[1] + g[2] * xi[2]
            for i in range(3):
                r[i] = g[i] - lam * xi[i]
            rn = sqrt(r[0] * r[0] + r[1] * r[1] + r[2] * r[2])
            if rn <= residual_tol:
                break
            # Tangent basis: axis of smallest |component|, projected.
            kmin = 0
            amin = fabs(xi[0])
            if fabs(xi[1]) < amin:
                kmin = 1
                amin = fabs(xi[1])
            if fabs(xi[2]) < amin:
                kmin = 2
            for i in range(3):
                u[i] = -xi[kmin] * xi[i]
            u[kmin] += 1.0
            norm = sqrt(u[0] * u[0] + u[1] * u[1] + u[2] * u[2])
            for i in range(3):
                u[i] /= norm
            v[0] = xi[1] * u[2] - xi[2] * u[1]
            v[1] = xi[2] * u[0] - xi[0] * u[2]
            v[2] = xi[0] * u[1] - xi[1] * u[0]
            for i in range(3):
                bu[i] = b[i][0] * u[0] + b[i][1] * u[1] + b[i][2] * u[2]
                bv[i] = b[i][0] * v[0] + b[i][1] * v[1] + b[i][2] * v[2]
            j11 = 2.0 * (u[0] * bu[0] + u[1] * bu[1] + u[2] * bu[2]) - lam
            j12 = 2.0 * (u[0] * bv[0] + u[1] * bv[1] + u[2] * bv[2])
            j21 = 2.0 * (v[0] * bu[0] + v[1] * bu[1] + v[2] * bu[2])
            j22 = 2.0 * (v[0] * bv[0] + v[1] * bv[1] + v[2] * bv[2]) - lam
            r1 = u[0] * r[0] + u[1] * r[1] + u[2] * r[2]
            r2 = v[0] * r[0] + v[1] * r[1] + v[2] * r[2]
            det = j11 * j22 - j12 * j21
            if fabs(det) < 1e-14:
                # Singular tangent Jacobian: plain descent step.
                s = -r1
                t = -r2
            else:
                s = (-r1 * j22 + r2 * j12) / det
                t = (r1 * j21 - r2 * j11) / det
            w0 = s * u[0] + t * v[0]
            w1 = s * u[1] + t * v[1]
            w2 = s * u[2] + t * v[2]
            wn = sqrt(w0 * w0 + w1 * w1 + w2 * w2)
            if wn > STEP_CAP:
                scale = STEP_CAP / wn
                w0 *= scale
                w1 *= scale
                w2 *= scale
            xi[0] += w0
            xi[1] += w1
            xi[2] += w2
            norm = sqrt(xi[0] * xi[0] + xi[1] * xi[1] + xi[2] * xi[2])
            xi[0] /= norm
            xi[1] /= norm
            xi[2] /= norm
            if wn <= step_tol:
                break
        for i in range(3):
            for j in range(3):
                b[i][j] = a[i, j, 0] * xi[0] + a[i, j, 1] * xi[1] + a[i, j, 2] * xi[2]
        for i in range(3):
            g[i] = b[i][0] * xi[0] + b[i][1] * xi[1] + b[i][2] * xi[2]
        lam = g[0] * xi[0] + g[1] * xi[1] + g[2] * xi[2]
        for i in range(3):
            r[i] = g[i] - lam * xi[i]
        for i in range(3):
            x[p, i] = xi[i]
        lam_out[p] = lam
        res_out[p] = sqrt(r[0] * r[0] + r[1] * r[1] + r[2] * r[2])
    return x_arr, lam_arr, res_arr
