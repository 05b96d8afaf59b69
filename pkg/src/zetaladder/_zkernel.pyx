# cython: boundscheck=False, wraparound=False, cdivision=True
# cython: language_level=3
"""Compiled main-sum kernel.

Scalar loops over the block; gcc vectorizes the cos-heavy inner loop under
-O3 -ffast-math.  Contract identical to `_zkernel_py.rs_z_block` (which is
the reference implementation), but last-ulp cos differences mean the two are
only equal to ~1e-12 absolute, not bitwise.
"""
import numpy as np

cimport numpy as cnp
from libc.math cimport cos, floor, log, sqrt

cnp.import_array()


def rs_z_block(ts, thetas, cheb, nterms):
    """Z(t) for each t: main sum over n <= floor(sqrt(t/2pi)) + remainder."""
    cdef double[::1] tv = np.ascontiguousarray(ts, dtype=np.float64)
    cdef double[::1] hv = np.ascontiguousarray(thetas, dtype=np.float64)
    cdef double[:, ::1] cv = np.ascontiguousarray(cheb, dtype=np.float64)
    cdef Py_ssize_t[::1] deg = np.ascontiguousarray(nterms, dtype=np.intp)
    cdef Py_ssize_t m = tv.shape[0]
    cdef Py_ssize_t nrows = cv.shape[0]
    out = np.empty(m, dtype=np.float64)
    cdef double[::1] ov = out

    # shared log/rsqrt tables so the hot loop carries no transcendental log
    cdef double tmax = 0.0
    cdef Py_ssize_t i
    for i in range(m):
        if tv[i] > tmax:
            tmax = tv[i]
    cdef Py_ssize_t lmax = <Py_ssize_t>floor(sqrt(tmax / (2.0 * np.pi))) + 2
    logn_arr = np.log(np.arange(1, lmax + 1, dtype=np.float64))
    rsq_arr = 1.0 / np.sqrt(np.arange(1, lmax + 1, dtype=np.float64))
    cdef double[::1] logn = logn_arr
    cdef double[::1] rsq = rsq_arr

    cdef Py_ssize_t n, N, k, j
    cdef double t, th, a, p, u, x, s, rem, xk, b0, b1, b2
    with nogil:
        for i in range(m):
            t = tv[i]
            th = hv[i]
            a = sqrt(t / (2.0 * 3.141592653589793))
            N = <Py_ssize_t>floor(a)
            p = a - N
            s = 0.0
            for n in range(N):
                s += cos(th - t * logn[n]) * rsq[n]
            u = 2.0 * p - 1.0
            x = 1.0 / a
            rem = 0.0
            xk = 1.0
            for k in range(nrows):
                b1 = 0.0
                b2 = 0.0
                for j in range(deg[k] - 1, 0, -1):
                    b0 = 2.0 * u * b1 - b2 + cv[k, j]
                    b2 = b1
                    b1 = b0
                rem += (u * b1 - b2 + cv[k, 0]) * xk
                xk *= x
            ov[i] = 2.0 * s + (1.0 if N % 2 == 1 else -1.0) * sqrt(x) * rem
    return out
