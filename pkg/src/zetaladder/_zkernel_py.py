"""Pure-numpy fallback for the main-sum kernel.

Same contract as the compiled `_zkernel.rs_z_block`; see `backend` for how one
of the two gets selected.  Vectorizes over the sample block term-by-term: for
a block of m heights and main sums of length <= L this does O(m*L) work in
numpy chunks, which is the right shape when blocks come from quadrature
(m ~ 2048).

Bit-level note: numpy's SIMD cos and the C library's scalar cos may differ in
the last ulp, so the two backends are *not* bitwise interchangeable.  Anything
persisted (the integral cache) records which backend produced it.
"""
import numpy as np

_INV_SQRT = None
_LOGN = None


def _tables(limit):
    """log n and 1/sqrt(n) for n = 1..limit, grown geometrically and cached."""
    global _INV_SQRT, _LOGN
    if _LOGN is None or len(_LOGN) < limit:
        n = np.arange(1, max(limit, 64) * 2 + 1, dtype=np.float64)
        _LOGN = np.log(n)
        _INV_SQRT = 1.0 / np.sqrt(n)
    return _LOGN, _INV_SQRT


def _clenshaw(coef, u):
    b1 = np.zeros_like(u)
    b2 = np.zeros_like(u)
    for c in coef[:0:-1]:
        b1, b2 = 2.0 * u * b1 - b2 + c, b1
    return u * b1 - b2 + coef[0]


def rs_z_block(ts, thetas, cheb, nterms):
    """Z(t) for each t in `ts` by main sum + remainder series.

    ts, thetas : float64 arrays, same length; every t large enough that the
        main sum has at least one term (t > 2*pi).
    cheb : (5, dmax) float64, remainder coefficient rows in [-1,1] variable.
    nterms : int array, number of valid coefficients per row.
    """
    ts = np.ascontiguousarray(ts, dtype=np.float64)
    th = np.ascontiguousarray(thetas, dtype=np.float64)
    a = np.sqrt(ts / (2.0 * np.pi))
    N = np.floor(a).astype(np.int64)
    p = a - N
    Nmax = int(N.max())
    Nmin = int(N.min())
    logn, rsq = _tables(Nmax)
    s = np.zeros_like(ts)
    for n in range(1, Nmin + 1):
        s += np.cos(th - ts * logn[n - 1]) * rsq[n - 1]
    for n in range(Nmin + 1, Nmax + 1):
        m = N >= n
        s[m] += np.cos(th[m] - ts[m] * logn[n - 1]) * rsq[n - 1]
    u = 2.0 * p - 1.0
    x = 1.0 / a
    rem = np.zeros_like(ts)
    xk = np.ones_like(ts)
    for k in range(cheb.shape[0]):
        rem += _clenshaw(cheb[k, : int(nterms[k])], u) * xk
        xk *= x
    sign = np.where(N % 2 == 1, 1.0, -1.0)
    return 2.0 * s + sign * np.sqrt(x) * rem
