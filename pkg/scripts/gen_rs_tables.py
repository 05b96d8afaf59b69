#!/usr/bin/env python3
"""Regenerate src/zetaladder/_rs_tables.py.

The Riemann-Siegel remainder after the main sum, rescaled as

    (Z(t) - mainsum(t)) * (-1)^(N-1) * (t/2pi)^(1/4),   a = sqrt(t/2pi), N = floor(a)

is an analytic function of p = a - N with an asymptotic expansion in
x = (t/2pi)^(-1/2).  Rather than transcribing the classical closed forms for
the coefficient functions C_k(p) (third and higher derivatives of the theta
kernel, easy to get wrong by a constant), this script measures them directly:

  1. fix p, evaluate the scaled remainder at several N with mpmath at 40 digits
     (t = 2pi (N+p)^2 keeps p exact),
  2. least-squares fit a degree-6 polynomial in x; the low coefficients are
     C_0(p)..C_4(p) to ~1e-12 or better,
  3. repeat on a Chebyshev grid in p over [0,1] and fit Chebyshev series.

Sanity anchors checked here: C_0 must equal
cos(2pi(p^2 - p - 1/16))/cos(2pi p) and C_1(1/4) = 1/96, C_1(1/2) = 0.

Takes a few minutes; output is frozen into the repo so the package itself
never needs mpmath.
"""

import sys
import numpy as np
import mpmath as mp

mp.mp.dps = 40

N_SET = [40, 48, 57, 68, 81, 113, 160, 226]
FIT_DEGREE = 6          # in x; coefficients 5,6 absorb higher-order terms
N_PNODES = 96           # Chebyshev sample points in p over [0,1]
KEEP = 5                # C_0..C_4
CHEB_CUT = 1e-16        # drop trailing Chebyshev coefficients below this * scale


def scaled_remainder(N, p):
    a = mp.mpf(N) + mp.mpf(p)
    t = 2 * mp.pi * a * a
    th = mp.siegeltheta(t)
    s = mp.fsum(mp.cos(th - t * mp.log(n)) / mp.sqrt(n) for n in range(1, N + 1))
    return float((mp.siegelz(t) - 2 * s) * (-1) ** (N - 1) * mp.sqrt(a)), float(1 / a)


def fit_at(p):
    xs, rs = [], []
    for N in N_SET:
        r, x = scaled_remainder(N, p)
        rs.append(r)
        xs.append(x)
    V = np.vander(np.array(xs), FIT_DEGREE + 1, increasing=True)
    coef, *_ = np.linalg.lstsq(V, np.array(rs), rcond=None)
    resid = np.max(np.abs(V @ coef - rs))
    if resid > 1e-13:
        raise RuntimeError(f"poor fit at p={p}: residual {resid:.2e}")
    return coef[:KEEP]


def psi_exact(p):
    pp = mp.mpf(p)
    den = mp.cos(2 * mp.pi * pp)
    if abs(den) < mp.mpf("1e-8"):
        return None
    return float(mp.cos(2 * mp.pi * (pp * pp - pp - mp.mpf(1) / 16)) / den)


def main():
    # Chebyshev-Gauss nodes mapped to [0,1]
    j = np.arange(N_PNODES)
    pc = 0.5 * (1.0 + np.cos((2 * j + 1) * np.pi / (2 * N_PNODES)))
    samples = np.empty((N_PNODES, KEEP))
    for i, p in enumerate(pc):
        samples[i] = fit_at(p)
        psi = psi_exact(p)
        if psi is not None and abs(samples[i, 0] - psi) > 1e-11:
            raise RuntimeError(f"C0 disagrees with theta-kernel form at p={p}")
        if i % 16 == 0:
            print(f"  sampled {i}/{N_PNODES}", file=sys.stderr)

    xc = 2.0 * pc - 1.0
    series = []
    for k in range(KEEP):
        full = np.polynomial.chebyshev.chebfit(xc, samples[:, k], N_PNODES - 1)
        # the high-order tail is extraction noise; cut at its floor and zero
        # sub-floor entries (this also enforces the parity of each C_k)
        noise = np.median(np.abs(full[40:]))
        signal = np.nonzero(np.abs(full) > 8 * noise)[0]
        deg = max(int(signal.max()) + 1, 9)
        c = full[:deg].copy()
        c[np.abs(c) <= 8 * noise] = 0.0
        err = np.max(np.abs(np.polynomial.chebyshev.chebval(xc, c) - samples[:, k]))
        print(f"C_{k}: degree {deg - 1}, max node error {err:.2e}", file=sys.stderr)
        series.append(c)

    # independent anchors
    c1_quarter = np.polynomial.chebyshev.chebval(2 * 0.25 - 1, series[1])
    assert abs(c1_quarter - 1.0 / 96.0) < 1e-10, c1_quarter
    c1_half = np.polynomial.chebyshev.chebval(0.0, series[1])
    assert abs(c1_half) < 1e-10, c1_half

    with open("src/zetaladder/_rs_tables.py", "w") as f:
        f.write('"""Chebyshev tables for the Riemann-Siegel correction terms.\n\n')
        f.write("Generated by scripts/gen_rs_tables.py; do not edit by hand.\n")
        f.write("Each series represents C_k(p) on p in [0,1] (argument 2p-1).\n")
        f.write('"""\n\nimport numpy as np\n\n')
        names = []
        for k, c in enumerate(series):
            name = f"RS_C{k}"
            names.append(name)
            f.write(f"{name} = np.array([\n")
            for v in c:
                f.write(f"    {v!r},\n")
            f.write("])\n\n")
        f.write("RS_CHEB = [" + ", ".join(names) + "]\n")
        maxdeg = max(len(c) for c in series)
        f.write(f"\nRS_CHEB_PACKED = np.zeros(({KEEP}, {maxdeg}))\n")
        f.write("for _k, _c in enumerate(RS_CHEB):\n")
        f.write("    RS_CHEB_PACKED[_k, :len(_c)] = _c\n")
    print("wrote src/zetaladder/_rs_tables.py", file=sys.stderr)


if __name__ == "__main__":
    main()
