"""Evaluator checks against independent references.

Reference values were computed once with mpmath at 30 decimal digits
(siegeltheta / siegelz / zeta) and frozen here, so the suite does not
depend on mpmath being importable.  If it is installed, a handful of
fresh cross-checks run as well.
"""
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from zetaladder import engine
from zetaladder.errors import DomainError

try:
    import mpmath
except ImportError:  # pragma: no cover - mpmath is a test extra
    mpmath = None

# mpmath.siegeltheta, 30 dps
THETA_REF = {
    10.0: -3.0670743962898952917,
    1000.0: 2034.5464280380316087,
    1.0e6: 5488816.3530784034449,
}
# mpmath.siegelz, 30 dps
Z_REF = {
    100.0: 2.692697056664463475,
    1000.0: 0.99779463752158661399,
}
ZETA_HALF_SQ = 2.1326352914004895683   # zeta(1/2)^2, mpmath 30 dps
ZSQ_300 = 0.59750892225476470424       # |zeta(1/2+300i)|^2
ZSQ_1E4 = 0.11655035773290294055       # |zeta(1/2+10^4 i)|^2


class TestTheta:
    def test_reference_values(self):
        for t, ref in THETA_REF.items():
            got = engine.theta(t)
            assert got == pytest.approx(ref, rel=0, abs=5e-9 * max(1, t * 1e-7) + 5e-9), t

    def test_gram_points(self):
        # theta vanishes at the first Gram point and hits pi at the second
        assert abs(engine.theta(17.8455995)) < 1e-6
        assert abs(engine.theta(23.1702827) - math.pi) < 1e-6

    def test_reference_values_tight_low(self):
        # below ~1e4 the asymptotic series is good to ~1e-10 absolute
        assert engine.theta(10.0) == pytest.approx(THETA_REF[10.0], abs=1e-9)
        assert engine.theta(1000.0) == pytest.approx(THETA_REF[1000.0], abs=1e-9)

    def test_matches_loggamma_route(self):
        # the asymptotic expansion must agree with the exact log-gamma
        # formula well inside both of their domains
        ts = np.geomspace(10.0, 2.0e5, 40)
        asym = engine.theta_block(ts)
        exact = engine._theta_oracle(ts)
        assert np.max(np.abs(asym - exact)) < 2e-9

    def test_domain_error(self):
        with pytest.raises(DomainError):
            engine.theta(0.5)

    @given(st.floats(min_value=20.0, max_value=1e6))
    @settings(max_examples=25, deadline=None)
    def test_monotone_above_two_pi(self, t):
        # theta'(t) ~ 0.5*log(t/2pi) > 0 for t > 2*pi
        assert engine.theta(t + 1.0) > engine.theta(t)


class TestOracle:
    def test_reference_values(self):
        for t, ref in Z_REF.items():
            assert engine.z_oracle(t) == pytest.approx(ref, abs=1e-12)

    def test_zeta_sq_at_zero(self):
        assert engine.zeta_sq(0.0) == pytest.approx(ZETA_HALF_SQ, rel=1e-13)

    def test_zeta_sq_reference_values(self):
        # accelerated branch is near reference precision; the main-series
        # branch carries the ~1e-9 phase-rounding envelope of Z
        assert engine.zeta_sq(300.0) == pytest.approx(ZSQ_300, rel=1e-11)
        assert engine.zeta_sq(1.0e4) == pytest.approx(ZSQ_1E4, rel=1e-9)

    def test_first_zero_bracketed(self):
        # the first critical-line zero lies in (14.13, 14.14)
        assert engine.z_oracle(14.13) * engine.z_oracle(14.14) < 0

    def test_first_zero_magnitude(self):
        t0 = 14.134725
        assert abs(engine.z_oracle(t0)) < 1e-6
        assert engine.zeta_sq(t0) < 1e-8

    def test_zeta_sq_is_square_of_z(self):
        # below the crossover zeta_sq squares the oracle, above it z_fast
        assert engine.zeta_sq(20.0) == engine.z_oracle(20.0) ** 2
        assert engine.zeta_sq(100.0) == engine.z_fast(100.0) ** 2

    def test_zero_count_to_100(self):
        ts = np.arange(0.0, 100.0 + 1e-9, 0.01)
        z = engine.z_oracle_block(ts)
        signs = np.sign(z)
        crossings = int(np.sum(signs[1:] * signs[:-1] < 0))
        assert crossings == 29

    @pytest.mark.skipif(mpmath is None, reason="mpmath not installed")
    def test_fresh_mpmath_crosscheck(self):
        mpmath.mp.dps = 25
        for t in (0.5, 17.5, 251.0, 4001.0):
            ref = float(mpmath.siegelz(t))
            assert engine.z_oracle(t) == pytest.approx(ref, abs=2e-12 * max(1.0, abs(ref)))


class TestFastPath:
    def test_domain_error_below_crossover(self):
        with pytest.raises(DomainError):
            engine.z_fast(10.0)

    def test_against_oracle_mixed_band(self):
        rng = np.random.default_rng(7)
        ts = np.sort(rng.uniform(31.0, 2.0e4, 80))
        zf = engine.z_fast_block(ts)
        zo = engine.z_oracle_block(ts)
        assert np.all(np.abs(zf - zo) <= 1e-6 + 1e-7 * np.abs(zo))

    def test_accelerated_branch_tight(self):
        # below the series switch point the accelerated branch should be
        # close to reference precision
        ts = np.linspace(31.0, 499.0, 60)
        zf = engine.z_fast_block(ts)
        zo = engine.z_oracle_block(ts)
        assert np.max(np.abs(zf - zo)) < 1e-10

    def test_main_series_branch_spot(self):
        for t, ref in Z_REF.items():
            assert engine.z_fast(t) == pytest.approx(ref, abs=2e-8)

    def test_seam_continuity(self):
        # both branches must sit on the oracle at the dispatch boundary
        # (Z itself has slope ~5 here, so compare against the oracle rather
        # than across the seam)
        eps = 1e-6
        for t in (engine.DEFAULT.rs_min - eps, engine.DEFAULT.rs_min + eps):
            assert abs(engine.z_fast(t) - engine.z_oracle(t)) < 2e-8

    def test_zeta_sq_growth_envelope(self):
        # |zeta(1/2+it)|^2 = O(t^{1/3}): the implied constant matters at
        # this scale -- isolated peaks reach ~4x t^{1/3} -- so check a
        # 5x envelope pointwise and the bare bound in the typical sense
        rng = np.random.default_rng(2024)
        ts = np.sort(rng.uniform(1e3, 1e6, 100))
        vals = engine.zeta_sq_block(ts)
        ratios = vals / ts ** (1.0 / 3.0)
        assert np.max(ratios) < 9.0          # |zeta| <= 3 t^{1/6} pointwise
        assert np.median(ratios) < 0.1       # typical values sit far below
        assert np.mean(ratios < 1.0) >= 0.85  # bare bound holds off-peak

    @given(st.floats(min_value=50.0, max_value=9.0e5))
    @settings(max_examples=20, deadline=None)
    def test_zeta_sq_nonnegative(self, t):
        assert engine.zeta_sq(t) >= 0.0

    def test_block_matches_scalar(self):
        ts = np.array([60.0, 777.0, 12345.0])
        blk = engine.z_fast_block(ts)
        for i, t in enumerate(ts):
            assert blk[i] == engine.z_fast(float(t))


class TestBackendParity:
    def test_fallback_matches_active_backend(self):
        from zetaladder import _zkernel_py, backend
        if backend.TAG == "py":
            pytest.skip("compiled kernel not available")
        ts = np.linspace(501.0, 50000.0, 400)
        th = engine.theta_block(ts)
        a = backend.rs_z_block(ts, th, engine._CHEB, engine._NTERMS)
        b = _zkernel_py.rs_z_block(ts, th, engine._CHEB, engine._NTERMS)
        assert np.max(np.abs(a - b)) < 1e-11


class TestEulerMaclaurinInternals:
    def test_chunk_agrees_across_truncation(self):
        # doubling the series length must not move the result
        ts = np.array([500.0, 1000.0, 2500.0])
        a = engine._em_zeta_chunk(ts, 4000)[0]
        b = engine._em_zeta_chunk(ts, 8000)[0]
        assert np.max(np.abs(a - b)) < 1e-12

    def test_remainder_bound_is_honest(self):
        ts = np.array([800.0])
        vals, bound = engine._em_zeta_chunk(ts, 2000)
        # frozen from mpmath.zeta(0.5+800j), 30 dps
        ref = complex(0.91828770041604004887, 1.7150501540787850291)
        assert abs(vals[0] - ref) <= max(bound, 1e-13)

    @pytest.mark.skipif(mpmath is None, reason="mpmath not installed")
    def test_fresh_zeta_crosscheck(self):
        mpmath.mp.dps = 25
        ref = complex(mpmath.zeta(mpmath.mpc("0.5", "50")))
        got = engine._em_zeta_block(np.array([50.0]))[0]
        assert abs(got - ref) < 1e-13
