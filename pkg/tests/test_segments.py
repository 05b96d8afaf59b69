"""Segment-chain construction and interval bookkeeping."""
import math

import numpy as np
import pytest

from zetaladder import integral, ladder, segments
from zetaladder.errors import PreconditionError

CFG = ladder.LadderConfig()


class TestBuildChain:
    def test_shapes(self, main_cache):
        chain = segments.build_chain(main_cache, CFG, 1.0e4, 100.0, 3)
        assert len(chain.left) == len(chain.right) == 4
        assert chain.left[0] == 1.0e4
        assert chain.right[0] == 1.0e4 + 100.0

    def test_strict_interleaving(self, main_cache):
        chain = segments.build_chain(main_cache, CFG, 1.0e4, 100.0, 3)
        for r in range(4):
            assert chain.left[r] < chain.right[r]
        for r in range(3):
            assert chain.right[r] < chain.left[r + 1]

    def test_microscopic_base_still_interleaves(self, main_cache):
        for T in (1.0e4, 1.0e5):
            chain = segments.build_chain(
                main_cache, CFG, T, 1.0 / math.log(T), 2)
            for r in range(2):
                assert chain.right[r] < chain.left[r + 1]
            assert all(v > 0 for v in segments.metrics(chain).measures)

    def test_endpoints_match_iterates(self, main_cache):
        T, H = 1.0e4, 50.0
        chain = segments.build_chain(main_cache, CFG, T, H, 2)
        assert chain.left == tuple(ladder.reverse_iterates(main_cache, CFG, T, 2))
        assert chain.right == tuple(
            ladder.reverse_iterates(main_cache, CFG, T + H, 2))

    def test_nesting_prefix_bitwise(self, main_cache):
        deep = segments.build_chain(main_cache, CFG, 1.0e4, 100.0, 3)
        shallow = segments.build_chain(main_cache, CFG, 1.0e4, 100.0, 2)
        assert deep.left[:3] == shallow.left
        assert deep.right[:3] == shallow.right

    def test_stays_below_2t(self, main_cache):
        chain = segments.build_chain(main_cache, CFG, 1.0e4, 100.0, 3)
        assert chain.right[-1] <= 2.0e4

    def test_h_guards(self, main_cache):
        with pytest.raises(PreconditionError):
            segments.build_chain(main_cache, CFG, 1.0e4, 0.0, 1)
        with pytest.warns(UserWarning):
            # valid chain, but the base exceeds 0.1 T/ln T (~109 here), so
            # the slowly-growing-base premise is flagged
            segments.build_chain(main_cache, CFG, 1.0e4, 200.0, 1)


class TestMetrics:
    def test_measures_and_gaps(self, main_cache):
        T, H = 1.0e4, 100.0
        chain = segments.build_chain(main_cache, CFG, T, H, 2)
        m = segments.metrics(chain)
        assert m.measures[0] == H
        for r in range(1, 3):
            assert m.measures[r] == chain.right[r] - chain.left[r]
            assert m.gaps[r - 1] == chain.left[r] - chain.right[r - 1]
        assert m.gap_model == pytest.approx(
            (1.0 - integral.EULER_GAMMA) * T / math.log(T), rel=1e-14)

    def test_gap_dominates_measure(self, main_cache):
        # the inter-segment gap is ~T/ln T, far above any admissible base
        chain = segments.build_chain(main_cache, CFG, 1.0e5, 100.0, 2)
        m = segments.metrics(chain)
        assert min(m.gaps) > 10.0 * max(m.measures)

    def test_gap_ratio_band(self, main_cache):
        for T in (1.0e4, 1.0e5):
            chain = segments.build_chain(main_cache, CFG, T, 1.0, 2)
            m = segments.metrics(chain)
            for g in m.gaps:
                assert 0.5 <= g / m.gap_model <= 1.5

    def test_gap_ratio_band_reference_point(self, main_cache):
        chain = segments.build_chain(main_cache, CFG, 1.0e5, 100.0, 3)
        m = segments.metrics(chain)
        for g in m.gaps:
            assert 0.6 <= g / m.gap_model <= 1.4

    def test_measures_stay_below_admissible_ceiling(self, main_cache):
        # measures drift only a few percent per level, so a base comfortably
        # inside the o(T/ln T) guard keeps the whole chain inside it
        T = 1.0e5
        ceiling = 0.1 * T / math.log(T)
        chain = segments.build_chain(main_cache, CFG, T, 0.5 * ceiling, 3)
        assert all(v < ceiling for v in segments.metrics(chain).measures)

    def test_measures_positive(self, main_cache):
        chain = segments.build_chain(main_cache, CFG, 3.0e4, 10.0, 3)
        assert all(v > 0 for v in segments.metrics(chain).measures)


class TestInDelta:
    def test_membership(self, main_cache):
        chain = segments.build_chain(main_cache, CFG, 1.0e4, 100.0, 2)
        assert segments.in_delta(chain, chain.left[1])
        assert segments.in_delta(chain, 0.5 * (chain.left[1] + chain.right[1]))
        # gap midpoints are outside
        assert not segments.in_delta(
            chain, 0.5 * (chain.right[0] + chain.left[1]))
        assert not segments.in_delta(chain, 1.0)


class TestCsv:
    def test_roundtrip_exact(self, main_cache):
        chain = segments.build_chain(main_cache, CFG, 1.0e4, 100.0, 2)
        text = segments.chain_csv(chain)
        lines = text.strip().splitlines()
        assert lines[0] == "r,left,right,measure,gap"
        assert len(lines) == 4
        m = segments.metrics(chain)
        for r, line in enumerate(lines[1:]):
            parts = line.split(",")
            assert int(parts[0]) == r
            # %.17g round-trips float64 exactly
            assert float(parts[1]) == chain.left[r]
            assert float(parts[2]) == chain.right[r]
            assert float(parts[3]) == m.measures[r]
        assert lines[1].endswith(",")  # row 0 has no gap
        assert float(lines[2].split(",")[4]) == m.gaps[0]
