import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fourier_minnorm import (
    CoefficientCovariance,
    ConfigurationError,
    Regime,
    RegimeError,
    build_spectrum,
    classify_grid,
    cr_bounds,
)
from fourier_minnorm.model import folded_sums


class TestBuildSpectrum:
    def test_decay_sequence_d4(self):
        s = build_spectrum(4, 1.0)
        np.testing.assert_allclose(s.t, [1.0, 1 / 2, 1 / 3, 1 / 4], rtol=0, atol=0)

    def test_single_term_normaliser(self):
        assert build_spectrum(1, 1.0).c_r == 1.0

    def test_cr_d4_r1(self):
        # direct summation oracle: 1 + 1/4 + 1/9 + 1/16 = 205/144
        s = build_spectrum(4, 1.0)
        assert s.c_r == pytest.approx(144 / 205, rel=1e-15)

    def test_cr_normalisation_identity(self):
        for D in (1, 2, 7, 64, 1000):
            for r in (0.0, 0.3, 0.5, 1.0, 2.5):
                s = build_spectrum(D, r)
                total = s.c_r * math.fsum((s.t ** (2 * r))[::-1])
                assert total == pytest.approx(1.0, rel=1e-14)

    def test_monotone_endpoints(self):
        s = build_spectrum(37, 0.7)
        assert np.all(np.diff(s.t) < 0)
        assert s.t[0] == 1.0
        assert s.t[-1] == pytest.approx(1 / 37, rel=0)

    def test_rejects_bad_dimension(self):
        with pytest.raises(ConfigurationError):
            build_spectrum(0, 1.0)

    def test_rejects_negative_r(self):
        with pytest.raises(ConfigurationError):
            build_spectrum(4, -0.1)

    def test_bitwise_reproducible(self):
        a, b = build_spectrum(129, 1.3), build_spectrum(129, 1.3)
        assert np.array_equal(a.t, b.t)
        assert a.c_r == b.c_r

    def test_arrays_are_read_only(self):
        s = build_spectrum(8, 1.0)
        with pytest.raises(ValueError):
            s.t[0] = 2.0


class TestCrBounds:
    def test_d1_r1_closed_forms(self):
        lower, upper = cr_bounds(1, 1.0)
        assert lower == 1.0
        assert upper == 2.0
        assert lower <= build_spectrum(1, 1.0).c_r <= upper

    def test_sandwich_d4_r1(self):
        lower, upper = cr_bounds(4, 1.0)
        assert lower <= 144 / 205 <= upper

    def test_sandwich_large_shallow(self):
        s = build_spectrum(1024, 0.6)
        lower, upper = cr_bounds(1024, 0.6)
        assert lower < s.c_r < upper

    @pytest.mark.parametrize("r", [0.5, 0.2, 0.0])
    def test_rejects_shallow_decay(self, r):
        with pytest.raises(RegimeError):
            cr_bounds(64, r)

    @given(
        D=st.integers(min_value=1, max_value=5000),
        r=st.floats(min_value=0.51, max_value=4.0, allow_nan=False),
    )
    @settings(max_examples=60, deadline=None)
    def test_sandwich_property(self, D, r):
        lower, upper = cr_bounds(D, r)
        assert lower <= build_spectrum(D, r).c_r <= upper


class TestClassifyGrid:
    @pytest.mark.parametrize(
        "D,n,p,regime,tau,l",
        [
            (8, 2, 4, Regime.OVER_ALIGNED, 4, 2),
            (8, 4, 3, Regime.UNDER, 2, None),
            (8, 3, 5, Regime.OVER_GENERAL, None, None),
            (8, 2, 2, Regime.OVER_ALIGNED, 4, 1),
            (12, 4, 12, Regime.OVER_ALIGNED, 3, 3),
        ],
    )
    def test_examples(self, D, n, p, regime, tau, l):
        g = classify_grid(D, n, p)
        assert (g.regime, g.tau, g.l) == (regime, tau, l)

    def test_rejects_out_of_range(self):
        with pytest.raises(ConfigurationError):
            classify_grid(8, 2, 9)
        with pytest.raises(ConfigurationError):
            classify_grid(8, 9, 4)
        with pytest.raises(ConfigurationError):
            classify_grid(8, 2, 0)

    @given(
        D=st.integers(min_value=1, max_value=128),
        n=st.integers(min_value=1, max_value=128),
        p=st.integers(min_value=1, max_value=128),
    )
    @settings(max_examples=200, deadline=None)
    def test_tag_consistency(self, D, n, p):
        if not (n <= D and p <= D):
            with pytest.raises(ConfigurationError):
                classify_grid(D, n, p)
            return
        g = classify_grid(D, n, p)
        assert (g.tau is not None) == (D % n == 0)
        assert (g.l is not None) == (p % n == 0)
        if g.regime is Regime.UNDER:
            assert p < n
        elif g.regime is Regime.OVER_ALIGNED:
            assert p >= n and p % n == 0
        else:
            assert p > n and p % n != 0
        assert classify_grid(D, n, p) == g


class TestCoefficientCovariance:
    @pytest.mark.parametrize("D,r", [(4, 1.0), (64, 0.0), (256, 1.5)])
    def test_unit_trace(self, D, r):
        cov = CoefficientCovariance(build_spectrum(D, r), q_weight=1.0)
        assert cov.trace() == pytest.approx(1.0, rel=1e-14)
        assert cov.diagonal().sum() == pytest.approx(1.0, rel=1e-13)

    def test_diagonal_matches_definition(self):
        s = build_spectrum(4, 1.0)
        cov = CoefficientCovariance(s)
        np.testing.assert_allclose(cov.diagonal(), s.c_r * s.t**2, rtol=1e-15)

    def test_rejects_negative_weighting(self):
        with pytest.raises(ConfigurationError):
            CoefficientCovariance(build_spectrum(4, 1.0), q_weight=-0.5)


class TestFoldedSums:
    def test_plain_fold(self):
        out = folded_sums(np.arange(6, dtype=float), 3)
        np.testing.assert_allclose(out, [3.0, 5.0, 7.0])

    def test_pads_partial_block(self):
        out = folded_sums(np.arange(5, dtype=float), 3)
        np.testing.assert_allclose(out, [3.0, 5.0, 2.0])

    def test_compensated_matches_plain(self):
        rng = np.random.default_rng(7)
        values = rng.standard_normal(128)
        np.testing.assert_allclose(
            folded_sums(values, 8, compensated=True),
            folded_sums(values, 8, compensated=False),
            rtol=1e-12,
        )
