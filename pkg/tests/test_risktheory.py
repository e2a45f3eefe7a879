import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fourier_minnorm import (
    ConfigurationError,
    NumericalInconsistencyError,
    RegimeError,
    SingularConstantError,
    StructureError,
    asymptotic_bound,
    build_spectrum,
    classify_grid,
    concentration_bound,
    lowest_risks,
    risk_over_closed,
    risk_over_plain,
    risk_trace_over,
    risk_trace_under,
    risk_under_closed,
    theory_risk,
)
from fourier_minnorm.risktheory import _finalize_risk

Q_GRID = [0.0, 0.5, 1.0, 2.0]
R_GRID = [0.0, 0.3, 0.5, 1.0, 1.5]


def aligned_grids(D_values=(8, 16, 32), taus=(2, 4)):
    for D in D_values:
        for tau in taus:
            if D % tau:
                continue
            n = D // tau
            for l in sorted({1, 2, tau}):
                if l * n <= D:
                    yield D, n, l * n


class TestOverClosedVsTrace:
    def test_grid_agreement(self):
        worst = 0.0
        for D, n, p in aligned_grids():
            grid = classify_grid(D, n, p)
            for r in R_GRID:
                s = build_spectrum(D, r)
                for q in Q_GRID:
                    closed = risk_over_closed(s, grid, q)
                    trace = risk_trace_over(s, grid, q)
                    worst = max(worst, abs(closed.risk - trace.risk))
        assert worst <= 1e-9

    def test_breakdown_terms_agree(self):
        s = build_spectrum(16, 1.0)
        grid = classify_grid(16, 4, 8)
        closed = risk_over_closed(s, grid, 0.5)
        trace = risk_trace_over(s, grid, 0.5)
        assert closed.P_q == pytest.approx(trace.P_q, abs=1e-10)
        assert closed.Q_q1 == pytest.approx(trace.Q_q1, abs=1e-10)
        assert closed.Q_q2 == pytest.approx(trace.Q_q2, abs=1e-10)

    def test_trace_handles_general_grid(self):
        s = build_spectrum(6, 1.0)
        value = risk_trace_over(s, classify_grid(6, 2, 3), 1.0)
        assert math.isfinite(value.risk)

    def test_closed_rejects_general_grid(self):
        s = build_spectrum(6, 1.0)
        with pytest.raises(StructureError):
            risk_over_closed(s, classify_grid(6, 2, 3), 1.0)

    def test_single_sample_grids(self):
        # n = 1 (tau = D): every p is aligned
        s = build_spectrum(8, 1.0)
        for p in (1, 3, 8):
            grid = classify_grid(8, 1, p)
            closed = risk_over_closed(s, grid, 1.0).risk
            trace = risk_trace_over(s, grid, 1.0).risk
            assert closed == pytest.approx(trace, abs=1e-12)

    @given(
        n=st.integers(min_value=1, max_value=8),
        l=st.integers(min_value=1, max_value=4),
        extra=st.integers(min_value=0, max_value=4),
        q=st.floats(min_value=0.0, max_value=2.0, allow_nan=False),
        r=st.floats(min_value=0.0, max_value=2.0, allow_nan=False),
    )
    @settings(max_examples=80, deadline=None)
    def test_agreement_on_random_aligned_grids(self, n, l, extra, q, r):
        tau = l + extra
        D, p = tau * n, l * n
        s = build_spectrum(D, r)
        grid = classify_grid(D, n, p)
        closed = risk_over_closed(s, grid, q).risk
        trace = risk_trace_over(s, grid, q).risk
        assert abs(closed - trace) <= 1e-9


class TestSpecialCases:
    def test_full_truncation_plain_risk(self):
        for D, n in [(8, 2), (16, 4), (64, 8)]:
            s = build_spectrum(D, 1.0)
            grid = classify_grid(D, n, D)
            assert abs(risk_over_plain(s, grid) - (1 - n / D)) <= 1e-14

    def test_square_full_model_zero_risk(self):
        for q in Q_GRID:
            s = build_spectrum(16, 1.0)
            grid = classify_grid(16, 16, 16)
            assert abs(risk_over_closed(s, grid, q).risk) <= 1e-12

    def test_plain_equals_closed_at_q0(self):
        for D, n, p in aligned_grids():
            for r in R_GRID:
                s = build_spectrum(D, r)
                grid = classify_grid(D, n, p)
                assert abs(risk_over_plain(s, grid) - risk_over_closed(s, grid, 0.0).risk) <= 1e-12

    def test_p_equals_n_closed_form_value(self):
        # algebraic simplification: risk at l = 1 is twice the covariance tail
        s = build_spectrum(8, 1.0)
        grid = classify_grid(8, 2, 2)
        expected = 2 * s.c_r * s.tail_sum(2.0, start=2)
        for q in Q_GRID:
            assert risk_over_closed(s, grid, q).risk == pytest.approx(expected, abs=1e-12)


class TestUnder:
    def test_grid_agreement(self):
        worst = 0.0
        for D in (8, 16, 32):
            for tau in (2, 4):
                n = D // tau
                for p in range(1, n + 1):
                    grid = classify_grid(D, n, p)
                    for r in R_GRID:
                        s = build_spectrum(D, r)
                        worst = max(worst, abs(risk_under_closed(s, grid) - risk_trace_under(s, grid)))
        assert worst <= 1e-9

    def test_flat_spectrum_formula(self):
        # r = 0 collapses to 1 + p(1/n - 2/D)
        for D, n, p in [(8, 4, 2), (16, 4, 3), (64, 8, 8)]:
            s = build_spectrum(D, 0.0)
            grid = classify_grid(D, n, p)
            assert risk_under_closed(s, grid) == pytest.approx(1 + p * (1 / n - 2 / D), abs=1e-13)

    def test_boundary_matches_over(self):
        for D, n in [(8, 2), (16, 4), (32, 8)]:
            for r in R_GRID:
                s = build_spectrum(D, r)
                grid = classify_grid(D, n, n)
                under = risk_under_closed(s, grid)
                for q in Q_GRID:
                    assert abs(under - risk_over_closed(s, grid, q).risk) <= 1e-12

    def test_trace_handles_unaligned_d(self):
        s = build_spectrum(7, 1.0)
        assert math.isfinite(risk_trace_under(s, classify_grid(7, 3, 2)))

    def test_closed_needs_aligned_d(self):
        s = build_spectrum(7, 1.0)
        with pytest.raises(StructureError):
            risk_under_closed(s, classify_grid(7, 3, 2))

    def test_wrong_regime(self):
        s = build_spectrum(8, 1.0)
        with pytest.raises(RegimeError):
            risk_under_closed(s, classify_grid(8, 2, 4))
        with pytest.raises(RegimeError):
            risk_trace_under(s, classify_grid(8, 2, 4))

    def test_empty_complement_zero(self):
        s = build_spectrum(8, 1.0)
        assert risk_trace_under(s, classify_grid(8, 8, 8)) == 0.0


class TestProofIdentity:
    def test_q1_equals_p_at_matched_exponent(self):
        for D, n, p in aligned_grids():
            for r in (0.3, 0.5, 1.0, 1.5):
                s = build_spectrum(D, r)
                b = risk_over_closed(s, classify_grid(D, n, p), r)
                assert abs(b.Q_q1 - b.P_q) <= 1e-10


class TestAsymptoticBound:
    def test_dr_closed_form(self):
        s = build_spectrum(64, 1.0)
        grid = classify_grid(64, 8, 16)  # l = 2
        assert asymptotic_bound(s, grid).d_r == pytest.approx(1 / 2 - 1 / 3, rel=1e-14)

    def test_bound_dominates_risk(self):
        for r in (0.6, 0.75, 1.0, 1.5):
            for n in (8, 16):
                for l in (2, 4):
                    for tau in (2 * l, 4 * l):
                        D = tau * n
                        s = build_spectrum(D, r)
                        grid = classify_grid(D, n, l * n)
                        risk = risk_over_closed(s, grid, r).risk
                        assert asymptotic_bound(s, grid).bound >= risk

    def test_large_d_envelope(self):
        # at D = 4096, n = 64 the exact constants sit within 5% of the
        # simplified large-D form
        s = build_spectrum(4096, 1.0)
        grid = classify_grid(4096, 64, 128)
        report = asymptotic_bound(s, grid)
        assert report.bound <= report.large_D_bound * 1.05

    def test_domain_validation(self):
        s = build_spectrum(64, 0.4)
        with pytest.raises(RegimeError):
            asymptotic_bound(s, classify_grid(64, 8, 16))
        s = build_spectrum(64, 1.0)
        with pytest.raises(RegimeError):
            asymptotic_bound(s, classify_grid(64, 8, 8))  # l = 1


class TestConcentrationBound:
    def test_matched_unit_exponents(self):
        T_q, _ = concentration_bound(1.0, 1.0, 1.0)
        assert T_q == pytest.approx(4 * math.sqrt(10 / 3), rel=1e-14)

    def test_tail_at_zero_is_two(self):
        _, tail = concentration_bound(1.0, 1.0, 0.0)
        assert tail == 2.0

    def test_tail_at_tq(self):
        T_q, tail = concentration_bound(1.0, 1.0, 4 * math.sqrt(10 / 3))
        assert tail == pytest.approx(2 * math.exp(-1), rel=1e-12)

    def test_rejects_half(self):
        with pytest.raises(SingularConstantError):
            concentration_bound(1.0, 0.5, 1.0)

    def test_rejects_r_below_q(self):
        with pytest.raises(RegimeError):
            concentration_bound(0.6, 0.8, 1.0)

    def test_rejects_negative_t(self):
        with pytest.raises(ConfigurationError):
            concentration_bound(1.0, 1.0, -0.5)


class TestLowestRisks:
    def test_over_beats_under_at_matched_exponents(self):
        s = build_spectrum(64, 1.0)
        result = lowest_risks(s, 4, 1.0)
        assert result.over_star < result.under_star
        assert result.argmin_p_over > 4

    def test_under_monotone_for_smooth(self):
        for r in (1.0, 1.5):
            s = build_spectrum(64, r)
            values = [risk_under_closed(s, classify_grid(64, 8, p)) for p in range(1, 9)]
            assert all(b <= a + 1e-15 for a, b in zip(values, values[1:]))

    def test_scan_includes_full_truncation(self):
        s = build_spectrum(32, 1.0)
        result = lowest_risks(s, 4, 1.0)
        candidates = [risk_over_closed(s, classify_grid(32, 4, l * 4), 1.0).risk for l in range(1, 9)]
        assert result.over_star == pytest.approx(min(candidates), rel=0)

    def test_needs_aligned_d(self):
        s = build_spectrum(10, 1.0)
        with pytest.raises(StructureError):
            lowest_risks(s, 3, 1.0)


class TestFinalizeRisk:
    def test_positive_passthrough(self):
        assert _finalize_risk(0.25) == (0.25, False)

    def test_tiny_negative_clamped_with_flag(self):
        value, clamped = _finalize_risk(-5e-11)
        assert value == 0.0 and clamped

    def test_large_negative_raises(self):
        with pytest.raises(NumericalInconsistencyError):
            _finalize_risk(-1e-6)


class TestTheoryRisk:
    def test_regime_dispatch(self):
        s = build_spectrum(16, 1.0)
        under = classify_grid(16, 8, 4)
        assert theory_risk(s, under, 1.0) == risk_under_closed(s, under)
        over = classify_grid(16, 4, 8)
        assert theory_risk(s, over, 1.0) == risk_over_closed(s, over, 1.0).risk
        general = classify_grid(16, 3, 5)
        assert theory_risk(s, general, 1.0) == risk_trace_over(s, general, 1.0).risk

    def test_under_value_independent_of_q(self):
        s = build_spectrum(16, 1.0)
        grid = classify_grid(16, 8, 4)
        assert theory_risk(s, grid, 0.0) == theory_risk(s, grid, 2.0)
