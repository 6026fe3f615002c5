"""Tests for the integral bounds, the Petersson norm and the final coefficient bound."""

import pytest
from mpmath import iv, mp

from cuspbound.envelopes import (
    B_of_k,
    b_of_k_agreement,
    b_of_k_conservative,
    b_of_k_downstream,
    b_of_k_recomputed,
    bound_I1,
    bound_I2,
    bound_I3,
    certify_form,
    certify_level_one,
    deligne_check,
    dims,
    inner_product_breakdown,
    inner_product_upper,
    level_one_bound,
    theorem1_bound,
    theorem_reports,
)
from cuspbound.envelopes.theorem import (
    b_of_k_reports,
    b_of_k_scan,
    integral_constant_reports,
    pre_c_reports,
)
from cuspbound.errors import UnsupportedParameterError
from cuspbound.forms import delta8_series, delta_series
from cuspbound.rigor.intervals import hi, ival, lo
from cuspbound.series import QSeries

from tests.conftest import SMALL_TRUNCATION


class TestDimensions:
    """Test the split of S_k(2) into newforms and oldforms."""

    @pytest.mark.parametrize(
        ("k", "expected"), [(8, (0, 1)), (12, (1, 0)), (14, (0, 2)), (24, (2, 1))]
    )
    def test_dims(self, k, expected):
        """Test (dim S_k(1), newform count)."""
        assert dims(k) == expected

    def test_odd_weight(self):
        """Test odd weights are rejected."""
        with pytest.raises(UnsupportedParameterError):
            dims(9)


class TestIntegralBounds:
    """Test the three integrals and their constants."""

    @pytest.mark.parametrize("bound", [bound_I1, bound_I2, bound_I3])
    def test_index_range(self, bound):
        """Test m must lie in 1..ell - 1."""
        assert bound(16, 3) > 0
        with pytest.raises(UnsupportedParameterError):
            bound(16, 4)
        with pytest.raises(UnsupportedParameterError):
            bound(16, 0)

    def test_decay_in_m(self):
        """Test the sector 2 and 3 integrals decay like exp(-4 pi m v)."""
        assert bound_I2(20, 2) < bound_I2(20, 1)
        assert bound_I3(20, 4) < bound_I3(20, 1)

    @pytest.mark.slow
    def test_constants(self):
        """Test the recomputed constants match the printed ones."""
        assert all(r.passed for r in integral_constant_reports())


class TestPeterssonNorm:
    """Test the upper bound for the Petersson norm of F_{k,m}."""

    def test_breakdown(self):
        """Test displayed and recomputed terms side by side."""
        breakdown = inner_product_breakdown(12, 1)
        assert len(breakdown.displayed) == 4
        assert len(breakdown.recomputed) == 4
        for larger, a, b in zip(
            breakdown.larger, breakdown.displayed, breakdown.recomputed
        ):
            assert larger == max(a, b)
        assert all(1 <= i <= 4 for i in breakdown.recomputed_exceeds)

    def test_upper_dominates_terms(self):
        """Test the norm bound is at least the sum of the displayed terms."""
        breakdown = inner_product_breakdown(16, 2)
        assert inner_product_upper(16, 2) >= sum(breakdown.displayed) * (1 - 1e-12)

    def test_invalid_index(self):
        """Test m = ell is rejected."""
        with pytest.raises(UnsupportedParameterError):
            inner_product_breakdown(12, 3)


class TestFinalConstants:
    """Test the constants 103 and B(k)."""

    def test_pre_c_constants(self):
        """Test the leading constant, exponents and bases before and after C."""
        reports = pre_c_reports()
        assert all(r.passed for r in reports)
        assert reports[0].details["k8_value"] > 44

    def test_b_of_k_positive(self):
        """Test B(k) and its recomputed counterpart are positive."""
        assert lo(B_of_k(8)) > 0
        assert lo(b_of_k_recomputed(8)) > 0

    def test_conservative(self):
        """Test the conservative B(k) dominates both variants."""
        k = 20
        conservative = hi(b_of_k_conservative(k))
        assert conservative >= hi(B_of_k(k))
        assert conservative >= hi(b_of_k_recomputed(k))

    def test_scan(self):
        """Test the scan tabulates both logarithms."""
        frame, crossover = b_of_k_scan(range(8, 31, 2))
        assert frame.columns == ["k", "log_printed", "log_recomputed"]
        assert frame.height == 12
        assert 8 <= crossover <= 30


class TestBOfKAgreement:
    """Test the printed B(k) against its recomputation."""

    def test_disagreement_at_eight(self):
        """Test the recomputed B(8) exceeds the printed one beyond tolerance."""
        report = b_of_k_agreement(8)
        assert not report.passed
        assert report.tolerance == 0.02
        assert report.details["recomputed"] > 1.02 * report.details["printed"]

    @pytest.mark.parametrize("k", [12, 20])
    def test_agreement(self, k):
        """Test weights where the recomputation stays below the printed value."""
        report = b_of_k_agreement(k)
        assert report.passed
        assert report.details["k"] == k

    def test_downstream_at_eight(self):
        """Test the larger recomputed value is used where they disagree."""
        assert hi(b_of_k_downstream(8)) == hi(b_of_k_recomputed(8))
        assert hi(b_of_k_downstream(8)) > hi(B_of_k(8))

    def test_downstream_printed(self):
        """Test the printed value is used where it dominates."""
        assert hi(b_of_k_downstream(20)) == hi(B_of_k(20))

    def test_bound_uses_larger_constant(self):
        """Test the weight 8 bound carries the recomputed B(8)."""
        decay = iv.exp(-ival("7.288"))
        recomputed = iv.sqrt(iv.log(8)) * (103 + b_of_k_recomputed(8) * decay)
        printed = iv.sqrt(iv.log(8)) * (103 + B_of_k(8) * decay)
        bound = theorem1_bound(8, [1], 1)
        assert lo(bound) >= lo(recomputed) * (1 - mp.mpf(10) ** -20)
        assert lo(bound) > hi(printed)

    def test_reports_include_agreement(self):
        """Test the scan reports carry the agreement check."""
        reports = b_of_k_reports(range(8, 21, 2))
        assert len(reports) == 2
        agreement = reports[1]
        assert agreement.details["k"] == 8
        assert not agreement.passed
        assert 8 in agreement.details["beyond_tolerance"]
        assert 12 not in agreement.details["beyond_tolerance"]


class TestCoefficientBound:
    """Test the explicit bound against exact coefficients."""

    def test_bound_grows_with_n(self):
        """Test the bound scales like d(n) n^((k-1)/2)."""
        assert hi(theorem1_bound(8, [1], 1)) < lo(theorem1_bound(8, [1], 2))

    def test_wrong_length(self):
        """Test the coefficient count must equal dim S_k(2)."""
        with pytest.raises(UnsupportedParameterError, match="Expected 2"):
            theorem1_bound(12, [1], 5)

    def test_certify_delta8(self):
        """Test the weight 8 newform satisfies the bound."""
        report = certify_form(8, [1], 60, strict=True)
        assert report.passed
        assert report.details["k"] == 8

    def test_certify_combination(self):
        """Test a two-term combination at weight 12."""
        assert certify_form(12, [1, -24], 60).passed

    def test_truncation_must_exceed_range(self):
        """Test T <= n_max is rejected."""
        with pytest.raises(UnsupportedParameterError):
            certify_form(8, [1], 60, T=60)

    def test_deligne(self):
        """Test the Deligne bound on Delta_8 and Delta."""
        assert deligne_check(delta8_series(SMALL_TRUNCATION), 8, 39).passed
        assert deligne_check(delta_series(SMALL_TRUNCATION), 12, 39).passed

    def test_deligne_violation(self):
        """Test a coefficient above d(n) n^((k-1)/2) fails."""
        series = QSeries.from_coefficients([0, 1, 1000])
        report = deligne_check(series, 8, 2)
        assert not report.passed
        assert report.details["worst_n"] == 2

    def test_level_one(self):
        """Test Delta against the level one bound."""
        assert certify_level_one(12, [1], 50).passed
        with pytest.raises(UnsupportedParameterError):
            level_one_bound(24, [1], 3)

    @pytest.mark.slow
    def test_theorem_reports(self):
        """Test the full final assembly with a short randomized run."""
        reports = theorem_reports(n_max=60, count=5)
        failures = [r for r in reports if not r.passed]
        assert [r.details["k"] for r in failures] == [8]
        assert failures[0].claim.startswith("recomputed B(8)")
