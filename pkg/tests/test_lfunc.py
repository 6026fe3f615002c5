"""Tests for the symmetric square L-function constants and Petersson norm floors."""

import math
from fractions import Fraction

import pytest

from cuspbound.core.constants import LfuncDefaults
from cuspbound.envelopes import (
    lfunc_constants_suite,
    lfunc_residue_identity,
    orthogonal_norm_floor,
    petersson_lower_level1,
    petersson_lower_newform,
)
from cuspbound.envelopes.lfunc import (
    alpha,
    beta,
    gamma_log_derivative,
    partial_sum_floor,
    residue_closed_form,
)
from cuspbound.errors import UnsupportedParameterError
from cuspbound.rigor.intervals import hi, lo, working_precision


class TestResidueIdentity:
    """Test the smoothing kernel."""

    def test_closed_form_at_two(self):
        """Test (x + 9)(x - 1)^9 / (10! x^10) at x = 2."""
        expected = Fraction(11, math.factorial(10) * 1024)
        assert residue_closed_form(Fraction(2)) == expected

    def test_closed_form_below_one(self):
        """Test the kernel integral vanishes for x < 1."""
        assert residue_closed_form(Fraction(1, 2)) == 0

    def test_excluded_point(self):
        """Test x = 1 is rejected."""
        with pytest.raises(UnsupportedParameterError):
            residue_closed_form(Fraction(1))

    @pytest.mark.parametrize("x", [Fraction(2), Fraction(1, 2)])
    def test_quadrature_agrees(self, x):
        """Test quadrature on Re s = 2 reproduces the closed form."""
        report = lfunc_residue_identity(x)
        assert report.passed
        assert report.provenance == "smoothing kernel"


class TestZeroFreeRegion:
    """Test the width of the zero-free region and the digamma estimate."""

    def test_alpha_and_beta(self):
        """Test alpha < 1/2 and 1 - beta shrinks with k."""
        with working_precision(100):
            assert hi(alpha(8)) < 0.5
            assert 0 < lo(1 - beta(100)) < hi(1 - beta(100)) < lo(1 - beta(8))

    def test_digamma_estimate(self):
        """Test G'/G(1 + alpha) <= 10 log k - 2 at k = 8 and p = 2."""
        with working_precision(100):
            s = 1 + alpha(8)
            gap = gamma_log_derivative(s, 8, 2) - (10 * math.log(8) - 2)
            assert hi(gap) < 0


class TestIntegrals:
    """Test the two integrals bounding L(Sym^2 g, 1)."""

    def test_partial_sum_at_eight(self):
        """Test the truncated sum stops at n = 4 for k = 8."""
        series = 1 + Fraction(1, 4) + Fraction(1, 9) + Fraction(1, 16)
        expected = Fraction(57 * 47**9, 48**10) * series
        assert partial_sum_floor(8) == expected
        assert partial_sum_floor(8) >= Fraction(LfuncDefaults.I_LOWER)

    def test_partial_sum_nondecreasing(self):
        """Test more terms enter as k grows."""
        floors = [partial_sum_floor(k) for k in range(8, 61, 2)]
        assert floors == sorted(floors)

    def test_odd_weight(self):
        """Test odd weights are rejected."""
        with pytest.raises(UnsupportedParameterError):
            partial_sum_floor(9)

    @pytest.mark.parametrize(
        ("ks", "ps"), [([], [2]), ([8, 9], [2]), ([8], [11]), ([8], [])]
    )
    def test_suite_arguments(self, ks, ps):
        """Test empty or unsupported sample sets are rejected."""
        with pytest.raises(UnsupportedParameterError):
            lfunc_constants_suite(ks, ps)

    @pytest.mark.slow
    def test_suite(self):
        """Test the five constant checks on a short weight range."""
        reports = lfunc_constants_suite(range(8, 21, 2), precision_bits=100)
        assert len(reports) == 5
        assert reports[1].passed
        assert reports[3].passed


class TestPeterssonFloors:
    """Test the lower bounds for Petersson norms."""

    def test_newform_floor_matches_basis_floor(self):
        """Test 2/(43 pi^2) equals 6/pi^2 * 2/3 / 86."""
        with working_precision(100):
            newform = petersson_lower_newform(20)
            basis_floor, _ = orthogonal_norm_floor(20)
            assert lo(newform) <= hi(basis_floor)
            assert lo(basis_floor) <= hi(newform)

    def test_oldform_below_newform(self):
        """Test the oldform floor is the smaller one."""
        newform, oldform = orthogonal_norm_floor(16)
        assert hi(oldform) < lo(newform)

    def test_level_one_floor(self):
        """Test the level one floor is positive from k = 12."""
        assert lo(petersson_lower_level1(12)) > 0
        with pytest.raises(UnsupportedParameterError):
            petersson_lower_level1(10)

    def test_unsupported_weight(self):
        """Test weights below 8 are rejected."""
        with pytest.raises(UnsupportedParameterError):
            petersson_lower_newform(6)
