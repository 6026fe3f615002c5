"""Tests for echelon bases at levels 1 and 2."""

from fractions import Fraction

import pytest

from cuspbound.basis import (
    dim_sk1,
    dim_sk2,
    echelon_basis,
    echelon_reports,
    expand_linear_combo,
    genfunc_crosscheck,
    miller_basis,
)
from cuspbound.errors import UnsupportedParameterError
from cuspbound.forms import delta8_series, delta_series

from tests.conftest import SMALL_TRUNCATION


class TestDimensions:
    """Test dimension formulas."""

    @pytest.mark.parametrize(
        ("k", "expected"), [(2, 0), (6, 0), (8, 1), (10, 1), (12, 2), (26, 5)]
    )
    def test_level_two(self, k, expected):
        """Test dim S_k(Gamma_0(2)) = floor(k/4) - 1 from k = 8."""
        assert dim_sk2(k) == expected

    @pytest.mark.parametrize(
        ("k", "expected"), [(10, 0), (12, 1), (14, 0), (24, 2), (26, 1), (36, 3)]
    )
    def test_level_one(self, k, expected):
        """Test dim S_k(SL_2(Z)) including the k = 2 mod 12 drop."""
        assert dim_sk1(k) == expected

    def test_odd_weight(self):
        """Test odd weights are rejected."""
        with pytest.raises(UnsupportedParameterError):
            dim_sk2(9)
        with pytest.raises(UnsupportedParameterError):
            dim_sk1(13)


class TestEchelonBasis:
    """Test the level 2 echelon basis."""

    def test_weight_eight_is_delta8(self):
        """Test F_{8,1} is the unique normalized cusp form of weight 8."""
        basis = echelon_basis(8, SMALL_TRUNCATION)
        assert basis.dimension == 1
        assert basis.ell == 2
        assert basis.form(1).agrees_with(delta8_series(SMALL_TRUNCATION))

    def test_echelon_shape(self):
        """Test F_{k,m} = q^m + O(q^ell)."""
        basis = echelon_basis(20, SMALL_TRUNCATION)
        assert basis.ell == 5
        assert basis.kprime == 0
        for m in range(1, basis.ell):
            form = basis.form(m)
            expected = [1 if n == m else 0 for n in range(1, 5)]
            assert form.window(1, basis.ell) == expected
            assert form.trunc == SMALL_TRUNCATION

    def test_kprime_two(self):
        """Test weights 2 mod 4 carry k' = 2."""
        basis = echelon_basis(14, SMALL_TRUNCATION)
        assert basis.kprime == 2
        assert basis.dimension == dim_sk2(14)

    def test_index_out_of_range(self):
        """Test form(m) rejects m outside 1..dimension."""
        basis = echelon_basis(12, SMALL_TRUNCATION)
        with pytest.raises(UnsupportedParameterError):
            basis.form(0)
        with pytest.raises(UnsupportedParameterError):
            basis.form(3)

    def test_truncation_must_exceed_ell(self):
        """Test T <= ell is rejected."""
        with pytest.raises(UnsupportedParameterError, match="exceed ell"):
            echelon_basis(20, 5)

    def test_unsupported_weight(self):
        """Test weights below 8 have no basis."""
        with pytest.raises(UnsupportedParameterError):
            echelon_basis(6, 10)

    def test_reports(self):
        """Test the echelon property report over a range of weights."""
        (report,) = echelon_reports(range(8, 31, 2), 20)
        assert report.passed
        assert report.details["failing"] == []


class TestLinearCombinations:
    """Test expansion of forms from echelon coordinates."""

    def test_leading_coefficients(self):
        """Test sum a(m) F_{k,m} has a(m) at q^m."""
        form = expand_linear_combo(16, [3, Fraction(-1, 2), 5], 20)
        assert form.window(1, 4) == [3, Fraction(-1, 2), 5]
        assert form.trunc == 20

    def test_delta_in_weight_twelve(self):
        """Test Delta = F_{12,1} - 24 F_{12,2}."""
        form = expand_linear_combo(12, [1, -24], SMALL_TRUNCATION)
        assert form.agrees_with(delta_series(SMALL_TRUNCATION))

    def test_wrong_length(self):
        """Test the coefficient count must equal the dimension."""
        with pytest.raises(UnsupportedParameterError, match="Expected 2"):
            expand_linear_combo(12, [1], 10)


class TestGeneratingFunction:
    """Test the two-variable generating function against the basis."""

    @pytest.mark.parametrize("k", [8, 10, 12, 16])
    def test_crosscheck(self, k):
        """Test the coefficients of p^(-m) equal F_{k,m}."""
        report = genfunc_crosscheck(k, T_q=12)
        assert report.passed
        assert report.details["mismatches"] == []


class TestMillerBasis:
    """Test the level one basis."""

    def test_weight_twelve(self):
        """Test the level one weight 12 basis is Delta."""
        basis = miller_basis(12, SMALL_TRUNCATION)
        assert basis.level == 1
        assert basis.form(1).agrees_with(delta_series(SMALL_TRUNCATION))

    def test_weight_twenty_four(self):
        """Test the two-dimensional space at weight 24."""
        basis = miller_basis(24, SMALL_TRUNCATION)
        assert basis.dimension == 2
        assert basis.form(1).window(1, 3) == [1, 0]
        assert basis.form(2).window(1, 3) == [0, 1]

    def test_weight_below_twelve(self):
        """Test level one weights below 12 are rejected."""
        with pytest.raises(UnsupportedParameterError):
            miller_basis(10, SMALL_TRUNCATION)
