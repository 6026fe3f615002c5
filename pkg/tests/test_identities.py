"""Tests for transformation identities and the certified evaluation table."""

from fractions import Fraction

import pytest

from cuspbound.reports import check_upper
from cuspbound.rigor.identities import (
    TransformationIdentity,
    check_transformation,
    identity_frame,
    sample_points,
)
from cuspbound.rigor.suite import SUITE_KEYS, paper_constants_suite, suite_values

from tests.conftest import SMALL_TRUNCATION


class TestSamplePoints:
    """Test the seeded sample points."""

    def test_seeded(self):
        """Test the same seed gives the same points inside the sampling box."""
        points = sample_points(5, seed=7)
        assert points == sample_points(5, seed=7)
        for x, y in points:
            assert Fraction(1, 5) <= x <= Fraction(1, 2)
            assert Fraction(9, 10) <= y <= Fraction(6, 5)


class TestTransformations:
    """Test both sides of each identity agree at sample points."""

    @pytest.mark.parametrize("identity", list(TransformationIdentity))
    def test_identity_holds(self, identity):
        """Test the balls of both sides meet."""
        report = check_transformation(
            identity, sample_points(2), T=SMALL_TRUNCATION, precision_bits=120
        )
        assert report.passed
        assert report.details["samples"] == 2
        assert report.details["failing"] == []

    def test_frame(self):
        """Test the per-sample table."""
        frame = identity_frame(
            TransformationIdentity.PSI_INVERSION,
            [(Fraction(3, 10), Fraction(1))],
            T=SMALL_TRUNCATION,
            precision_bits=120,
        )
        assert frame.height == 1
        assert frame["identity"][0] == "psi_inversion"
        assert frame["excess"][0] == 0.0

    def test_no_samples(self):
        """Test an empty sample list is rejected."""
        with pytest.raises(ValueError, match="sample"):
            check_transformation(TransformationIdentity.F2_INVERSION, [])


class TestEvaluationTable:
    """Test the reproduced evaluation table."""

    def test_missing_entries(self):
        """Test an empty report list has no table."""
        with pytest.raises(ValueError, match="missing"):
            suite_values([])

    def test_failed_entry(self):
        """Test a failed entry cannot feed the envelopes."""
        failed = check_upper(
            "F_2 <= 1", 2, 1, details={"key": "F2_Z", "displayed": "2.00000"}
        )
        with pytest.raises(ValueError, match="F2_Z"):
            suite_values([failed])

    @pytest.mark.slow
    def test_quick_suite(self, quick_rigor):
        """Test every table entry certifies on coarse grids."""
        reports = paper_constants_suite(quick_rigor)
        assert all(r.passed for r in reports)
        assert set(suite_values(reports)) == set(SUITE_KEYS)
