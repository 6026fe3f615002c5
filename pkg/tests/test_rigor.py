"""Tests for interval helpers, balls, tail majorants and certified evaluation."""

from fractions import Fraction

import pytest
from mpmath import iv, mp
from pydantic import ValidationError

from cuspbound.errors import (
    IndeterminateComparisonError,
    NonSummableTailError,
    TruncationError,
)
from cuspbound.rigor import (
    Ball,
    CertifiedSeries,
    Prefactor,
    TailBound,
    TailKind,
    abs_sum_bound,
    decide,
    deriv_bound,
    eval_ball,
    float_up,
    grid_extremum,
    hi,
    ival,
    lo,
    round_down,
    round_up,
    working_precision,
)
from cuspbound.rigor.intervals import decimals_of, iv_atan, point
from cuspbound.rigor.library import certified_forms, halfperiod_forms
from cuspbound.series import QSeries, sigma

from tests.conftest import SMALL_TRUNCATION


class TestIntervals:
    """Test enclosures, rounding and precision control."""

    def test_decimal_strings_are_exact(self):
        """Test a printed decimal is enclosed tightly."""
        x = ival("1.10514")
        assert lo(x) <= mp.mpf(110514) / 100000 <= hi(x)
        assert hi(x) - lo(x) < mp.mpf(10) ** -14

    def test_rounding(self):
        """Test outward rounding to a number of decimals."""
        x = ival("0.123451")
        assert round_up(x, 5) == Fraction(12346, 100000)
        assert round_down(x, 5) == Fraction(12345, 100000)

    def test_decimals_of(self):
        """Test printed precision."""
        assert decimals_of("254.56248") == 5
        assert decimals_of("44") == 0

    def test_float_up(self):
        """Test conversion to float never drops below the interval."""
        assert Fraction(float_up(ival(Fraction(1, 3)))) >= Fraction(1, 3)

    def test_working_precision_restores(self):
        """Test the precision is restored on exit."""
        before = iv.prec
        with working_precision(300):
            assert iv.prec == 300
            assert mp.prec == 300
        assert iv.prec == before

    def test_atan_enclosure(self):
        """Test arctan(1) contains pi/4."""
        with working_precision(100):
            quarter = iv.pi / 4
            enclosure = iv_atan(1)
            assert lo(enclosure) <= lo(quarter)
            assert hi(quarter) <= hi(enclosure)

    def test_decide(self):
        """Test sign decisions and the indeterminate case."""
        assert decide(lambda: ival(2) - ival(1))
        assert not decide(lambda: ival(1) - ival(2))
        with pytest.raises(IndeterminateComparisonError):
            decide(lambda: iv.mpf([-1, 1]), start_bits=64, max_bits=128)


class TestBall:
    """Test complex balls."""

    def test_negative_radius(self):
        """Test radii must be nonnegative."""
        with pytest.raises(ValueError):
            Ball(1, -1)

    def test_contains(self):
        """Test membership of points and balls."""
        ball = Ball(1, 0.5)
        assert ball.contains(1.25)
        assert not ball.contains(2)
        assert ball.contains_ball(Ball(1.1, 0.1))

    def test_arithmetic_encloses(self):
        """Test products and sums contain the exact result."""
        product = Ball(2, 0.01) * Ball(3, 0.01)
        assert product.contains(6)
        assert product.contains(2.01 * 3.01)
        assert (Ball.exact(1) + 2).contains(3)
        assert (-Ball(1j, 0)).contains(-1j)

    def test_abs_interval(self):
        """Test |w| over the ball."""
        ball = Ball(3 + 4j, 0.1)
        assert 4.9 - 1e-12 <= ball.abs_lower() <= 4.9 + 1e-12
        assert ball.abs_upper() >= 5.1

    def test_from_interval(self):
        """Test the ball around a box covers its interior."""
        box = iv.mpc(iv.mpf([1, 2]), iv.mpf([0, 1]))
        ball = Ball.from_interval(box)
        assert ball.contains(1.5 + 0.5j)
        assert ball.contains(1.9 + 0.9j)
        assert ball.rad >= mp.sqrt(2) / 2

    def test_overlaps(self):
        """Test overlap with and without relative widening."""
        assert Ball(1, 0.1).overlaps(Ball(1.15, 0.1))
        assert not Ball(1, 0.01).overlaps(Ball(2, 0.01))
        assert Ball(1, 0).overlaps(Ball(1.001, 0), rel_tol=0.01)


class TestTailBound:
    """Test majorants for discarded coefficients."""

    def test_zero_tail(self):
        """Test the zero majorant."""
        assert hi(TailBound.zero().tail_sum(10, 0.5)) == 0

    def test_sigma_tail_dominates(self):
        """Test the sigma majorant tail against a direct partial sum."""
        r = Fraction(1, 10)
        brute = sum(24 * sigma(n) * r**n for n in range(10, 80))
        tail = TailBound.sigma_poly(24).tail_sum(10, ival(r))
        assert mp.mpf(brute.numerator) / brute.denominator <= hi(tail)

    def test_non_summable(self):
        """Test a divergent tail raises."""
        with pytest.raises(NonSummableTailError):
            TailBound.hauptmodul_s().tail_sum(5, ival("0.99"))

    def test_start(self):
        """Test tails cannot start before the majorant's range."""
        bound = TailBound(kind=TailKind.CUSTOM, start=5)
        with pytest.raises(ValueError, match="n >= 5"):
            bound.tail_sum(2, ival("0.1"))

    def test_validation(self):
        """Test powers must be nonempty and the eta majorant is capped."""
        with pytest.raises(ValidationError):
            TailBound(kind=TailKind.CUSTOM, powers=())
        with pytest.raises(ValueError):
            TailBound.eta_product(25)

    def test_named_majorants(self):
        """Test the Hauptmodul majorants use exp(2 pi sqrt(2n))."""
        bound = TailBound.hauptmodul_b()
        assert bound.pi_multiple == 2
        assert bound.sqrt_argument == 2
        assert bound.powers == (11,)


class TestEvaluation:
    """Test certified evaluation of truncated series."""

    def test_exact_polynomial(self):
        """Test 1 + q at z = i."""
        f = CertifiedSeries.exact(QSeries.from_coefficients([1, 1]))
        with working_precision(100):
            ball = eval_ball(f, point(0, 1))
            assert ball.overlaps(Ball(1 + mp.exp(-2 * mp.pi), 0), rel_tol=1e-25)

    def test_lower_half_plane(self):
        """Test points off the upper half-plane are rejected."""
        f = CertifiedSeries.exact(QSeries.one(3))
        with pytest.raises(ValueError, match="upper half-plane"):
            eval_ball(f, point(0, 0))

    def test_uncovered_tail(self):
        """Test a majorant starting above the truncation order is rejected."""
        series = QSeries.from_coefficients([1], valuation=-1)
        assert series.trunc == 0
        f = CertifiedSeries.exact(series).with_tail(TailBound.sigma_poly())
        with pytest.raises(TruncationError, match="uncovered"):
            eval_ball(f, point(0, 1))
        with pytest.raises(TruncationError):
            abs_sum_bound(f, 1)
        with working_precision(100):
            ball = eval_ball(CertifiedSeries.exact(series), point(0, 1))
            assert ball.overlaps(Ball(mp.exp(2 * mp.pi), 0), rel_tol=1e-25)

    def test_delta_at_i(self):
        """Test Delta(i) = Gamma(1/4)^24 / (2^24 pi^18)."""
        forms = certified_forms(SMALL_TRUNCATION)
        with working_precision(120):
            ball = eval_ball(forms["delta"], point(0, 1))
            expected = mp.gamma(mp.mpf(1) / 4) ** 24 / (2**24 * mp.pi**18)
            assert ball.overlaps(Ball(expected, 0), rel_tol=1e-20)

    def test_sup_bound(self):
        """Test sum |a_n| r^n dominates a value on the line."""
        forms = certified_forms(SMALL_TRUNCATION)
        with working_precision(100):
            ball = eval_ball(forms["f2"], point(Fraction(1, 3), 1))
            assert ball.abs_upper() <= abs_sum_bound(forms["f2"], 1)

    def test_derivative_of_polynomial(self):
        """Test |d/dz (1 + q)| = 2 pi exp(-2 pi y)."""
        f = CertifiedSeries.exact(QSeries.from_coefficients([1, 1]))
        with working_precision(100):
            bound = deriv_bound(f, 1)
            exact = 2 * mp.pi * mp.exp(-2 * mp.pi)
            slack = mp.mpf(10) ** -20
            assert exact * (1 - slack) <= bound <= exact * (1 + slack)

    def test_halfperiod_library(self):
        """Test the transformed combinations carry sigma majorants."""
        forms = halfperiod_forms(SMALL_TRUNCATION)
        assert set(forms) == {"s4_inversion", "s4_shift", "f2_shift"}
        assert forms["f2_shift"].tail.kind is TailKind.SIGMA_POLY


class TestGrid:
    """Test certified grid extrema."""

    def test_prefactor(self):
        """Test prefactor values and validation."""
        pref = Prefactor(2)
        assert pref.value(Fraction(0), Fraction(1)) == 1
        assert pref.maximum(Fraction(1)) == Fraction(5, 4)
        assert Prefactor(0).derivative_maximum(Fraction(1)) == 0
        with pytest.raises(ValueError):
            Prefactor(3)

    def test_max_of_polynomial(self):
        """Test max |1 + q/2| on y = 1/2 is attained at x = 0."""
        f = CertifiedSeries.exact(
            QSeries.from_coefficients([1, Fraction(1, 2)]), label="poly"
        )
        result = grid_extremum(f, Fraction(1, 2), M=100)
        exact = 1 + float(mp.exp(-mp.pi)) / 2
        assert exact - 1e-12 <= result.certified <= exact + 0.01
        assert result.location == 0.0
        assert result.mode == "max"

    def test_min_of_polynomial(self):
        """Test min |1 + q/2| on y = 1/2 is attained at x = 1/2."""
        f = CertifiedSeries.exact(QSeries.from_coefficients([1, Fraction(1, 2)]))
        result = grid_extremum(f, Fraction(1, 2), M=100, mode="min")
        exact = 1 - float(mp.exp(-mp.pi)) / 2
        assert exact - 0.01 <= result.certified <= exact + 1e-12
        assert abs(result.location) == 0.5

    def test_grid_count(self):
        """Test at least two grid points are needed."""
        f = CertifiedSeries.exact(QSeries.one(2))
        with pytest.raises(ValueError, match="at least 2"):
            grid_extremum(f, Fraction(1), M=1)
