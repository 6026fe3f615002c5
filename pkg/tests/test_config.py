"""Tests for the configuration architecture and the consolidated constants."""

from dataclasses import FrozenInstanceError
from fractions import Fraction

import pytest

from cuspbound.core.config import (
    BoundConfiguration,
    RigorConfiguration,
    RuntimeConfiguration,
    SeriesConfiguration,
)
from cuspbound.core.constants import (
    ChainDefaults,
    DisplayedBounds,
    EnvelopeDefaults,
    RigorDefaults,
    SeriesDefaults,
)
from cuspbound.rigor.intervals import decimals_of


class TestConfiguration:
    """Test the configuration dataclasses."""

    def test_defaults(self):
        """Test default values come from the constants."""
        config = BoundConfiguration.create_default()
        assert config.series.truncation == SeriesDefaults.TRUNCATION
        assert config.rigor.precision_bits == RigorDefaults.PRECISION_BITS
        assert config.rigor.grid_points == 40000
        assert config.rigor.s4_grid_points == 20000
        assert config.runtime.threads >= 1

    def test_frozen(self):
        """Test configurations are immutable."""
        config = SeriesConfiguration.create_default()
        with pytest.raises(FrozenInstanceError):
            config.truncation = 10  # type: ignore[misc]

    def test_quick_grids(self):
        """Test the smoke-run configuration keeps the precision."""
        quick = RigorConfiguration.create_quick()
        assert quick.grid_points < RigorDefaults.GRID_POINTS
        assert quick.precision_bits == RigorDefaults.PRECISION_BITS

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"precision_bits": 32},
            {"precision_bits": 400, "max_precision_bits": 300},
            {"grid_points": 1},
            {"s4_grid_points": 0},
        ],
    )
    def test_rigor_validation(self, kwargs):
        """Test invalid precision and grid settings are rejected."""
        with pytest.raises(ValueError):
            RigorConfiguration(**kwargs)

    def test_runtime_seed(self):
        """Test the default seed is fixed."""
        assert RuntimeConfiguration().seed == 20240601


class TestEnvironment:
    """Test configuration from environment variables."""

    def test_empty_environment(self):
        """Test an empty mapping gives the defaults."""
        config = BoundConfiguration.from_environment({})
        assert config == BoundConfiguration.create_default()

    def test_threads_and_precision(self):
        """Test THREADS and PRECISION_BITS override the defaults."""
        config = BoundConfiguration.from_environment(
            {"THREADS": "3", "PRECISION_BITS": "4000"}
        )
        assert config.runtime.threads == 3
        assert config.rigor.precision_bits == 4000
        assert config.rigor.max_precision_bits == 4000

    def test_blank_values_ignored(self):
        """Test blank variables are treated as unset."""
        config = BoundConfiguration.from_environment({"THREADS": " "})
        assert config.runtime == BoundConfiguration.create_default().runtime

    @pytest.mark.parametrize("value", ["0", "-2", "many"])
    def test_invalid_values(self, value):
        """Test non-positive and non-integer values are rejected."""
        with pytest.raises(ValueError, match="THREADS"):
            BoundConfiguration.from_environment({"THREADS": value})

    def test_os_environ(self, monkeypatch):
        """Test os.environ is read when no mapping is given."""
        monkeypatch.setenv("PRECISION_BITS", "256")
        monkeypatch.delenv("THREADS", raising=False)
        assert BoundConfiguration.from_environment().rigor.precision_bits == 256


class TestConstants:
    """Test the consolidated constants."""

    def test_evaluation_lines(self):
        """Test y = 0.865 and v = 1.16 as exact fractions."""
        assert RigorDefaults.Y_LINE == Fraction("0.865")
        assert RigorDefaults.V_LINE == Fraction("1.16")

    def test_displayed_precision(self):
        """Test the printed table keeps its decimals."""
        assert decimals_of(DisplayedBounds.PSI_Z) == 5
        assert decimals_of(DisplayedBounds.S4_SHIFT) == 6

    def test_chain_levels(self):
        """Test every chain constant has a power of n."""
        assert set(ChainDefaults.CONSTANTS) == set(ChainDefaults.N_POWERS)
        assert set(ChainDefaults.CONSTANTS) < set(ChainDefaults.LEVELS)

    def test_leading_constant(self):
        """Test 44 C stays below 103."""
        scaled = Fraction(EnvelopeDefaults.PRE_C_LEADING) * EnvelopeDefaults.C_FACTOR
        assert scaled <= EnvelopeDefaults.LEADING_CONSTANT
