"""Configuration architecture for series construction and certified evaluation.

Settings are grouped into frozen dataclasses and composed into a single
`BoundConfiguration`, which the command line builds from the environment.
"""

import os
from collections.abc import Mapping
from dataclasses import dataclass, field, replace

from .constants import RigorDefaults, SeriesDefaults


@dataclass(frozen=True)
class SeriesConfiguration:
    """Configuration for exact series arithmetic."""

    truncation: int = SeriesDefaults.TRUNCATION
    strategy: str = SeriesDefaults.STRATEGY

    @classmethod
    def create_default(cls) -> "SeriesConfiguration":
        """Create default series configuration."""
        return cls()


@dataclass(frozen=True)
class RigorConfiguration:
    """Configuration for interval evaluation and grids."""

    precision_bits: int = RigorDefaults.PRECISION_BITS
    max_precision_bits: int = RigorDefaults.MAX_PRECISION_BITS
    grid_points: int = RigorDefaults.GRID_POINTS
    s4_grid_points: int = RigorDefaults.S4_GRID_POINTS

    def __post_init__(self):
        if self.precision_bits < 53:
            raise ValueError(
                f"precision_bits must be at least 53, got {self.precision_bits}."
            )
        if self.max_precision_bits < self.precision_bits:
            raise ValueError("max_precision_bits must not be below precision_bits.")
        if self.grid_points < 2 or self.s4_grid_points < 2:
            raise ValueError("Grid densities must be at least 2.")

    @classmethod
    def create_default(cls) -> "RigorConfiguration":
        """Create default rigor configuration."""
        return cls()

    @classmethod
    def create_quick(cls) -> "RigorConfiguration":
        """Create a coarse configuration for smoke runs."""
        return cls(grid_points=4000, s4_grid_points=2000)


@dataclass(frozen=True)
class RuntimeConfiguration:
    """Configuration for parallelism and randomized checks."""

    threads: int = field(default_factory=lambda: os.cpu_count() or 1)
    seed: int = 20240601

    @classmethod
    def create_default(cls) -> "RuntimeConfiguration":
        """Create default runtime configuration."""
        return cls()


@dataclass(frozen=True)
class BoundConfiguration:
    """Master configuration container."""

    series: SeriesConfiguration
    rigor: RigorConfiguration
    runtime: RuntimeConfiguration

    @classmethod
    def create_default(cls) -> "BoundConfiguration":
        """Create default configuration."""
        return cls(
            series=SeriesConfiguration.create_default(),
            rigor=RigorConfiguration.create_default(),
            runtime=RuntimeConfiguration.create_default(),
        )

    @classmethod
    def from_environment(
        cls, environ: Mapping[str, str] | None = None
    ) -> "BoundConfiguration":
        """Create configuration honouring `THREADS` and `PRECISION_BITS`.

        Args:
            environ: Mapping to read from, defaults to `os.environ`.

        Raises:
            ValueError: If a variable is set but is not a positive integer.
        """
        environ = os.environ if environ is None else environ
        config = cls.create_default()

        threads = _positive_int(environ, "THREADS")
        if threads is not None:
            config = replace(config, runtime=replace(config.runtime, threads=threads))

        bits = _positive_int(environ, "PRECISION_BITS")
        if bits is not None:
            rigor = replace(
                config.rigor,
                precision_bits=bits,
                max_precision_bits=max(bits, config.rigor.max_precision_bits),
            )
            config = replace(config, rigor=rigor)
        return config


def _positive_int(environ: Mapping[str, str], name: str) -> int | None:
    raw = environ.get(name)
    if raw is None or raw.strip() == "":
        return None
    try:
        value = int(raw)
    except ValueError as e:
        raise ValueError(f"{name} must be a positive integer, got '{raw}'.") from e
    if value < 1:
        raise ValueError(f"{name} must be a positive integer, got '{raw}'.")
    return value
