"""Core configuration and constants."""

from .config import (
    BoundConfiguration,
    RigorConfiguration,
    RuntimeConfiguration,
    SeriesConfiguration,
)
from .constants import (
    ChainDefaults,
    DisplayedBounds,
    EnvelopeDefaults,
    LfuncDefaults,
    RigorDefaults,
    SeriesDefaults,
)

__all__ = [
    "BoundConfiguration",
    "RigorConfiguration",
    "RuntimeConfiguration",
    "SeriesConfiguration",
    "ChainDefaults",
    "DisplayedBounds",
    "EnvelopeDefaults",
    "LfuncDefaults",
    "RigorDefaults",
    "SeriesDefaults",
]
