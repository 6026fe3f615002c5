"""Shared fixtures for pytest."""

import pytest
from mpmath import iv, mp

from cuspbound.core.config import RigorConfiguration

SMALL_TRUNCATION = 40
"""Truncation order for tests that only inspect the first coefficients."""


@pytest.fixture(autouse=True)
def restore_precision():
    """Keep the global mpmath precision unchanged across tests."""
    saved = mp.prec, iv.prec
    yield
    mp.prec, iv.prec = saved


@pytest.fixture
def quick_rigor() -> RigorConfiguration:
    """Coarse grids for smoke runs of the evaluation table."""
    return RigorConfiguration.create_quick()


@pytest.fixture
def coefficient_file(tmp_path):
    """Write a coefficient vector, one value per line, and return its path."""

    def write(values: list[str], name: str = "a.txt"):
        path = tmp_path / name
        path.write_text("\n".join(values) + "\n", encoding="utf-8")
        return path

    return write
