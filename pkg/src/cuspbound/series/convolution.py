"""Truncated convolution of exact rational coefficient lists.

Two interchangeable strategies are registered. Both return bit-identical
results; they differ only in speed.
"""

from abc import ABC, abstractmethod
from collections.abc import Sequence
from fractions import Fraction
from math import lcm

from ..core.constants import SeriesDefaults


class ConvolutionStrategy(ABC):
    """Abstract base class for truncated Cauchy products."""

    @abstractmethod
    def convolve_integers(
        self, a: Sequence[int], b: Sequence[int], n: int
    ) -> list[int]:
        """Return the first `n` coefficients of the product of two integer lists."""
        pass

    def convolve(
        self, a: Sequence[Fraction], b: Sequence[Fraction], n: int
    ) -> list[Fraction]:
        """Return the first `n` coefficients of the product of two rational lists."""
        if n <= 0:
            return []
        a = a[:n]
        b = b[:n]
        if not a or not b:
            return [Fraction(0)] * n
        da = lcm(*(x.denominator for x in a))
        db = lcm(*(x.denominator for x in b))
        ia = [x.numerator * (da // x.denominator) for x in a]
        ib = [x.numerator * (db // x.denominator) for x in b]
        scale = da * db
        product = self.convolve_integers(ia, ib, n)
        if scale == 1:
            return [Fraction(c) for c in product]
        return [Fraction(c, scale) for c in product]


class SchoolbookConvolution(ConvolutionStrategy):
    """Quadratic double loop over the computed window."""

    def convolve_integers(
        self, a: Sequence[int], b: Sequence[int], n: int
    ) -> list[int]:
        out = [0] * n
        nb = min(len(b), n)
        for i, x in enumerate(a[:n]):
            if x == 0:
                continue
            for j in range(min(nb, n - i)):
                out[i + j] += x * b[j]
        return out


class PackedConvolution(ConvolutionStrategy):
    """Kronecker substitution: pack both lists into single integers.

    Coefficients are stored as fixed-width digits so that one big-integer
    multiplication computes the whole product.
    """

    def convolve_integers(
        self, a: Sequence[int], b: Sequence[int], n: int
    ) -> list[int]:
        a = list(a[:n])
        b = list(b[:n])
        max_a = max((abs(x) for x in a), default=0)
        max_b = max((abs(x) for x in b), default=0)
        if max_a == 0 or max_b == 0:
            return [0] * n

        bound = max_a * max_b * min(len(a), len(b))
        nbytes = (bound.bit_length() + 2 + 7) // 8
        width = 8 * nbytes

        product = _pack(a, nbytes) * _pack(b, nbytes)

        # each digit c + 2^(width-1) lies in [0, 2^width), so no carries cross
        half = 1 << (width - 1)
        bias = int.from_bytes(
            (b"\x00" * (nbytes - 1) + b"\x80") * n, "little", signed=False
        )
        window = (product + bias) & ((1 << (width * n)) - 1)
        raw = window.to_bytes(nbytes * n, "little", signed=False)
        return [
            int.from_bytes(raw[i * nbytes : (i + 1) * nbytes], "little") - half
            for i in range(n)
        ]


def _pack(values: Sequence[int], nbytes: int) -> int:
    positive = b"".join(
        (x if x > 0 else 0).to_bytes(nbytes, "little") for x in values
    )
    negative = b"".join(
        (-x if x < 0 else 0).to_bytes(nbytes, "little") for x in values
    )
    return int.from_bytes(positive, "little") - int.from_bytes(negative, "little")


class ConvolutionRegistry:
    """Registry for convolution strategies."""

    _strategies: dict[str, type[ConvolutionStrategy]] = {}

    @classmethod
    def register(cls, name: str, strategy_cls: type[ConvolutionStrategy]) -> None:
        """Register a new strategy."""
        cls._strategies[name] = strategy_cls

    @classmethod
    def get(cls, name: str) -> type[ConvolutionStrategy]:
        """Get a strategy by name."""
        if name not in cls._strategies:
            raise ValueError(f"Strategy '{name}' not found in registry.")
        return cls._strategies[name]

    @classmethod
    def list_strategies(cls) -> list[str]:
        """List all registered strategies."""
        return list(cls._strategies.keys())


ConvolutionRegistry.register("schoolbook", SchoolbookConvolution)
ConvolutionRegistry.register("packed", PackedConvolution)

_active: list[str] = [SeriesDefaults.STRATEGY]


def set_default_strategy(name: str) -> None:
    """Select the strategy used when none is passed explicitly."""
    ConvolutionRegistry.get(name)
    _active[0] = name


def get_default_strategy() -> str:
    return _active[0]


def convolve(
    a: Sequence[Fraction],
    b: Sequence[Fraction],
    n: int,
    strategy: str | None = None,
) -> list[Fraction]:
    """Truncated product of two rational coefficient lists.

    Args:
        a: Coefficients of the first factor, lowest exponent first.
        b: Coefficients of the second factor.
        n: Number of product coefficients to return.
        strategy: Registered strategy name, defaults to the active one.
    """
    name = strategy or _active[0]
    return ConvolutionRegistry.get(name)().convolve(a, b, n)
