"""Certified majorants for the discarded coefficients of truncated series."""

from enum import Enum
from typing import Any

from mpmath import iv
from pydantic import BaseModel, ConfigDict, Field, field_validator

from ..core.constants import ChainDefaults
from ..errors import NonSummableTailError
from .intervals import hi, ival


class TailKind(str, Enum):
    """Families of pointwise coefficient majorants."""

    ZERO = "zero"
    SIGMA_POLY = "sigma_poly"
    SIGMA_CUBIC_QUINTIC = "sigma_cubic_quintic"
    HAUPTMODUL_S = "hauptmodul_s"
    HAUPTMODUL_B = "hauptmodul_b"
    CUSTOM = "custom"


class TailBound(BaseModel):
    """Majorant |a_n| <= scale * sum_p n^p * exp(A sqrt(n)) for n >= start.

    A is `pi_multiple * pi * sqrt(sqrt_argument)`.
    """

    model_config = ConfigDict(frozen=True)

    kind: TailKind
    start: int = Field(default=1, ge=1, description="First exponent covered")
    scale: str = Field(default="1", description="Decimal or rational text")
    powers: tuple[int, ...] = (0,)
    pi_multiple: int = Field(default=0, ge=0)
    sqrt_argument: int = Field(default=1, ge=1)

    @field_validator("powers")
    @classmethod
    def _nonnegative_powers(cls, v: tuple[int, ...]) -> tuple[int, ...]:
        if not v or min(v) < 0:
            raise ValueError("powers must be a nonempty tuple of nonnegative ints")
        return v

    # === Named majorants ===
    @classmethod
    def zero(cls) -> "TailBound":
        """For series whose coefficients vanish beyond the truncation."""
        return cls(kind=TailKind.ZERO)

    @classmethod
    def sigma_poly(cls, scale: int | str = 1, r: int = 1) -> "TailBound":
        """scale * sigma_r(n) < scale * (n^r + n^(r+1))."""
        return cls(kind=TailKind.SIGMA_POLY, scale=str(scale), powers=(r, r + 1))

    @classmethod
    def sigma_cubic_quintic(cls, scale: int | str = 1) -> "TailBound":
        return cls(kind=TailKind.SIGMA_CUBIC_QUINTIC, scale=str(scale), powers=(3, 5))

    @classmethod
    def hauptmodul_s(cls) -> "TailBound":
        """|s(n)| < 0.9 n^11 exp(2 pi sqrt(2n))."""
        return cls(
            kind=TailKind.HAUPTMODUL_S,
            scale=ChainDefaults.S_CONSTANT,
            powers=(11,),
            pi_multiple=2,
            sqrt_argument=2,
        )

    @classmethod
    def hauptmodul_b(cls) -> "TailBound":
        """b(n) < 0.08 n^11 exp(2 pi sqrt(2n))."""
        return cls(
            kind=TailKind.HAUPTMODUL_B,
            scale=ChainDefaults.B_CONSTANT,
            powers=(11,),
            pi_multiple=2,
            sqrt_argument=2,
        )

    @classmethod
    def eta_product(cls, colours: int = 24) -> "TailBound":
        """Coefficients of q^a prod (1 - q^n)^c are dominated by those of
        prod (1 - q^n)^(-c), which are below exp(pi sqrt(2 c n / 3)).

        Stated as exp(4 pi sqrt(n)) for c <= 24.
        """
        if colours > 24:
            raise ValueError("eta_product majorant covers at most 24 colours")
        return cls(kind=TailKind.CUSTOM, pi_multiple=4, sqrt_argument=1)

    # === Evaluation ===
    def exponent_coefficient(self) -> Any:
        return self.pi_multiple * iv.pi * iv.sqrt(self.sqrt_argument)

    def majorant(self, n: int, extra_power: int = 0) -> Any:
        """Interval enclosure of the majorant at n (times n^extra_power)."""
        if self.kind is TailKind.ZERO:
            return iv.mpf(0)
        total = sum(iv.mpf(n) ** (p + extra_power) for p in self.powers)
        growth = iv.exp(self.exponent_coefficient() * iv.sqrt(n))
        return ival(self.scale) * total * growth

    def tail_sum(self, N: int, r: Any, extra_power: int = 0) -> Any:
        """Upper bound for sum_{n >= N} majorant(n) n^extra_power r^n.

        Successive terms shrink at least by the ratio
        rho = r (1 + 1/N)^p exp(A / (2 sqrt(N))); the tail is at most
        t_N / (1 - rho).

        Raises:
            NonSummableTailError: If rho is not certainly below 1.
        """
        if self.kind is TailKind.ZERO:
            return iv.mpf(0)
        if N < self.start:
            raise ValueError(
                f"Majorant covers n >= {self.start}, tail requested from {N}."
            )
        r = ival(hi(r))
        p = max(self.powers) + extra_power
        rho = (
            r
            * (1 + iv.mpf(1) / N) ** p
            * iv.exp(self.exponent_coefficient() / (2 * iv.sqrt(N)))
        )
        if hi(rho) >= 1:
            raise NonSummableTailError(
                f"Tail of kind '{self.kind.value}' from n = {N} is not summable "
                f"at |q| = {float(hi(r)):.6g}."
            )
        first = self.majorant(N, extra_power) * r**N
        return iv.mpf([0, hi(first / (1 - rho))])
