"""Certified evaluation of truncated q-expansions in the upper half-plane."""

import logging
from dataclasses import dataclass
from typing import Any

from mpmath import iv

from ..errors import TruncationError
from ..series import QSeries
from .ball import Ball
from .intervals import hi, ival, ivc, lo
from .tails import TailBound, TailKind

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CertifiedSeries:
    """A truncated expansion together with a majorant for what was cut off."""

    series: QSeries
    tail: TailBound
    label: str = ""

    @classmethod
    def exact(cls, series: QSeries, label: str = "") -> "CertifiedSeries":
        """Series whose coefficients beyond the truncation are all zero."""
        return cls(series, TailBound.zero(), label)

    def with_tail(self, tail: TailBound) -> "CertifiedSeries":
        return CertifiedSeries(self.series, tail, self.label)


def period_factor(halfperiod: bool) -> Any:
    """2 pi, or pi for expansions in q^(1/2) = exp(pi i z)."""
    return iv.pi if halfperiod else 2 * iv.pi


def q_modulus(y: Any, halfperiod: bool = False) -> Any:
    """|q| = exp(-2 pi y), or exp(-pi y) for the half-period variable."""
    return iv.exp(-period_factor(halfperiod) * ival(y))


def q_value(z: Any, halfperiod: bool = False) -> Any:
    z = ivc(z)
    return iv.exp(period_factor(halfperiod) * iv.mpc(0, 1) * z)


def eval_ball(f: CertifiedSeries, z: Any, halfperiod: bool = False) -> Ball:
    """Ball containing f(z).

    The midpoint comes from the known coefficients by Horner's rule in
    interval arithmetic; the radius adds the tail majorant summed at |q|.

    Raises:
        ValueError: If z is not in the upper half-plane.
        NonSummableTailError: If the tail majorant diverges at Im z.
        TruncationError: If the truncation order is below the start of the
            tail majorant.
    """
    z = ivc(z)
    if lo(z.imag) <= 0:
        raise ValueError("Evaluation point must lie in the upper half-plane.")
    q = q_value(z, halfperiod)
    series = f.series

    acc = iv.mpc(0, 0)
    for c in reversed(series.coeffs):
        acc = acc * q + ival(c)
    v = series.valuation
    if v > 0:
        acc = acc * q**v
    elif v < 0:
        acc = acc / q ** (-v)

    radius = q_modulus(lo(z.imag), halfperiod)
    return Ball.from_interval(acc, hi(_tail_sum(f, radius)))


def abs_sum_bound(f: CertifiedSeries, y: Any, halfperiod: bool = False) -> Any:
    """Upper bound for sup |f| on the line Im z = y: sum |a_n| r^n plus the tail."""
    r = q_modulus(y, halfperiod)
    total = iv.mpf(0)
    for n, c in f.series:
        if c:
            total += abs(ival(c)) * _power(r, n)
    total += _tail_sum(f, r)
    return hi(total)


def deriv_bound(f: CertifiedSeries, y: Any, halfperiod: bool = False) -> Any:
    """Upper bound for |f'(z)| on the line Im z = y.

    Uses |d/dz q^n| = 2 pi |n| r^n (pi |n| r^n for the half-period variable).
    """
    r = q_modulus(y, halfperiod)
    total = iv.mpf(0)
    for n, c in f.series:
        if c and n:
            total += abs(n) * abs(ival(c)) * _power(r, n)
    total += _tail_sum(f, r, extra_power=1)
    bound = hi(period_factor(halfperiod) * total)
    logger.debug("derivative bound %s at y = %s", bound, y)
    return bound


def _tail_sum(f: CertifiedSeries, r: Any, extra_power: int = 0) -> Any:
    if f.tail.kind is TailKind.ZERO:
        return iv.mpf(0)
    if f.series.trunc < f.tail.start:
        raise TruncationError(
            f"Truncation order {f.series.trunc} leaves exponents below the tail "
            f"majorant start {f.tail.start} uncovered."
        )
    return f.tail.tail_sum(f.series.trunc, r, extra_power)


def _power(r: Any, n: int) -> Any:
    return r**n if n >= 0 else 1 / r ** (-n)
