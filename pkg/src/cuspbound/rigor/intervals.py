"""Outward-rounded interval helpers on top of `mpmath.iv`.

Every transcendental quantity that feeds a certified verdict is an `iv.mpf`
enclosure. Endpoints are read back as exact `mp.mpf` values.
"""

import logging
import math
from collections.abc import Callable, Iterator
from contextlib import contextmanager
from decimal import Decimal
from fractions import Fraction
from typing import Any

from mpmath import iv, mp

from ..core.constants import RigorDefaults
from ..errors import IndeterminateComparisonError

logger = logging.getLogger(__name__)

Real = Any  # int, Fraction, str, float, mp.mpf or iv.mpf


@contextmanager
def working_precision(bits: int) -> Iterator[None]:
    """Set the precision of both the `mp` and the `iv` contexts."""
    saved = mp.prec, iv.prec
    mp.prec = bits
    iv.prec = bits
    try:
        yield
    finally:
        mp.prec, iv.prec = saved


def ival(x: Real) -> Any:
    """Enclose an exact or decimal value in an interval.

    Strings are read as exact decimals, so "1.10514" becomes a tight
    enclosure of 110514/100000.
    """
    if isinstance(x, iv.mpf):
        return x
    if isinstance(x, bool):
        x = int(x)
    if isinstance(x, Fraction):
        return iv.mpf(x.numerator) / x.denominator
    if isinstance(x, Decimal):
        return ival(Fraction(x))
    if isinstance(x, str):
        return ival(Fraction(x))
    if isinstance(x, mp.mpf):
        return iv.mpf([x, x])
    return iv.mpf(x)


def lo(x: Real) -> Any:
    """Lower endpoint as an exact `mp.mpf`."""
    x = ival(x)
    return mp.make_mpf(x._mpi_[0])


def hi(x: Real) -> Any:
    """Upper endpoint as an exact `mp.mpf`."""
    x = ival(x)
    return mp.make_mpf(x._mpi_[1])


def hull(a: Real, b: Real) -> Any:
    return iv.mpf([min(lo(a), lo(b)), max(hi(a), hi(b))])


def enclose(value: Any, ulps: int = 8) -> Any:
    """Widen an `mp` result by a few units in the last place.

    Used for functions the interval context lacks (arctan, digamma); mpmath
    evaluates these to within an ulp or two at the working precision.
    """
    value = mp.mpf(value)
    if value == 0:
        eps = mp.mpf(2) ** (-mp.prec)
    else:
        eps = abs(value) * ulps * mp.mpf(2) ** (1 - mp.prec)
    return iv.mpf([value - eps, value + eps])


def iv_atan(x: Real) -> Any:
    x = ival(x)
    return hull(enclose(mp.atan(lo(x))), enclose(mp.atan(hi(x))))


def float_up(x: Real) -> float:
    """Smallest-ish float that is >= the interval."""
    top = hi(x)
    f = float(top)
    if f < top:
        f = math.nextafter(f, math.inf)
    return f


def float_down(x: Real) -> float:
    """Largest-ish float that is <= the interval."""
    bottom = lo(x)
    f = float(bottom)
    if f > bottom:
        f = math.nextafter(f, -math.inf)
    return f


def round_up(x: Real, decimals: int) -> Fraction:
    """Round the upper endpoint up to `decimals` places."""
    scale = 10**decimals
    return Fraction(int(mp.ceil(hi(x) * scale)), scale)


def round_down(x: Real, decimals: int) -> Fraction:
    """Round the lower endpoint down to `decimals` places."""
    scale = 10**decimals
    return Fraction(int(mp.floor(lo(x) * scale)), scale)


def decimals_of(text: str) -> int:
    """Number of digits after the decimal point of a printed constant."""
    return len(text.split(".")[1]) if "." in text else 0


def positive(x: Real) -> bool | None:
    """True if certainly > 0, False if certainly <= 0, None if undecided."""
    x = ival(x)
    if lo(x) > 0:
        return True
    if hi(x) <= 0:
        return False
    return None


def decide(
    difference: Callable[[], Any],
    start_bits: int = RigorDefaults.PRECISION_BITS,
    max_bits: int = RigorDefaults.MAX_PRECISION_BITS,
    label: str = "comparison",
) -> bool:
    """Decide the sign of a quantity evaluated as an interval.

    `difference` is re-evaluated with doubled precision until its enclosure
    excludes zero.

    Returns:
        True if the quantity is certainly positive, False if certainly <= 0.

    Raises:
        IndeterminateComparisonError: If still undecided at `max_bits`.
    """
    bits = start_bits
    while True:
        with working_precision(bits):
            verdict = positive(difference())
        if verdict is not None:
            return verdict
        if bits >= max_bits:
            raise IndeterminateComparisonError(
                f"Could not decide {label} at {bits} bits."
            )
        bits = min(2 * bits, max_bits)
        logger.warning("Raising precision to %d bits for %s", bits, label)


def ivc(value: Any) -> Any:
    """Enclose a real or complex value as an `iv.mpc` box."""
    if isinstance(value, iv.mpc):
        return value
    if isinstance(value, iv.mpf):
        return iv.mpc(value, 0)
    if isinstance(value, complex | mp.mpc):
        return iv.mpc(ival(mp.mpf(value.real)), ival(mp.mpf(value.imag)))
    return iv.mpc(ival(value), 0)


def point(x: Real, y: Real) -> Any:
    """The box enclosing x + iy for exact or decimal x, y."""
    return iv.mpc(ival(x), ival(y))
