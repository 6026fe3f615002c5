"""Certified extrema of |f(x + iy)| over |x| <= 1/2 by grid sampling.

The series is evaluated at x_j = -1/2 + j/M, j = 0..M, with an integer
fixed-point Horner kernel. Every rounding step has an explicit bound, and the
value between grid points is controlled by a derivative bound times half the
grid spacing.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import isqrt
from typing import Any, Literal

from mpmath import iv, mp
from pydantic import BaseModel, Field

from ..core.constants import RigorDefaults
from .evaluate import CertifiedSeries, abs_sum_bound, deriv_bound, q_modulus
from .intervals import float_down, float_up, hi, ival, lo, working_precision

logger = logging.getLogger(__name__)

Mode = Literal["max", "min"]


@dataclass(frozen=True)
class Prefactor:
    """The factor scale * |z - center|^power multiplying |f(z)|, power even."""

    power: int
    center: Fraction = Fraction(0)
    scale: Fraction = Fraction(1)

    def __post_init__(self):
        if self.power < 0 or self.power % 2:
            raise ValueError("Prefactor power must be a nonnegative even integer.")

    def value(self, x: Fraction, y: Fraction) -> Fraction:
        return self.scale * ((x - self.center) ** 2 + y**2) ** (self.power // 2)

    def maximum(self, y: Fraction) -> Fraction:
        """Maximum over |x| <= 1/2."""
        reach = Fraction(1, 2) + abs(self.center)
        return self.value(self.center + reach, y)

    def derivative_maximum(self, y: Fraction) -> Fraction:
        """Upper bound for |d/dx| over |x| <= 1/2."""
        if self.power == 0:
            return Fraction(0)
        reach = Fraction(1, 2) + abs(self.center)
        half = self.power // 2
        return self.scale * self.power * reach * (reach**2 + y**2) ** (half - 1)


class GridExtremum(BaseModel):
    """Result of a certified grid scan."""

    label: str = ""
    y: str = Field(..., description="Imaginary part of the line, as text")
    points: int = Field(..., description="Grid count M")
    mode: Mode
    halfperiod: bool = False
    certified: float = Field(..., description="Certified bound over |x| <= 1/2")
    sample: float = Field(..., description="Extremal sampled value")
    location: float = Field(..., description="x of the extremal sample")
    correction: float = Field(..., description="Derivative times half spacing")
    derivative: float
    kernel_error: float


@lru_cache(maxsize=8)
def unit_roots(M: int, halfperiod: bool, bits: int) -> tuple[tuple[int, int], ...]:
    """Fixed-point exp(2 pi i x_j) (or exp(pi i x_j)) scaled by 2^bits.

    Each component is within one unit of the exact value.
    """
    S = 1 << bits
    roots = []
    with working_precision(bits + 32):
        for j in range(M + 1):
            x = mp.mpf(2 * j - M) / (2 * M)
            t = x if halfperiod else 2 * x
            roots.append(
                (int(mp.nint(mp.cospi(t) * S)), int(mp.nint(mp.sinpi(t) * S)))
            )
    return tuple(roots)


@dataclass(frozen=True)
class _Chunk:
    coeffs: tuple[int, ...]
    bits: int
    roots: tuple[tuple[int, int], ...]
    weights: tuple[int, ...] | None
    start: int
    mode: Mode


def _horner_abs(coeffs: tuple[int, ...], bits: int, c: int, s: int) -> int:
    X, Y = coeffs[-1], 0
    for b in reversed(coeffs[:-1]):
        X, Y = ((X * c - Y * s) >> bits) + b, (X * s + Y * c) >> bits
    return isqrt(X * X + Y * Y)


def _scan(chunk: _Chunk) -> tuple[int, int, int]:
    """Return (key, index, |P|) of the extremal weighted sample in a chunk."""
    best: tuple[int, int, int] | None = None
    for offset, (c, s) in enumerate(chunk.roots):
        value = _horner_abs(chunk.coeffs, chunk.bits, c, s)
        weight = chunk.weights[offset] if chunk.weights else 1
        key = weight * (value + 1) if chunk.mode == "max" else weight * value
        j = chunk.start + offset
        if (
            best is None
            or (chunk.mode == "max" and key > best[0])
            or (chunk.mode == "min" and key < best[0])
        ):
            best = (key, j, value)
    assert best is not None
    return best


def grid_extremum(
    f: CertifiedSeries,
    y: Fraction,
    M: int = RigorDefaults.GRID_POINTS,
    mode: Mode = "max",
    halfperiod: bool = False,
    prefactor: Prefactor | None = None,
    threads: int = 1,
    precision_bits: int = RigorDefaults.PRECISION_BITS,
) -> GridExtremum:
    """Certified max (or min) of prefactor * |f(x + iy)| over |x| <= 1/2.

    Args:
        f: Series with its tail majorant.
        y: Imaginary part of the line, exact.
        M: Grid count; samples are spaced 1/M apart.
        mode: "max" for an upper bound, "min" for a lower bound.
        halfperiod: Expand in exp(pi i z) instead of exp(2 pi i z).
        prefactor: Optional elementary factor scale * |z - c|^p.
        threads: Worker processes for the scan; the result does not depend on it.
        precision_bits: Interval precision for the setup.

    Raises:
        ValueError: If M < 2, or in min mode when the certified bound is not
            positive.
    """
    if M < 2:
        raise ValueError(f"Grid count must be at least 2, got {M}.")
    y = Fraction(y)
    pref = prefactor or Prefactor(0)
    bits = RigorDefaults.FIXED_POINT_BITS
    S = 1 << bits

    with working_precision(max(precision_bits, bits + 64)):
        series = f.series
        r = q_modulus(y, halfperiod)
        scaled = [ival(c) * r**i for i, c in enumerate(series.coeffs)]
        magnitudes = [hi(abs(b)) for b in scaled]

        # drop trailing terms whose total is below one fixed-point unit
        length = len(scaled)
        cut = mp.mpf(0)
        while length > 1 and (cut + magnitudes[length - 1]) * S <= 1:
            cut += magnitudes[length - 1]
            length -= 1
        scaled = scaled[:length]
        magnitudes = magnitudes[:length]

        coeffs = tuple(int(mp.nint((lo(b) + hi(b)) / 2 * S)) for b in scaled)
        coeff_error = sum(
            (ival(hi(b)) - ival(lo(b)) for b in scaled), start=iv.mpf(0)
        ) + iv.mpf(length) / S
        delta = iv.mpf(2) / S
        growth = (1 + delta) ** length
        root_error = (
            delta
            * growth
            * sum(
                (i * (ival(m) + iv.mpf(1) / S) for i, m in enumerate(magnitudes)),
                start=iv.mpf(0),
            )
        )
        arithmetic_error = (length + 1) * iv.sqrt(2) * growth / S + iv.mpf(1) / S
        tail = f.tail.tail_sum(series.trunc, r)
        v = series.valuation
        rv = r**v if v >= 0 else 1 / r ** (-v)
        kernel_error = coeff_error + root_error + arithmetic_error + ival(cut)
        # absolute error in |f|, the tail carried separately since it scales with r^0
        error = rv * kernel_error + tail

        roots = unit_roots(M, halfperiod, bits)
        weights, weight_den = _prefactor_weights(pref, y, M)
        best_key, best_j, best_value = _run_scan(
            coeffs, bits, roots, weights, mode, threads
        )

        x_best = Fraction(2 * best_j - M, 2 * M)
        pref_best = pref.value(x_best, y)
        pref_max = ival(pref.maximum(y))
        sample = rv * ival(pref_best) * ival(best_value) / S

        sup_f = abs_sum_bound(f, y, halfperiod)
        derivative = deriv_bound(f, y, halfperiod)
        slope = ival(pref.derivative_maximum(y)) * ival(sup_f) + pref_max * ival(
            derivative
        )
        correction = slope / (2 * M)

        weighted = ival(best_key) / ival(weight_den) / S
        if mode == "max":
            at_grid = rv * weighted + pref_max * error
            certified = at_grid + correction
            absolute = pref_max * ival(sup_f)
            bound = ival(min(hi(certified), hi(absolute)))
            result = float_up(bound)
        else:
            at_grid = rv * weighted - pref_max * error
            bound = at_grid - correction
            if lo(bound) <= 0:
                raise ValueError(
                    f"Certified minimum of {f.label or 'series'} at y = {y} "
                    f"is not positive with M = {M}."
                )
            result = float_down(bound)

        extremum = GridExtremum(
            label=f.label,
            y=str(y),
            points=M,
            mode=mode,
            halfperiod=halfperiod,
            certified=result,
            sample=float(mp.mpf((lo(sample) + hi(sample)) / 2)),
            location=float(x_best),
            correction=float_up(correction),
            derivative=float_up(ival(derivative)),
            kernel_error=float_up(pref_max * error),
        )
    logger.info(
        "%s |%s| on y = %s: sample %.10g at x = %.6f, certified %.10g",
        mode,
        f.label or "f",
        y,
        extremum.sample,
        extremum.location,
        extremum.certified,
    )
    return extremum


def _prefactor_weights(
    pref: Prefactor, y: Fraction, M: int
) -> tuple[tuple[int, ...] | None, int]:
    """Integer weights w_j with pref(x_j) = w_j / den."""
    if pref.power == 0 and pref.scale == 1:
        return None, 1
    half = pref.power // 2
    c = pref.center
    # (x_j - c)^2 + y^2 over the common denominator (2 M cd yd)^2
    cd, cn = c.denominator, c.numerator
    yd, yn = y.denominator, y.numerator
    base_den = (2 * M * cd * yd) ** 2
    sn, sd = pref.scale.numerator, pref.scale.denominator
    weights = tuple(
        sn * (((2 * j - M) * cd - 2 * M * cn) ** 2 * yd**2 + (2 * M * cd * yn) ** 2)
        ** half
        for j in range(M + 1)
    )
    return weights, sd * base_den**half


def _run_scan(
    coeffs: tuple[int, ...],
    bits: int,
    roots: tuple[tuple[int, int], ...],
    weights: tuple[int, ...] | None,
    mode: Mode,
    threads: int,
) -> tuple[int, int, int]:
    n = len(roots)
    workers = max(1, min(threads, n // 2000 or 1))
    size = -(-n // workers)
    chunks = [
        _Chunk(
            coeffs,
            bits,
            roots[start : start + size],
            weights[start : start + size] if weights else None,
            start,
            mode,
        )
        for start in range(0, n, size)
    ]
    if workers == 1:
        results = [_scan(chunk) for chunk in chunks]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_scan, chunks))
    # ties resolve to the smallest index, independent of chunking
    if mode == "max":
        return max(results, key=lambda t: (t[0], -t[1]))
    return min(results, key=lambda t: (t[0], t[1]))
