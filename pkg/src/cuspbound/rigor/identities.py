"""Numerical checks of the transformation laws used to move between cusps.

Both sides of each identity are evaluated as balls at exact rational points;
an identity holds at a point when the balls overlap after widening by a
relative tolerance.
"""

import logging
import random
from collections.abc import Callable, Sequence
from enum import Enum
from fractions import Fraction

import polars as pl
from mpmath import mp

from ..core.constants import RigorDefaults, SeriesDefaults
from ..reports import BoundReport, check_upper
from .ball import Ball
from .evaluate import eval_ball
from .intervals import lo, point, working_precision
from .library import certified_forms

logger = logging.getLogger(__name__)

RationalPoint = tuple[Fraction, Fraction]


class TransformationIdentity(str, Enum):
    """Identities relating the forms at z and at a transformed point."""

    PSI_INVERSION = "psi_inversion"
    """psi(-1/z) = 2^12 phi(z/2)"""

    PSI_SHIFT = "psi_shift"
    """psi(z/(1-z)) = -2^12 phi(z) psi(z/2)"""

    F2_INVERSION = "f2_inversion"
    """F_2(-1/z) = -z^2/2 F_2(z/2)"""

    S4_INVERSION = "s4_inversion"
    """S_4(-1/z) = z^4/240 (E_4(z) - E_4(z/2)/16)"""

    S4_SHIFT = "s4_shift"
    """S_4(z/(1-z)) = (z-1)^4/240 (E_4(z) - E_4(z/2 + 1/2)/16)"""

    F2_SHIFT = "f2_shift"
    """F_2(z/(1-z)) = (z-1)^2 (E_2(z/2 + 1/2)/2 - E_2(z))"""

    DELTA_HALF_SHIFT = "delta_half_shift"
    """Delta(z + 1/2) = -Delta(2z)^3 / (Delta(z) Delta(4z)), the 24th power of
    the eta half-shift."""


# === Exact Moebius maps on rational points ===
def _inverse(z: RationalPoint) -> RationalPoint:
    x, y = z
    d = x * x + y * y
    return (-x / d, y / d)


def _shift_map(z: RationalPoint) -> RationalPoint:
    """z / (1 - z)."""
    x, y = z
    d = (1 - x) ** 2 + y * y
    return ((x * (1 - x) - y * y) / d, y / d)


def _affine(z: RationalPoint, scale: Fraction, offset: Fraction = Fraction(0)):
    x, y = z
    return (scale * x + offset, scale * y)


def sample_points(
    count: int = 10, seed: int = 20240601
) -> list[RationalPoint]:
    """Rational points x + iy with 0.2 <= x <= 0.5 and 0.9 <= y <= 1.2."""
    rng = random.Random(seed)
    return [
        (Fraction(rng.randint(200, 500), 1000), Fraction(rng.randint(900, 1200), 1000))
        for _ in range(count)
    ]


# === Sides ===
def _sides(
    identity: TransformationIdentity, T: int
) -> tuple[Callable[[RationalPoint], Ball], Callable[[RationalPoint], Ball]]:
    forms = certified_forms(T)

    def at(name: str, z: RationalPoint) -> Ball:
        return eval_ball(forms[name], point(*z))

    def zc(z: RationalPoint, offset: int = 0) -> object:
        return point(z[0] - offset, z[1])

    half = Fraction(1, 2)
    two12 = 2**12

    if identity is TransformationIdentity.PSI_INVERSION:
        return (
            lambda z: at("psi", _inverse(z)),
            lambda z: at("phi", _affine(z, half)) * two12,
        )
    if identity is TransformationIdentity.PSI_SHIFT:
        return (
            lambda z: at("psi", _shift_map(z)),
            lambda z: at("phi", z) * at("psi", _affine(z, half)) * (-two12),
        )
    if identity is TransformationIdentity.F2_INVERSION:
        return (
            lambda z: at("f2", _inverse(z)),
            lambda z: at("f2", _affine(z, half)) * (-zc(z) * zc(z) / 2),
        )
    if identity is TransformationIdentity.S4_INVERSION:
        return (
            lambda z: at("s4", _inverse(z)),
            lambda z: (at("e4", z) - at("e4", _affine(z, half)) / 16)
            * (_power(zc(z), 4) / 240),
        )
    if identity is TransformationIdentity.S4_SHIFT:
        return (
            lambda z: at("s4", _shift_map(z)),
            lambda z: (at("e4", z) - at("e4", _affine(z, half, half)) / 16)
            * (_power(zc(z, 1), 4) / 240),
        )
    if identity is TransformationIdentity.F2_SHIFT:
        return (
            lambda z: at("f2", _shift_map(z)),
            lambda z: (at("e2", _affine(z, half, half)) / 2 - at("e2", z))
            * (zc(z, 1) * zc(z, 1)),
        )
    if identity is TransformationIdentity.DELTA_HALF_SHIFT:
        return (
            lambda z: at("delta", (z[0] + half, z[1])),
            lambda z: -_cube(at("delta", _affine(z, Fraction(2))))
            / (at("delta", z) * at("delta", _affine(z, Fraction(4)))),
        )
    raise ValueError(f"Unknown identity '{identity}'.")


def _power(w: object, n: int) -> object:
    result = w
    for _ in range(n - 1):
        result = result * w
    return result


def _cube(b: Ball) -> Ball:
    return b * b * b


def _relative_excess(lhs: Ball, rhs: Ball) -> object:
    """How far apart the balls are, relative to the larger midpoint; 0 if they meet."""
    gap = lo(abs(lhs.center_box() - rhs.center_box()))
    scale = max(abs(lhs.mid), abs(rhs.mid))
    excess = gap - lhs.rad - rhs.rad
    if excess <= 0 or scale == 0:
        return mp.mpf(0)
    return excess / scale


def identity_frame(
    identity: TransformationIdentity,
    samples: Sequence[RationalPoint],
    T: int = SeriesDefaults.TRUNCATION,
    precision_bits: int = RigorDefaults.PRECISION_BITS,
) -> pl.DataFrame:
    """Per-sample values of both sides and their relative excess."""
    left, right = _sides(identity, T)
    rows = []
    with working_precision(precision_bits):
        for z in samples:
            lhs, rhs = left(z), right(z)
            rows.append(
                {
                    "identity": identity.value,
                    "x": str(z[0]),
                    "y": str(z[1]),
                    "lhs_re": float(lhs.mid.real),
                    "lhs_im": float(lhs.mid.imag),
                    "rhs_re": float(rhs.mid.real),
                    "rhs_im": float(rhs.mid.imag),
                    "radius": float(lhs.rad + rhs.rad),
                    "excess": float(_relative_excess(lhs, rhs)),
                }
            )
    return pl.DataFrame(rows)


def check_transformation(
    identity: TransformationIdentity,
    samples: Sequence[RationalPoint] | None = None,
    tol: float = RigorDefaults.TRANSFORM_TOLERANCE,
    T: int = SeriesDefaults.TRUNCATION,
    precision_bits: int = RigorDefaults.PRECISION_BITS,
) -> BoundReport:
    """Certify both sides of an identity agree at every sample.

    Args:
        identity: Which transformation law to check.
        samples: Points x + iy as exact fractions; seeded defaults if omitted.
        tol: Relative widening allowed before the balls must meet.
        T: Truncation order of the series.
        precision_bits: Working precision.
    """
    samples = list(samples) if samples is not None else sample_points()
    if not samples:
        raise ValueError("At least one sample point is required.")
    frame = identity_frame(identity, samples, T, precision_bits)
    worst = frame["excess"].max() or 0.0
    failing = frame.filter(pl.col("excess") > tol)
    if failing.height:
        logger.warning(
            "%s fails at %d of %d samples", identity.value, failing.height, frame.height
        )
    return check_upper(
        f"{identity.value}: both sides agree to relative {tol:g}",
        worst,
        tol,
        provenance="transformation identity",
        details={
            "samples": frame.height,
            "failing": [[x, y] for x, y in failing.select("x", "y").iter_rows()],
            "max_radius": frame["radius"].max(),
        },
    )


def transformation_reports(
    samples: Sequence[RationalPoint] | None = None,
    tol: float = RigorDefaults.TRANSFORM_TOLERANCE,
    T: int = SeriesDefaults.TRUNCATION,
) -> list[BoundReport]:
    """check_transformation for every identity."""
    return [
        check_transformation(identity, samples, tol, T)
        for identity in TransformationIdentity
    ]
