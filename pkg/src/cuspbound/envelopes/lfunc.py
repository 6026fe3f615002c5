"""Numerical checks behind the lower bounds for Petersson norms of newforms.

The analytic lemmas are not reproduced; what is checked are the constants they
feed: the residue formula of the smoothing kernel, the digamma estimate at the
edge of the zero-free region, the two integrals bounding L(Sym^2 g, 1), and the
resulting floor 1/(86 log k).
"""

import logging
import math
from collections.abc import Iterable
from fractions import Fraction
from typing import Any

from mpmath import iv, mp

from ..core.constants import EnvelopeDefaults, LfuncDefaults, RigorDefaults
from ..errors import UnsupportedParameterError
from ..reports import BoundReport, check_lower, check_upper
from ..rigor.intervals import enclose, hi, ival, lo, working_precision

logger = logging.getLogger(__name__)

KERNEL_DEGREE = 10
"""The kernel 1 / (s prod_{r=2}^{10} (s + r))."""


def _require_weight(k: int) -> None:
    if k < 8 or k % 2:
        raise UnsupportedParameterError(
            f"Weight must be an even integer >= 8, got {k}."
        )


# === Residue identity ===
def residue_closed_form(x: Fraction) -> Fraction:
    """(x + 9)(x - 1)^9 / (10! x^10) for x > 1, and 0 for x < 1."""
    x = Fraction(x)
    if x == 1:
        raise UnsupportedParameterError("The kernel identity excludes x = 1.")
    if x < 1:
        return Fraction(0)
    return (x + 9) * (x - 1) ** 9 / (math.factorial(10) * x**10)


def residue_quadrature(x: Fraction, dps: int = 30) -> Any:
    """(1 / 2 pi i) int_{Re s = 2} x^s / (s prod_{r=2}^{10} (s + r)) ds.

    On s = 2 + it the integrand is conjugate-symmetric, so the integral is
    (1/pi) int_0^oo Re(...) dt.
    """
    with mp.workdps(dps):
        xm = mp.mpf(Fraction(x).numerator) / Fraction(x).denominator

        def integrand(t):
            s = mp.mpc(2, t)
            denominator = s
            for r in range(2, KERNEL_DEGREE + 1):
                denominator *= s + r
            return mp.re(mp.power(xm, s) / denominator)

        # oscillation period 2 pi / log x sets the segment length
        step = max(1, int(2 * mp.pi / abs(mp.log(xm)))) if xm != 1 else 1
        nodes = list(range(0, 200, step)) + [200, mp.inf]
        return mp.quad(integrand, nodes) / mp.pi


def lfunc_residue_identity(
    x: Fraction, tolerance: float = LfuncDefaults.QUADRATURE_TOLERANCE
) -> BoundReport:
    """Closed form of the kernel integral against quadrature on Re s = 2.

    For x < 1 the closed form is 0 and the error is measured relative to the
    integrand at t = 0.
    """
    closed = residue_closed_form(x)
    numeric = residue_quadrature(x)
    scale = closed or Fraction(x) ** 2 / (2 * math.prod(range(4, 13)))
    error = abs(numeric - mp.mpf(closed.numerator) / closed.denominator) / (
        mp.mpf(scale.numerator) / scale.denominator
    )
    return check_upper(
        f"kernel residue identity at x = {x} to relative {tolerance:g}",
        ival(mp.mpf(error)),
        tolerance,
        provenance="smoothing kernel",
        details={"closed_form": float(closed), "quadrature": float(numeric)},
    )


def residue_reports(
    points: Iterable[int | Fraction] = LfuncDefaults.RESIDUE_POINTS,
) -> list[BoundReport]:
    return [lfunc_residue_identity(Fraction(x)) for x in points]


# === Digamma estimate ===
def alpha(k: int) -> Any:
    """Width (sqrt(6) - 2) / (10 log k) of the zero-free region."""
    return (iv.sqrt(6) - 2) / (10 * iv.log(k))


def beta(k: int) -> Any:
    """1 - (5 - 2 sqrt(6)) / (10 log k)."""
    return 1 - (5 - 2 * iv.sqrt(6)) / (10 * iv.log(k))


def _digamma(s: Any) -> Any:
    return iv.mpf([lo(enclose(mp.digamma(lo(s)))), hi(enclose(mp.digamma(hi(s))))])


def gamma_log_derivative(s: Any, k: int, p: int) -> Any:
    """G'/G(s) for the completed L-function of g x g at level p.

    The sixth digamma term is taken at (s + k)/2; digamma is increasing, so
    this dominates repeating the (s + k - 1)/2 term.
    """
    s = ival(s)
    terms = (
        (Fraction(3, 2), s / 2),
        (Fraction(3, 2), (s + 1) / 2),
        (2, (s + k - 1) / 2),
        (2, (s + k) / 2),
        (Fraction(1, 2), (s + 2 * k - 2) / 2),
        (Fraction(1, 2), (s + 2 * k - 1) / 2),
    )
    total = 5 * iv.log(p) - 8 * iv.log(iv.pi)
    for weight, argument in terms:
        total += ival(weight) * _digamma(argument)
    return total


# === Integrals ===
def partial_sum_floor(k: int) -> Fraction:
    """(57 * 47^9 / 48^10) * sum_{n <= sqrt(x/48)} 1/n^2 at x = k^(16/5), exactly.

    n <= sqrt(x/48) is decided as (48 n^2)^5 <= k^16.
    """
    _require_weight(k)
    n = 0
    while (48 * (n + 1) ** 2) ** 5 <= k**16:
        n += 1
    series = sum((Fraction(1, j * j) for j in range(1, n + 1)), start=Fraction(0))
    return Fraction(57 * 47**9, 48**10) * series


def i2_quadrature(dps: int = 30) -> Any:
    """10! zeta(5/2)^4 / (2^9 pi^9) times the gamma-ratio integral over R."""
    with mp.workdps(dps):

        def integrand(t):
            num = (
                abs(mp.mpc(0.5, t)) ** 2
                * abs(mp.mpc(1.5, t)) ** 2
                * abs(mp.mpc(1, t)) ** 3
                * abs(mp.mpc(mp.mpf(256) / 225, t))
            )
            den = abs(mp.mpc(mp.mpf(12) / 5, t)) * abs(mp.mpc(mp.mpf(2) / 5, t))
            for r in range(3, 11):
                den *= abs(mp.mpc(r - mp.mpf(5) / 2, t))
            return num / den

        integral = 2 * mp.quad(integrand, [0, 1, 10, 100, mp.inf])
        factor = math.factorial(10) * mp.zeta(mp.mpf(5) / 2) ** 4 / (2**9 * mp.pi**9)
        return factor * integral


def symmetric_square_floor(k: int) -> Any:
    """(1 - beta)(1.39873 k^(A (beta - 1)) - 0.18047 k^(8 - 5A/2)) at A = 16/5."""
    A = ival(LfuncDefaults.A_EXPONENT)
    b = beta(k)
    lower = ival(LfuncDefaults.I_LOWER) * iv.exp(A * (b - 1) * iv.log(k))
    upper = ival(LfuncDefaults.I2_UPPER) * iv.exp((8 - 5 * A / 2) * iv.log(k))
    return (1 - b) * (lower - upper)


def lfunc_constants_suite(
    k_samples: Iterable[int] = range(8, 101, 2),
    p_samples: Iterable[int] = LfuncDefaults.PRIMES,
    precision_bits: int = RigorDefaults.PRECISION_BITS,
) -> list[BoundReport]:
    """The digamma, zero-free width, integral and floor checks.

    Raises:
        UnsupportedParameterError: For an odd or small weight, or a prime
            outside 2, 3, 5, 7.
    """
    ks = list(k_samples)
    ps = list(p_samples)
    if not ks:
        raise UnsupportedParameterError("At least one weight is required.")
    for k in ks:
        _require_weight(k)
    if not ps or not set(ps) <= set(LfuncDefaults.PRIMES):
        raise UnsupportedParameterError(
            f"Primes must be drawn from {LfuncDefaults.PRIMES}, got {ps}."
        )

    reports = []
    with working_precision(precision_bits):
        # (a) G'/G(1 + alpha) - (10 log k - 2) <= 0
        worst_gap, worst_case = None, None
        for k in ks:
            s = 1 + alpha(k)
            for p in ps:
                gap = gamma_log_derivative(s, k, p) - (10 * iv.log(k) - 2)
                if worst_gap is None or hi(gap) > hi(worst_gap):
                    worst_gap, worst_case = gap, (k, p)
        reports.append(
            check_upper(
                "G'/G(1 + alpha) <= 10 log k - 2",
                worst_gap,
                0,
                provenance="zero-free region",
                details={"worst_k_p": list(worst_case or ())},
            )
        )

        # (b) alpha < 1/2, largest at the smallest k
        reports.append(
            check_upper(
                "alpha = (sqrt(6) - 2)/(10 log k) <= 1/2",
                alpha(min(ks)),
                Fraction(1, 2),
                provenance="zero-free region",
            )
        )

        # (c) the shifted-contour integral
        quadrature = i2_quadrature()
        reports.append(
            check_upper(
                f"I_2 gamma-ratio integral <= {LfuncDefaults.I2_UPPER}",
                ival(mp.mpf(quadrature)),
                LfuncDefaults.I2_UPPER,
                0.01,
                provenance="L-function integral",
                details={"value": float(quadrature)},
            )
        )

        # (d) the partial sum, smallest at the smallest k
        floors = {k: partial_sum_floor(k) for k in ks}
        k_min = min(floors, key=floors.__getitem__)
        reports.append(
            check_lower(
                f"truncated Dirichlet sum >= {LfuncDefaults.I_LOWER}",
                ival(floors[k_min]),
                LfuncDefaults.I_LOWER,
                provenance="L-function integral",
                details={"k": k_min},
            )
        )

        # (e) 86 log k * floor >= 1
        scaled = {
            k: symmetric_square_floor(k) * EnvelopeDefaults.NEWFORM_FLOOR * iv.log(k)
            for k in ks
        }
        k_worst = min(scaled, key=lambda k: lo(scaled[k]))
        reports.append(
            check_lower(
                "L(Sym^2 g, 1) floor >= 1/(86 log k)",
                scaled[k_worst],
                1,
                provenance="L-function integral",
                details={"k": k_worst, "k_range": [min(ks), max(ks)]},
            )
        )
    return reports


# === Petersson norm floors ===
def _gamma_ratio(k: int) -> Any:
    """Gamma(k) / (4 pi)^k."""
    return ival(math.factorial(k - 1)) / (4 * iv.pi) ** k


def petersson_lower_newform(k: int) -> Any:
    """6/pi^2 * 2/3 * Gamma(k)/(4 pi)^k / (86 log k), as an interval."""
    _require_weight(k)
    return (
        6 / iv.pi**2
        * ival(Fraction(2, 3))
        * _gamma_ratio(k)
        / (EnvelopeDefaults.NEWFORM_FLOOR * iv.log(k))
    )


def petersson_lower_level1(k: int) -> Any:
    """6/pi^2 * Gamma(k)/(4 pi)^k / (64 log k), as an interval."""
    if k < 12 or k % 2:
        raise UnsupportedParameterError(
            f"Level one weight must be an even integer >= 12, got {k}."
        )
    floor = EnvelopeDefaults.LEVEL_ONE_FLOOR * iv.log(k)
    return 6 / iv.pi**2 * _gamma_ratio(k) / floor


def orthogonal_norm_floor(k: int) -> tuple[Any, Any]:
    """Floors of the newform and oldform basis elements, as multiples of
    Gamma(k) / ((4 pi)^k log k): 2/(43 pi^2) and 1/(96 pi^2).

    The oldform floor is a ninth of the level one floor.
    """
    _require_weight(k)
    base = _gamma_ratio(k) / iv.log(k)
    newform = ival(Fraction(2, 43)) / iv.pi**2 * base
    oldform = base / (EnvelopeDefaults.OLDFORM_FLOOR * iv.pi**2)
    return newform, oldform
