"""The evaluation table on the lines Im z = y and Im tau = v.

Each entry is a certified grid extremum (or a direct evaluation) compared with
its printed value. Every report carries the value rounded outward to the
printed number of decimals under `details["displayed"]`; the envelope
constants are assembled from those.
"""

import logging
from fractions import Fraction

from mpmath import iv

from ..core.config import RigorConfiguration
from ..core.constants import DisplayedBounds, RigorDefaults, SeriesDefaults
from ..reports import BoundReport, check_lower, check_upper
from .evaluate import deriv_bound
from .grid import GridExtremum, Prefactor, grid_extremum
from .intervals import decimals_of, ival, round_down, round_up, working_precision
from .library import certified_forms, halfperiod_forms

logger = logging.getLogger(__name__)

SUITE_KEYS = (
    "F2_Z",
    "F2_TAU",
    "S4_Z",
    "S4_TAU",
    "PSI_Z",
    "PSI_TAU",
    "PHI_HALF_Z",
    "F2_INVERSION",
    "S4_INVERSION",
    "S4_SHIFT",
    "F2_SHIFT",
    "PHI_Z",
    "PSI_HALF_Z",
    "ABS_Z",
)
"""Keys of the displayed table entries, in printed order."""


def _entry(
    key: str,
    claim: str,
    value: object,
    upper: bool = True,
    tolerance: float = RigorDefaults.SUITE_TOLERANCE,
    extremum: GridExtremum | None = None,
) -> BoundReport:
    reference = getattr(DisplayedBounds, key)
    decimals = decimals_of(reference)
    displayed = round_up(value, decimals) if upper else round_down(value, decimals)
    details: dict[str, object] = {"key": key, "displayed": _fixed(displayed, decimals)}
    if extremum is not None:
        details.update(extremum.model_dump(exclude={"label", "certified", "mode"}))
    check = check_upper if upper else check_lower
    return check(
        f"{claim} {'<=' if upper else '>='} {reference}",
        value,
        reference,
        tolerance,
        provenance="evaluation table",
        details=details,
    )


def _fixed(value: Fraction, decimals: int) -> str:
    scaled = value * 10**decimals
    assert scaled.denominator == 1
    sign = "-" if scaled < 0 else ""
    digits = str(abs(scaled.numerator)).rjust(decimals + 1, "0")
    if not decimals:
        return sign + digits
    return f"{sign}{digits[:-decimals]}.{digits[-decimals:]}"


def paper_constants_suite(
    config: RigorConfiguration | None = None,
    threads: int = 1,
    T: int = SeriesDefaults.TRUNCATION,
) -> list[BoundReport]:
    """Reproduce the evaluation table with certified directions.

    Args:
        config: Precision and grid densities; defaults to 40000 points for the
            psi-type tables and 20000 for S_4.
        threads: Worker processes for each grid scan.
        T: Truncation order of the series.

    Returns:
        One report per table entry, then the psi grid-sample check and the two
        derivative bounds.
    """
    config = config or RigorConfiguration.create_default()
    forms = certified_forms(T)
    half = halfperiod_forms(T)
    y, v = RigorDefaults.Y_LINE, RigorDefaults.V_LINE
    M, M4 = config.grid_points, config.s4_grid_points
    bits = config.precision_bits

    def scan(f, line, points=M, mode="max", halfperiod=False, prefactor=None):
        return grid_extremum(
            f,
            line,
            points,
            mode,
            halfperiod=halfperiod,
            prefactor=prefactor,
            threads=threads,
            precision_bits=bits,
        )

    reports = []
    with working_precision(bits):
        g = scan(forms["f2"], y)
        reports.append(_entry("F2_Z", "|F_2(z)|", g.certified, extremum=g))
        g = scan(forms["f2"], v)
        reports.append(_entry("F2_TAU", "|F_2(tau)|", g.certified, extremum=g))
        g = scan(forms["s4"], y, M4)
        reports.append(_entry("S4_Z", "|S_4(z)|", g.certified, extremum=g))
        g = scan(forms["s4"], v, M4, "min")
        reports.append(
            _entry("S4_TAU", "|S_4(tau)|", g.certified, upper=False, extremum=g)
        )

        psi_max = scan(forms["psi"], y)
        reports.append(
            _entry("PSI_Z", "|psi(z)|", psi_max.certified, extremum=psi_max)
        )
        g = scan(forms["psi"], v, mode="min")
        reports.append(
            _entry("PSI_TAU", "|psi(tau)|", g.certified, upper=False, extremum=g)
        )
        g = scan(forms["phi"], y, halfperiod=True)
        reports.append(_entry("PHI_HALF_Z", "|phi(z/2)|", g.certified, extremum=g))

        # max |z|^2 / 2 over the segment times max |F_2(z/2)|
        g = scan(forms["f2"], y, halfperiod=True)
        z2_half = (Fraction(1, 4) + y * y) / 2
        reports.append(
            _entry(
                "F2_INVERSION",
                "|z^2/2 F_2(z/2)|",
                ival(z2_half) * ival(g.certified),
                extremum=g,
            )
        )
        g = scan(half["s4_inversion"], y, halfperiod=True, prefactor=Prefactor(4))
        reports.append(
            _entry(
                "S4_INVERSION",
                "|z^4/240 (E_4(z) - E_4(z/2)/16)|",
                g.certified,
                extremum=g,
            )
        )
        g = scan(
            half["s4_shift"],
            y,
            halfperiod=True,
            prefactor=Prefactor(4, center=Fraction(1)),
        )
        reports.append(
            _entry(
                "S4_SHIFT",
                "|(z-1)^4/240 (E_4(z) - E_4(z/2+1/2)/16)|",
                g.certified,
                extremum=g,
            )
        )
        g = scan(
            half["f2_shift"],
            y,
            halfperiod=True,
            prefactor=Prefactor(2, center=Fraction(1)),
        )
        reports.append(
            _entry(
                "F2_SHIFT",
                "|(z-1)^2 (E_2(z/2+1/2)/2 - E_2(z))|",
                g.certified,
                extremum=g,
            )
        )
        g = scan(forms["phi"], y)
        reports.append(_entry("PHI_Z", "|phi(z)|", g.certified, extremum=g))
        g = scan(forms["psi"], y, halfperiod=True)
        reports.append(_entry("PSI_HALF_Z", "|psi(z/2)|", g.certified, extremum=g))
        abs_z = iv.sqrt(ival(Fraction(1, 4) + y * y))
        reports.append(_entry("ABS_Z", "|z|", abs_z))

        reports.append(
            check_upper(
                "grid sample max of |psi(z)| within 0.1% of "
                f"{DisplayedBounds.PSI_Z_SAMPLE}",
                abs(ival(psi_max.sample) / ival(DisplayedBounds.PSI_Z_SAMPLE) - 1),
                "0.001",
                provenance="evaluation table",
                details={"sample": psi_max.sample, "location": psi_max.location},
            )
        )
        reports.extend(derivative_reports(T))
    return reports


def derivative_reports(T: int = SeriesDefaults.TRUNCATION) -> list[BoundReport]:
    """The derivative bounds of psi on Im z = y and of S_4 on Im tau = v."""
    forms = certified_forms(T)
    psi_prime = deriv_bound(forms["psi"], RigorDefaults.Y_LINE)
    s4_prime = deriv_bound(forms["s4"], RigorDefaults.V_LINE)
    return [
        _entry("PSI_DERIVATIVE", "|psi'(z)|", psi_prime, tolerance=0.001),
        check_lower(
            "|psi'(z)| bound is not loose: >= 1448",
            psi_prime,
            1448,
            provenance="evaluation table",
        ),
        _entry("S4_DERIVATIVE", "|S_4'(tau)|", s4_prime, tolerance=0.01),
    ]


def suite_values(reports: list[BoundReport]) -> dict[str, Fraction]:
    """Displayed (outward-rounded) values of the table, keyed as in `SUITE_KEYS`.

    Raises:
        ValueError: If an entry is missing or failed.
    """
    values = {}
    for report in reports:
        key = report.details.get("key")
        if key is None:
            continue
        if not report.passed:
            raise ValueError(f"Table entry {key} did not certify.")
        values[key] = Fraction(report.details["displayed"])
    missing = [k for k in SUITE_KEYS if k not in values]
    if missing:
        raise ValueError(f"Evaluation table is missing {', '.join(missing)}.")
    return values
