"""Coefficient envelopes of the echelon basis at the three cusps.

In sector i, |A_k^(i)(m, n)| <= c1 * c2^ell * exp(-2 pi m v) * exp(c3 pi n), with
v = 1.16. The constants are quotients of entries of the evaluation table.
"""

import logging
from collections.abc import Mapping
from fractions import Fraction
from typing import Any

from mpmath import iv
from pydantic import BaseModel, Field, field_validator

from ..basis import echelon_basis
from ..core.constants import EnvelopeDefaults, RigorDefaults
from ..reports import BoundReport, check_upper
from ..rigor.intervals import float_up, hi, ival, working_precision

logger = logging.getLogger(__name__)


class SectorEnvelope(BaseModel):
    """The triple (c1, c2, c3) of one sector."""

    c1: float = Field(..., gt=0)
    c2: float = Field(..., gt=0)
    c3: float = Field(..., description="Growth rate of exp(c3 pi n)")

    @field_validator("c3")
    @classmethod
    def _below_sqrt3(cls, v: float) -> float:
        # the I-integrals converge only for c3 < sqrt(3)
        if not v < 3**0.5:
            raise ValueError(f"c3 must be below sqrt(3), got {v}")
        return v

    def bound(self, ell: int, m: int, n: int) -> Any:
        """Interval enclosure of c1 c2^ell exp(-2 pi m v) exp(c3 pi n)."""
        v = ival(RigorDefaults.V_LINE)
        return (
            ival(self.c1)
            * ival(self.c2) ** ell
            * iv.exp(-2 * iv.pi * m * v)
            * iv.exp(ival(self.c3) * iv.pi * n)
        )


class EnvelopeConstants(BaseModel):
    """Envelopes of all three sectors, keyed 1, 2, 3."""

    sectors: dict[int, SectorEnvelope]

    @field_validator("sectors")
    @classmethod
    def _three_sectors(cls, v: dict[int, SectorEnvelope]) -> dict[int, SectorEnvelope]:
        if sorted(v) != [1, 2, 3]:
            raise ValueError("sectors must be keyed 1, 2, 3")
        return v

    @classmethod
    def printed(cls) -> "EnvelopeConstants":
        """The published triples."""
        return cls(
            sectors={
                i: SectorEnvelope(c1=float(a), c2=float(b), c3=float(c))
                for i, (a, b, c) in EnvelopeDefaults.SECTORS.items()
            }
        )

    def __getitem__(self, sector: int) -> SectorEnvelope:
        return self.sectors[sector]


def sector_quotients(values: Mapping[str, Fraction]) -> dict[int, tuple[Any, Any]]:
    """Interval enclosures of (c1, c2) for each sector from displayed table values.

    Numerators use upper bounds, denominators lower bounds, so the upper
    endpoints are valid envelope constants.
    """
    f2_tau = ival(values["F2_TAU"])
    psi_tau = ival(values["PSI_TAU"])
    s4_tau = ival(values["S4_TAU"])
    psi_z = ival(values["PSI_Z"])
    phi_half = ival(values["PHI_HALF_Z"])
    product3 = ival(values["PHI_Z"]) * ival(values["PSI_HALF_Z"])
    return {
        1: (
            f2_tau * psi_z * ival(values["F2_Z"]) / (psi_tau - psi_z),
            ival(values["S4_Z"]) / s4_tau,
        ),
        2: (
            8192 * f2_tau * phi_half * ival(values["F2_INVERSION"])
            / (psi_tau - 4096 * phi_half),
            ival(values["S4_INVERSION"]) / s4_tau,
        ),
        3: (
            8192 * f2_tau * ival(values["F2_SHIFT"]) * product3
            / (psi_tau - 4096 * product3),
            ival(values["S4_SHIFT"]) / s4_tau,
        ),
    }


def envelope_constants_from_rigor(
    values: Mapping[str, Fraction],
    precision_bits: int = RigorDefaults.PRECISION_BITS,
) -> EnvelopeConstants:
    """Assemble the three envelopes from the displayed evaluation table.

    Args:
        values: Output of `suite_values`, rounded outward to printed decimals.

    Raises:
        ValueError: If an entry of the table is missing.
    """
    needed = (
        "F2_Z", "F2_TAU", "S4_Z", "S4_TAU", "PSI_Z", "PSI_TAU", "PHI_HALF_Z",
        "F2_INVERSION", "S4_INVERSION", "S4_SHIFT", "F2_SHIFT", "PHI_Z", "PSI_HALF_Z",
    )  # fmt: skip
    missing = [key for key in needed if key not in values]
    if missing:
        raise ValueError(
            f"Evaluation table has not been run; missing {', '.join(missing)}."
        )
    y = float(RigorDefaults.Y_LINE)
    growth = {1: 2 * y, 2: y, 3: y}
    with working_precision(precision_bits):
        quotients = sector_quotients(values)
        sectors = {
            i: SectorEnvelope(c1=float_up(c1), c2=float_up(c2), c3=growth[i])
            for i, (c1, c2) in quotients.items()
        }
    for i, s in sectors.items():
        logger.info("sector %d envelope: c1 = %.6g, c2 = %.6g", i, s.c1, s.c2)
    return EnvelopeConstants(sectors=sectors)


def envelope_reports(
    constants: EnvelopeConstants,
    tolerance: float = EnvelopeDefaults.TOLERANCE,
) -> list[BoundReport]:
    """Each recomputed c1 and c2 within `tolerance` of the printed value."""
    reports = []
    for i, printed in EnvelopeDefaults.SECTORS.items():
        ours = constants[i]
        for name, value, reference in (
            ("c1", ours.c1, printed[0]),
            ("c2", ours.c2, printed[1]),
        ):
            deviation = abs(ival(value) / ival(reference) - 1)
            reports.append(
                check_upper(
                    f"sector {i} {name} = {value:.6g} within "
                    f"{tolerance:.0%} of {reference}",
                    deviation,
                    tolerance,
                    provenance="coefficient envelope",
                    details={"sector": i, "constant": name, "value": value},
                )
            )
    return reports


def check_sector_one_envelope(
    k: int,
    n_max: int,
    constants: EnvelopeConstants | None = None,
) -> BoundReport:
    """Compare the exact coefficients A_k(m, n), ell <= n <= n_max, with the
    sector 1 envelope."""
    constants = constants or EnvelopeConstants.printed()
    basis = echelon_basis(k, n_max + 1)
    envelope = constants[1]
    worst = iv.mpf(0)
    worst_at = (0, 0)
    for m in range(1, basis.ell):
        form = basis.form(m)
        for n in range(basis.ell, n_max + 1):
            if not form[n]:
                continue
            ratio = abs(ival(form[n])) / envelope.bound(basis.ell, m, n)
            if hi(ratio) > hi(worst):
                worst, worst_at = ratio, (m, n)
    return check_upper(
        f"|A_{k}(m, n)| within the sector 1 envelope for n <= {n_max}",
        worst,
        1,
        provenance="coefficient envelope",
        details={"k": k, "worst_m_n": list(worst_at)},
    )
