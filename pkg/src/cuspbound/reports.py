"""Structured records of certified inequalities."""

import logging
from datetime import datetime, timezone
from enum import Enum
from typing import Any

from pydantic import BaseModel, Field, computed_field, field_validator

from .rigor.intervals import float_down, float_up, hi, ival, lo

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1


class Direction(str, Enum):
    """Direction of a certified inequality."""

    UPPER = "<="
    LOWER = ">="


class BoundReport(BaseModel):
    """One certified inequality.

    For an upper bound the certified value is rounded up and the margin is
    reference * (1 + tolerance) - certified. For a lower bound the certified
    value is rounded down and the margin is certified - reference * (1 - tolerance).
    Margins are rounded down.
    """

    claim: str = Field(..., description="Human-readable statement being certified")
    certified_value: float = Field(..., description="Certified bound on the quantity")
    reference_value: float | None = Field(
        default=None, description="Printed or expected comparison value"
    )
    direction: Direction
    margin: float = Field(..., description="Nonnegative exactly when the check holds")
    tolerance: float = Field(default=0.0, ge=0.0)
    provenance: str = Field(default="derived", description="Source anchor")
    details: dict[str, Any] = Field(default_factory=dict)

    @computed_field  # type: ignore[prop-decorator]
    @property
    def passed(self) -> bool:
        return self.margin >= 0

    @field_validator("claim")
    @classmethod
    def _non_empty_claim(cls, v: str) -> str:
        if not v.strip():
            raise ValueError("claim must be non-empty")
        return v


def check_upper(
    claim: str,
    value: Any,
    reference: Any,
    tolerance: float = 0.0,
    provenance: str = "derived",
    details: dict[str, Any] | None = None,
) -> BoundReport:
    """Report `value <= reference * (1 + tolerance)` for an enclosure `value`."""
    limit = ival(reference) * (1 + ival(tolerance))
    margin = ival(lo(limit)) - ival(hi(value))
    report = BoundReport(
        claim=claim,
        certified_value=float_up(value),
        reference_value=float(hi(ival(reference))),
        direction=Direction.UPPER,
        margin=float_down(margin),
        tolerance=tolerance,
        provenance=provenance,
        details=details or {},
    )
    _log(report)
    return report


def check_lower(
    claim: str,
    value: Any,
    reference: Any,
    tolerance: float = 0.0,
    provenance: str = "derived",
    details: dict[str, Any] | None = None,
) -> BoundReport:
    """Report `value >= reference * (1 - tolerance)` for an enclosure `value`."""
    limit = ival(reference) * (1 - ival(tolerance))
    margin = ival(lo(value)) - ival(hi(limit))
    report = BoundReport(
        claim=claim,
        certified_value=float_down(value),
        reference_value=float(lo(ival(reference))),
        direction=Direction.LOWER,
        margin=float_down(margin),
        tolerance=tolerance,
        provenance=provenance,
        details=details or {},
    )
    _log(report)
    return report


def check_exact(
    claim: str,
    mismatches: int,
    provenance: str = "derived",
    details: dict[str, Any] | None = None,
) -> BoundReport:
    """Report an exact check as `mismatches <= 0`."""
    return check_upper(claim, mismatches, 0, 0.0, provenance, details)


def _log(report: BoundReport) -> None:
    if report.passed:
        logger.info("PASS %s (margin %.6g)", report.claim, report.margin)
    else:
        logger.warning("FAIL %s (margin %.6g)", report.claim, report.margin)


class ReportDocument(BaseModel):
    """A versioned collection of reports produced by one command."""

    schema_version: int = Field(default=SCHEMA_VERSION, alias="schema")
    tool_version: str
    command: str
    seed: int
    reports: list[BoundReport] = Field(default_factory=list)
    generated_at: str = Field(
        default_factory=lambda: datetime.now(timezone.utc).isoformat(),
        description="Timestamp, excluded from reproducibility comparisons",
    )

    model_config = {"populate_by_name": True}

    @computed_field  # type: ignore[prop-decorator]
    @property
    def status(self) -> str:
        return "pass" if all(r.passed for r in self.reports) else "fail"

    def to_json(self) -> str:
        return self.model_dump_json(by_alias=True, indent=2)

    @classmethod
    def from_json(cls, text: str) -> "ReportDocument":
        return cls.model_validate_json(text)

    def failures(self) -> list[BoundReport]:
        return [r for r in self.reports if not r.passed]
