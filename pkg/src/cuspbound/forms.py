"""Constructors for the named modular objects as exact q-series.

Each form has at least one construction from Euler products, so a
coefficient oracle independent of series division always exists.
"""

import logging
import re
from collections.abc import Callable
from enum import Enum
from fractions import Fraction

from mpmath import iv
from pydantic import BaseModel, Field, model_validator

from .core.constants import EnvelopeDefaults
from .errors import UnsupportedParameterError
from .reports import BoundReport, check_upper
from .rigor.intervals import decimals_of, hi, ival, working_precision
from .series import (
    QSeries,
    bernoulli,
    distinct_odd_parts_product,
    distinct_parts_product,
    euler_product,
    qs_apply_Vd,
    qs_invert,
    qs_mul,
    qs_pow,
    sigma_table,
)

logger = logging.getLogger(__name__)


def _require_order(T: int, minimum: int = 2) -> None:
    if T < minimum:
        raise UnsupportedParameterError(
            f"Truncation order must be at least {minimum}, got {T}."
        )


# === Eta products ===
def delta_series(T: int) -> QSeries:
    """Delta = q prod (1 - q^n)^24, known below q^T."""
    _require_order(T)
    return qs_pow(euler_product(T - 1), 24).shift(1)


def delta8_series(T: int) -> QSeries:
    """(eta(z) eta(2z))^8 = q prod (1 - q^n)^8 (1 - q^(2n))^8."""
    _require_order(T)
    P = euler_product(T - 1)
    P2 = qs_apply_Vd(P, 2).truncate(T - 1)
    return qs_mul(qs_pow(P, 8), qs_pow(P2, 8)).shift(1)


def psi_series(T: int, construction: str = "product") -> QSeries:
    """The Hauptmodul psi = Delta(z)/Delta(2z) = q^-1 - 24 + ..., known below q^T.

    Args:
        T: Truncation order.
        construction: "product" for q^-1 prod (1 - q^(2n-1))^24, or
            "quotient" for Delta(z) / Delta(2z).
    """
    _require_order(T)
    if construction == "product":
        return qs_pow(distinct_odd_parts_product(T + 1), 24).shift(-1)
    if construction == "quotient":
        D = delta_series(T + 2)
        return qs_mul(D, qs_invert(qs_apply_Vd(D, 2))).truncate(T)
    raise UnsupportedParameterError(f"Unknown construction '{construction}'.")


def phi_series(T: int, construction: str = "product") -> QSeries:
    """phi = 1/psi = q prod (1 + q^n)^24, known below q^T.

    Args:
        T: Truncation order.
        construction: "product" or "inverse" (of psi).
    """
    _require_order(T)
    if construction == "product":
        return qs_pow(distinct_parts_product(T - 1), 24).shift(1)
    if construction == "inverse":
        return qs_invert(psi_series(max(T - 2, 2))).truncate(T)
    raise UnsupportedParameterError(f"Unknown construction '{construction}'.")


# === Eisenstein series ===
def eisenstein_series(k: int, T: int) -> QSeries:
    """E_k = 1 - (2k / B_k) sum sigma_{k-1}(n) q^n for even k >= 2."""
    if k < 2 or k % 2:
        raise UnsupportedParameterError(
            f"Eisenstein series need an even weight k >= 2, got {k}."
        )
    _require_order(T, 1)
    factor = -Fraction(2 * k) / bernoulli(k)
    sig = sigma_table(T, k - 1)
    return QSeries.from_coefficients([1] + [factor * s for s in sig[1:]], 0, T)


def f2_series(T: int, construction: str = "divisor") -> QSeries:
    """F_2 = 2 E_2(2z) - E_2(z) = 1 + 24 sum (sum of odd divisors of n) q^n.

    Args:
        T: Truncation order.
        construction: "divisor" or "eisenstein".
    """
    _require_order(T)
    if construction == "divisor":
        odd = sigma_table(T, 1, odd_only=True)
        return QSeries.from_coefficients([1] + [24 * s for s in odd[1:]], 0, T)
    if construction == "eisenstein":
        E2 = eisenstein_series(2, T)
        return (2 * qs_apply_Vd(E2, 2) - E2).truncate(T)
    raise UnsupportedParameterError(f"Unknown construction '{construction}'.")


def s4_series(T: int) -> QSeries:
    """S_4 = (E_4(z) - E_4(2z)) / 240 = q + 8 q^2 + ..."""
    _require_order(T)
    E4 = eisenstein_series(4, T)
    return ((E4 - qs_apply_Vd(E4, 2)) / 240).truncate(T)


def j_series(T: int) -> QSeries:
    """j = E_4^3 / Delta = q^-1 + 744 + ..., known below q^T."""
    _require_order(T, 3)
    E4 = eisenstein_series(4, T + 1)
    return qs_mul(qs_pow(E4, 3), qs_invert(delta_series(T + 2))).truncate(T)


# === Descriptors ===
class FormName(str, Enum):
    """Names of the constructible forms."""

    ETA24 = "eta24"
    DELTA = "delta"
    PSI = "psi"
    PHI = "phi"
    EISENSTEIN = "eisenstein"
    F2 = "f2"
    S4 = "s4"
    DELTA8 = "delta8"
    J = "j"
    FKM = "fkm"


class FormDescriptor(BaseModel):
    """Metadata of a named form."""

    name: FormName
    weight: int = Field(..., description="Weight; 0 for the modular functions")
    level: int
    valuation: int = Field(..., description="Lowest exponent of the expansion")
    k: int | None = Field(default=None, description="Weight parameter of E_k, F_{k,m}")
    m: int | None = Field(default=None, description="Index m of F_{k,m}")

    @model_validator(mode="after")
    def _check_weight_level(self) -> "FormDescriptor":
        if self.weight % 2:
            raise ValueError("weight must be even")
        if self.level not in (1, 2):
            raise ValueError("level must be 1 or 2")
        return self

    @property
    def label(self) -> str:
        if self.name is FormName.EISENSTEIN:
            return f"E{self.k}"
        if self.name is FormName.FKM:
            return f"F{self.k}_{self.m}"
        return self.name.value

    def expand(self, T: int) -> QSeries:
        """Expansion known below q^T."""
        if self.name is FormName.EISENSTEIN:
            assert self.k is not None
            return eisenstein_series(self.k, T)
        if self.name is FormName.FKM:
            from .basis import echelon_basis

            assert self.k is not None and self.m is not None
            return echelon_basis(self.k, T).form(self.m)
        return FormRegistry.constructor(self.name)(T)


class FormRegistry:
    """Registry of named constructors and their descriptors."""

    _constructors: dict[FormName, Callable[[int], QSeries]] = {}
    _descriptors: dict[FormName, FormDescriptor] = {}

    @classmethod
    def register(
        cls,
        descriptor: FormDescriptor,
        constructor: Callable[[int], QSeries],
    ) -> None:
        """Register a constructor under its descriptor's name."""
        cls._constructors[descriptor.name] = constructor
        cls._descriptors[descriptor.name] = descriptor

    @classmethod
    def constructor(cls, name: FormName) -> Callable[[int], QSeries]:
        if name not in cls._constructors:
            raise UnsupportedParameterError(
                f"Form '{name.value}' not found in registry."
            )
        return cls._constructors[name]

    @classmethod
    def resolve(cls, text: str) -> FormDescriptor:
        """Parse a form name such as 'psi', 'e4' or 'f12_2'.

        Raises:
            UnsupportedParameterError: If the name is not recognised.
        """
        key = text.strip().lower()
        if match := re.fullmatch(r"e(?:isenstein)?(\d+)", key):
            k = int(match.group(1))
            if k < 2 or k % 2:
                raise UnsupportedParameterError(f"Unknown form '{text}'.")
            return FormDescriptor(
                name=FormName.EISENSTEIN, weight=k, level=1, valuation=0, k=k
            )
        if match := re.fullmatch(r"f(\d+)_(\d+)", key):
            k, m = int(match.group(1)), int(match.group(2))
            if k < 8 or k % 2 or not 1 <= m <= k // 4 - 1:
                raise UnsupportedParameterError(f"Unknown form '{text}'.")
            return FormDescriptor(
                name=FormName.FKM, weight=k, level=2, valuation=m, k=k, m=m
            )
        for name, descriptor in cls._descriptors.items():
            if key == name.value:
                return descriptor
        raise UnsupportedParameterError(
            f"Unknown form '{text}'. Known forms: {', '.join(cls.list_forms())}."
        )

    @classmethod
    def list_forms(cls) -> list[str]:
        """List all registered names, plus the parametrised families."""
        return [n.value for n in cls._descriptors] + ["e<k>", "f<k>_<m>"]


FormRegistry.register(
    FormDescriptor(name=FormName.ETA24, weight=12, level=1, valuation=1), delta_series
)
FormRegistry.register(
    FormDescriptor(name=FormName.DELTA, weight=12, level=1, valuation=1), delta_series
)
FormRegistry.register(
    FormDescriptor(name=FormName.PSI, weight=0, level=2, valuation=-1), psi_series
)
FormRegistry.register(
    FormDescriptor(name=FormName.PHI, weight=0, level=2, valuation=1), phi_series
)
FormRegistry.register(
    FormDescriptor(name=FormName.F2, weight=2, level=2, valuation=0), f2_series
)
FormRegistry.register(
    FormDescriptor(name=FormName.S4, weight=4, level=2, valuation=1), s4_series
)
FormRegistry.register(
    FormDescriptor(name=FormName.DELTA8, weight=8, level=2, valuation=1),
    delta8_series,
)
FormRegistry.register(
    FormDescriptor(name=FormName.J, weight=0, level=1, valuation=-1), j_series
)


# === Dual constructions ===
def dual_construction_mismatches(T: int) -> dict[str, int]:
    """Count coefficient disagreements between independent constructions."""
    pairs = {
        "psi": (psi_series(T, "product"), psi_series(T, "quotient")),
        "phi": (phi_series(T, "product"), phi_series(T, "inverse")),
        "f2": (f2_series(T, "divisor"), f2_series(T, "eisenstein")),
    }
    counts = {}
    for name, (a, b) in pairs.items():
        counts[name] = sum(1 for n in range(-1, T) if a[n] != b[n])
    psi, phi = pairs["psi"][0], pairs["phi"][0]
    product = qs_mul(psi, phi)
    counts["psi*phi"] = sum(
        1 for n, c in product if c != (1 if n == 0 else 0)
    )
    return counts


# === j-function envelope ===
def j_leading_ratio(c: int, n: int) -> object:
    """c(n) divided by exp(4 pi sqrt(n)) / (sqrt(2) n^(3/4)), as an interval."""
    lead = iv.exp(4 * iv.pi * iv.sqrt(n)) / (iv.sqrt(2) * iv.mpf(n) ** (iv.mpf(3) / 4))
    return ival(c) / lead


def check_bp_envelope(n_max: int, precision_bits: int = 200) -> BoundReport:
    """Check |eps_n| <= 0.055 / n for 1 <= n <= n_max, where

    c(n) = exp(4 pi sqrt(n)) / (sqrt(2) n^(3/4)) * (1 - 3 / (32 pi sqrt(n)) + eps_n).
    """
    if n_max < 1:
        raise UnsupportedParameterError(f"n_max must be positive, got {n_max}.")
    j = j_series(n_max + 1)
    worst = iv.mpf(0)
    worst_n = 1
    with working_precision(precision_bits):
        for n in range(1, n_max + 1):
            correction = 1 - iv.mpf(3) / (32 * iv.pi * iv.sqrt(n))
            eps = j_leading_ratio(int(j[n]), n) - correction
            scaled = n * abs(eps)
            if hi(scaled) > hi(worst):
                worst, worst_n = scaled, n
        final_ratio = j_leading_ratio(int(j[n_max]), n_max)
        report = check_upper(
            f"n |eps_n| <= {EnvelopeDefaults.J_ENVELOPE} for 1 <= n <= {n_max}",
            worst,
            EnvelopeDefaults.J_ENVELOPE,
            provenance="j-coefficient envelope",
            details={
                "worst_n": worst_n,
                "leading_ratio_at_n_max": float(hi(final_ratio)),
                "decimals": decimals_of(EnvelopeDefaults.J_ENVELOPE),
            },
        )
    return report
