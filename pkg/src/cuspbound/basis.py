"""Echelon bases of cusp form spaces at levels 1 and 2.

At level 2 the basis F_{k,m} = q^m + O(q^ell), 1 <= m <= ell - 1, is obtained
by exact row reduction of the products Delta_8 F_2^i S_4^j with 2i + 4j = k - 8.
The generating function in two variables is kept as an independent identity
check.
"""

import logging
import math
from collections.abc import Sequence
from fractions import Fraction
from functools import lru_cache

from pydantic import BaseModel, ConfigDict, Field

from .errors import BasisConstructionError, UnsupportedParameterError
from .forms import (
    delta8_series,
    delta_series,
    eisenstein_series,
    f2_series,
    phi_series,
    psi_series,
    s4_series,
)
from .reports import BoundReport, check_exact
from .series import QSeries, qs_invert, qs_mul, qs_pow, qs_sum

logger = logging.getLogger(__name__)


class EchelonBasis(BaseModel):
    """Basis with form m equal to q^m plus terms at exponents >= ell only."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    k: int = Field(..., description="Weight")
    level: int = Field(default=2, description="1 or 2")
    ell: int = Field(..., description="First exponent not fixed by the echelon form")
    kprime: int | None = Field(
        default=None, description="k - 4 ell at level 2, unused at level 1"
    )
    trunc: int = Field(..., description="Every form is known below q^trunc")
    forms: tuple[QSeries, ...]
    denominators: dict[int, int] = Field(
        default_factory=dict, description="Common denominator of each non-integral form"
    )

    @property
    def dimension(self) -> int:
        return len(self.forms)

    def form(self, m: int) -> QSeries:
        """The basis element with leading term q^m.

        Raises:
            UnsupportedParameterError: If m is outside 1..dimension.
        """
        if not 1 <= m <= self.dimension:
            raise UnsupportedParameterError(
                f"Index m must lie in 1..{self.dimension} for weight {self.k}, got {m}."
            )
        return self.forms[m - 1]

    def is_integral(self) -> bool:
        return not self.denominators


# === Dimensions ===
def dim_sk2(k: int) -> int:
    """dim S_k(Gamma_0(2)) = floor(k/4) - 1 for even k >= 8, zero for k = 2, 4, 6.

    Raises:
        UnsupportedParameterError: If k is odd or below 2.
    """
    if k < 2 or k % 2:
        raise UnsupportedParameterError(
            f"Weight must be an even integer >= 2, got {k}."
        )
    if k < 8:
        return 0
    return k // 4 - 1


def dim_sk1(k: int) -> int:
    """dim S_k(SL_2(Z)) for even k >= 2."""
    if k < 2 or k % 2:
        raise UnsupportedParameterError(
            f"Weight must be an even integer >= 2, got {k}."
        )
    if k < 12 or k == 14:
        return 0
    return k // 12 - 1 if k % 12 == 2 else k // 12


def _require_weight(k: int) -> int:
    if k < 8 or k % 2:
        raise UnsupportedParameterError(
            f"Weight must be an even integer >= 8, got {k}."
        )
    return k // 4


# === Row reduction ===
def _reduce(rows: list[list[int]]) -> tuple[list[list[int]], list[int]]:
    """Fraction-free Gauss-Jordan elimination, pivoting left to right.

    Returns the nonzero reduced rows and their pivot columns. Rows are kept
    primitive (content divided out) after every update.
    """
    rows = [list(r) for r in rows]
    pivots: list[int] = []
    width = len(rows[0]) if rows else 0
    rank = 0
    for col in range(width):
        if rank == len(rows):
            break
        found = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if found is None:
            continue
        rows[rank], rows[found] = rows[found], rows[rank]
        pivot_row = rows[rank]
        p = pivot_row[col]
        for i, row in enumerate(rows):
            if i == rank or not row[col]:
                continue
            c = row[col]
            updated = [p * x - c * y for x, y in zip(row, pivot_row)]
            g = math.gcd(*updated)
            rows[i] = [x // g for x in updated] if g > 1 else updated
        pivots.append(col)
        rank += 1
    return rows[:rank], pivots


def _echelon_forms(
    spanning: Sequence[QSeries], trunc: int, expected: int
) -> tuple[tuple[QSeries, ...], dict[int, int]]:
    """Reduce cusp forms known below q^trunc to q^m + O(q^(expected + 1))."""
    rows = []
    for f in spanning:
        coeffs = f.window(1, trunc)
        scale = math.lcm(*(c.denominator for c in coeffs)) if coeffs else 1
        rows.append([int(c * scale) for c in coeffs])
    reduced, pivots = _reduce(rows)
    if pivots != list(range(expected)):
        raise BasisConstructionError(
            f"Spanning set has pivots at exponents {[p + 1 for p in pivots]}, "
            f"expected 1..{expected}."
        )

    forms = []
    denominators = {}
    for m, (row, col) in enumerate(zip(reduced, pivots), start=1):
        lead = row[col]
        coeffs = [Fraction(x, lead) for x in row]
        form = QSeries.from_coefficients(coeffs, 1, trunc)
        den = math.lcm(*(c.denominator for c in coeffs))
        if den != 1:
            denominators[m] = den
        forms.append(form)
    return tuple(forms), denominators


# === Level 2 ===
def spanning_set(k: int, T: int) -> list[tuple[int, int, QSeries]]:
    """The products Delta_8 F_2^i S_4^j of weight k, as (i, j, series) known below q^T.

    The valuation of the (i, j) product is 1 + j.
    """
    _require_weight(k)
    d8 = delta8_series(T)
    f2 = f2_series(T)
    s4 = s4_series(T)
    terms = []
    for j in range((k - 8) // 4 + 1):
        i = (k - 8 - 4 * j) // 2
        product = qs_mul(qs_mul(d8, qs_pow(s4, j)), qs_pow(f2, i))
        terms.append((i, j, product.truncate(T)))
    return terms


@lru_cache(maxsize=64)
def echelon_basis(k: int, T: int) -> EchelonBasis:
    """Echelon basis F_{k,m} of S_k(Gamma_0(2)), each form known below q^T.

    Args:
        k: Even weight >= 8.
        T: Truncation order; must exceed ell = floor(k/4).

    Raises:
        UnsupportedParameterError: For an unsupported weight or too small T.
        BasisConstructionError: If the spanning set does not have full rank.
    """
    ell = _require_weight(k)
    if T <= ell:
        raise UnsupportedParameterError(
            f"Truncation order must exceed ell = {ell} for weight {k}, got {T}."
        )
    spanning = [series for _, _, series in spanning_set(k, T)]
    forms, denominators = _echelon_forms(spanning, T, ell - 1)
    if denominators:
        logger.info("Weight %d basis has denominators %s", k, denominators)
    logger.debug("Echelon basis for k = %d: %d forms below q^%d", k, len(forms), T)
    return EchelonBasis(
        k=k,
        level=2,
        ell=ell,
        kprime=k - 4 * ell,
        trunc=T,
        forms=forms,
        denominators=denominators,
    )


def expand_linear_combo(
    k: int,
    a: Sequence[int | Fraction],
    T: int,
    basis: EchelonBasis | None = None,
) -> QSeries:
    """The form sum_m a(m) F_{k,m}, known below q^T.

    Raises:
        UnsupportedParameterError: If len(a) differs from the dimension.
    """
    basis = basis or echelon_basis(k, max(T, k // 4 + 1))
    if len(a) != basis.dimension:
        raise UnsupportedParameterError(
            f"Expected {basis.dimension} coefficients for weight {basis.k}, "
            f"got {len(a)}."
        )
    terms = [
        basis.form(m).scale(Fraction(c)).truncate(T)
        for m, c in enumerate(a, start=1)
    ]
    if not terms:
        return QSeries.zero(T, valuation=1)
    return qs_sum(terms).truncate(T)


# === Generating function ===
def _generating_coefficients(
    k: int, T_q: int, T_p: int
) -> dict[int, QSeries]:
    """Coefficients C_m(q) of p^(-m), 0 <= m <= ell - 1, of

        X(z) / X(tau) * psi(tau) F_2(tau) / (psi(tau) - psi(z)),

    X = S_4^ell psi F_{k'}, in the region |p| < |q|.

    With Y = F_2 phi / (S_4^ell F_{k'}) in p, the expansion is
    X(z) sum_r (Y phi^r)(p) psi(z)^r, and only r <= ell - 1 - m reaches p^(-m).
    """
    ell = k // 4
    kprime = k - 4 * ell
    L = T_q + 2 * ell + 4
    P = max(T_p, ell + 1)

    f_kprime = f2_series(L) if kprime == 2 else QSeries.one(L)
    psi_q = psi_series(L)
    X = qs_mul(qs_mul(qs_pow(s4_series(L), ell), psi_q), f_kprime)

    phi_p = phi_series(P)
    denominator = qs_pow(s4_series(P), ell)
    if kprime == 2:
        denominator = qs_mul(denominator, f2_series(P))
    Y = qs_mul(qs_mul(f2_series(P), phi_p), qs_invert(denominator))

    # y[r] is Y phi^r in p; psi_powers[r] is X psi^r in q
    y = [Y]
    psi_powers = [X]
    for _ in range(1, ell):
        y.append(qs_mul(y[-1], phi_p))
        psi_powers.append(qs_mul(psi_powers[-1], psi_q))

    coefficients = {}
    for m in range(ell):
        terms = [psi_powers[r].scale(y[r][-m]) for r in range(ell - m)]
        coefficients[m] = qs_sum(terms).truncate(T_q + 1)
    return coefficients


def genfunc_crosscheck(k: int, T_q: int = 20, T_p: int | None = None) -> BoundReport:
    """Compare the generating function with the echelon basis through q^T_q.

    The coefficient of p^(-m) must equal F_{k,m} for 1 <= m <= ell - 1; the
    p^0 coefficient is not a cusp form and must have q-valuation <= 0.
    """
    ell = _require_weight(k)
    T_p = T_p if T_p is not None else ell + 2
    coefficients = _generating_coefficients(k, T_q, T_p)
    basis = echelon_basis(k, max(T_q + 1, ell + 1))

    mismatches = []
    for m in range(1, ell):
        ours, theirs = coefficients[m], basis.form(m)
        for n in range(-ell, T_q + 1):
            if ours[n] != theirs[n]:
                mismatches.append((m, n))
    constant_lead = coefficients[0].leading_exponent()
    if constant_lead is not None and constant_lead > 0:
        mismatches.append((0, constant_lead))

    if mismatches:
        logger.warning(
            "Generating function mismatches for k = %d: %s", k, mismatches[:10]
        )
    return check_exact(
        f"generating function coefficients equal F_{{{k},m}} through q^{T_q}",
        len(mismatches),
        provenance="generating function",
        details={
            "k": k,
            "ell": ell,
            "mismatches": [list(t) for t in mismatches[:20]],
            "p0_valuation": constant_lead,
        },
    )


# === Level 1 ===
@lru_cache(maxsize=32)
def miller_basis(k: int, T: int) -> EchelonBasis:
    """Echelon basis of S_k(SL_2(Z)) from Delta E_4^i E_6^j with 4i + 6j = k - 12.

    Raises:
        UnsupportedParameterError: If k is odd, below 12, or T is too small.
    """
    if k < 12 or k % 2:
        raise UnsupportedParameterError(
            f"Level one weight must be an even integer >= 12, got {k}."
        )
    d = dim_sk1(k)
    if T <= d + 1:
        raise UnsupportedParameterError(
            f"Truncation order must exceed {d + 1} for weight {k}, got {T}."
        )
    delta = delta_series(T)
    e4 = eisenstein_series(4, T)
    e6 = eisenstein_series(6, T)
    spanning = []
    for j in range((k - 12) // 6 + 1):
        rest = k - 12 - 6 * j
        if rest % 4:
            continue
        product = qs_mul(qs_mul(delta, qs_pow(e4, rest // 4)), qs_pow(e6, j))
        spanning.append(product.truncate(T))
    forms, denominators = _echelon_forms(spanning, T, d)
    return EchelonBasis(
        k=k, level=1, ell=d + 1, trunc=T, forms=forms, denominators=denominators
    )


def echelon_reports(
    weights: Sequence[int] = range(8, 61, 2), T: int = 40
) -> list[BoundReport]:
    """Form m is q^m + O(q^ell) for every weight in `weights`."""
    failing = []
    for k in weights:
        basis = echelon_basis(k, max(T, k // 4 + 1))
        for m in range(1, basis.ell):
            form = basis.form(m)
            if any(form[n] != (1 if n == m else 0) for n in range(1, basis.ell)):
                failing.append([k, m])
    return [
        check_exact(
            f"F_{{k,m}} = q^m + O(q^ell) for k in {min(weights)}..{max(weights)}",
            len(failing),
            provenance="echelon basis",
            details={"failing": failing},
        )
    ]
