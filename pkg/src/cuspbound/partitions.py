"""Partition counts, the doubling chain of explicit bounds, and the
coefficient bounds and asymptotics of the level 2 Hauptmoduln.
"""

import logging
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Any

import polars as pl
from mpmath import iv, mp
from pydantic import BaseModel, Field, field_validator

from .core.constants import ChainDefaults, RigorDefaults
from .errors import UnsupportedParameterError
from .reports import BoundReport, check_exact, check_upper
from .rigor.intervals import (
    decide,
    decimals_of,
    hi,
    iv_atan,
    ival,
    lo,
    round_up,
    working_precision,
)
from .series import (
    bernoulli,
    distinct_odd_parts_product,
    distinct_parts_product,
    qs_pow,
)

logger = logging.getLogger(__name__)


# === Tables ===
@lru_cache(maxsize=16)
def _q_table(k: int, N: int) -> tuple[int, ...]:
    base = distinct_parts_product(N + 1)
    series = base if k == 1 else qs_pow(base, k)
    return tuple(int(c) for c in series.coeffs)


def q_table(k: int, N: int) -> list[int]:
    """Q_k(n) for 0 <= n <= N: coefficients of prod (1 + q^n)^k.

    Raises:
        UnsupportedParameterError: If k is not one of 1, 2, 4, 8, 16, 24.
    """
    if k not in ChainDefaults.LEVELS:
        raise UnsupportedParameterError(
            f"k must be one of {ChainDefaults.LEVELS}, got {k}."
        )
    if N < 1:
        raise UnsupportedParameterError(f"N must be positive, got {N}.")
    return list(_q_table(k, N))


@lru_cache(maxsize=4)
def _g_table(N: int) -> tuple[int, ...]:
    return tuple(int(c) for c in distinct_odd_parts_product(N + 1).coeffs)


def g_table(N: int) -> list[int]:
    """g(n) for 0 <= n <= N: coefficients of prod (1 - q^(2n-1))."""
    if N < 1:
        raise UnsupportedParameterError(f"N must be positive, got {N}.")
    return list(_g_table(N))


@lru_cache(maxsize=4)
def _hauptmodul_tables(N: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    G = qs_pow(distinct_odd_parts_product(N + 2), 24)
    s = tuple(int(G[n + 1]) for n in range(N + 1))
    b = (0,) + tuple(q_table(24, N)[: N])
    return s, b


def s_coefficients(N: int) -> list[int]:
    """s(n) for 0 <= n <= N, where psi = q^-1 + sum_{n>=0} s(n) q^n."""
    return list(_hauptmodul_tables(N)[0])


def b_coefficients(N: int) -> list[int]:
    """b(n) for 0 <= n <= N, where phi = sum_{n>=1} b(n) q^n."""
    return list(_hauptmodul_tables(N)[1])


# === Explicit estimates ===
def bound_q1(n: int) -> Any:
    """Enclosure of pi / (2 sqrt(3n)) * exp(pi sqrt(n/3)), an upper bound for Q_1(n)."""
    if n < 1:
        raise UnsupportedParameterError(f"n must be positive, got {n}.")
    return iv.pi / (2 * iv.sqrt(3 * iv.mpf(n))) * iv.exp(iv.pi * iv.sqrt(iv.mpf(n) / 3))


def partial_sum_bound(x: Any, t: Any) -> Any:
    """Upper bound for sum_{1 <= k <= x} 1 / sqrt(k t - k^2).

    Equals 2 arctan(sqrt(x) / sqrt(t - x)) + 1 / sqrt(t - 1)
    + 2 sqrt(x) / (t sqrt(t - x)).

    Raises:
        UnsupportedParameterError: If x < 1 or x >= t.
    """
    x, t = ival(x), ival(t)
    if lo(x) < 1 or hi(x) >= lo(t):
        raise UnsupportedParameterError("partial_sum_bound needs 1 <= x < t.")
    gap = iv.sqrt(t - x)
    return (
        2 * iv_atan(iv.sqrt(x) / gap)
        + 1 / iv.sqrt(t - 1)
        + 2 * iv.sqrt(x) / (t * gap)
    )


def power_sum(p: int, r: int, n: int) -> int:
    """sum_{j=0}^{n} j^p (n - j)^r, exactly."""
    total = Fraction(0)
    for i in range(r + 1):
        total += comb(r, i) * n ** (r - i) * (-1) ** i * _faulhaber(p + i, n)
    return int(total)


def _faulhaber(m: int, n: int) -> Fraction:
    """sum_{j=0}^{n} j^m."""
    if m == 0:
        return Fraction(n + 1)
    below = sum(
        (
            comb(m + 1, k) * bernoulli(k) * Fraction(n) ** (m + 1 - k)
            for k in range(m + 1)
        ),
        start=Fraction(0),
    ) / (m + 1)
    return below + Fraction(n) ** m


def convolution_weight(p: int, r: int, n0: int, n_max: int) -> Fraction:
    """W with sum_j j^p (n-j)^r <= W n^(p+r+1) for n0 <= n <= n_max.

    Never below the Beta integral p! r! / (p+r+1)!.
    """
    d = p + r + 1
    beta = Fraction(factorial(p) * factorial(r), factorial(d))
    worst = max(Fraction(power_sum(p, r, n), n**d) for n in range(n0, n_max + 1))
    return max(worst, beta)


def convolution_sum_bound(n0: int) -> Any:
    """Bound for sum_{k=1}^{n-1} 1 / sqrt(k n - k^2), uniform in n >= n0.

    Starts from partial_sum_bound(n - 1, n) at n = n0 and relaxes its
    increasing arctan term to pi and its last term to 2 / sqrt(n), giving
    pi + 1 / sqrt(n0 - 1) + 2 / sqrt(n0).
    """
    if n0 < 3:
        raise UnsupportedParameterError(f"n0 must be at least 3, got {n0}.")
    x, t = ival(n0 - 1), ival(n0)
    at_threshold = partial_sum_bound(x, t)
    # 2 arctan(sqrt(n - 1)) < pi and 2 sqrt(n - 1) / n < 2 / sqrt(n)
    arctan_gap = iv.pi - 2 * iv_atan(iv.sqrt(x))
    last_gap = 2 / iv.sqrt(t) - 2 * iv.sqrt(x) / t
    return at_threshold + arctan_gap + last_gap


def q2_constant(n0: int) -> Any:
    """C with Q_2(n) < C exp(pi sqrt(2n/3)) for n >= n0, before rounding.

    The interior of the convolution Q_1 * Q_1 contributes
    pi^2 / 12 * convolution_sum_bound(n0); the two end terms are bounded at n0.
    """
    interior = iv.pi**2 / 12 * convolution_sum_bound(n0)
    ends = (
        iv.pi
        / iv.sqrt(3 * iv.mpf(n0))
        * iv.exp(
            iv.pi * iv.sqrt(iv.mpf(n0) / 3) - iv.pi * iv.sqrt(2 * iv.mpf(n0) / 3)
        )
    )
    return interior + ends


# === The doubling chain ===
class ChainLink(BaseModel):
    """One step of the bound Q_k(n) < C n^p exp(A sqrt(n))."""

    k: int
    constant: str = Field(..., description="Computed constant rounded up as printed")
    raw_constant: float = Field(..., description="Computed constant before rounding")
    printed: str
    n_power: int
    exponent: str = Field(..., description="The exponent A sqrt(n) as text")
    threshold: int = Field(..., description="n from which the derivation applies")
    weight: str = Field(default="1", description="Convolution weight W")
    minimal_n: int | None = Field(
        default=None, description="Least n from which the envelope holds on the range"
    )
    verified_until: int | None = None

    @field_validator("k")
    @classmethod
    def _supported(cls, v: int) -> int:
        if v not in ChainDefaults.LEVELS[1:]:
            raise ValueError(f"k must be one of {ChainDefaults.LEVELS[1:]}")
        return v

    def exponent_coefficient(self) -> Any:
        """A = pi sqrt(k / 3)."""
        return iv.pi * iv.sqrt(iv.mpf(self.k) / 3)

    def envelope_log(self, n: int) -> Any:
        return (
            iv.log(ival(Fraction(self.constant)))
            + self.n_power * iv.log(iv.mpf(n))
            + self.exponent_coefficient() * iv.sqrt(n)
        )


_EXPONENTS = {
    2: "pi*sqrt(2n/3)",
    4: "2*pi*sqrt(n/3)",
    8: "2*pi*sqrt(2n/3)",
    16: "4*pi*sqrt(n/3)",
    24: "2*pi*sqrt(2n)",
}

# (k, left factor, right factor): Q_k = Q_left * Q_right
_STEPS = ((4, 2, 2), (8, 4, 4), (16, 8, 8), (24, 16, 8))


def chain_constants(
    verify_range: int = ChainDefaults.VERIFY_RANGE,
    precision_bits: int = RigorDefaults.PRECISION_BITS,
) -> list[ChainLink]:
    """Recompute the chain Q_2 -> Q_4 -> Q_8 -> Q_16 -> Q_24.

    Each constant is rounded up at the printed precision and the rounded value
    feeds the next step. Every envelope is then compared with the exact table
    on 1 <= n <= verify_range and the least n from which it holds is recorded.
    """
    links: dict[int, ChainLink] = {}
    with working_precision(precision_bits):
        n0 = ChainDefaults.Q2_THRESHOLD
        links[2] = _link(2, q2_constant(n0), n0, Fraction(1))

        n0 = ChainDefaults.Q4_THRESHOLD
        for k, left, right in _STEPS:
            p, r = links[left].n_power, links[right].n_power
            weight = convolution_weight(p, r, n0, verify_range)
            raw = (
                ival(Fraction(links[left].constant))
                * ival(Fraction(links[right].constant))
                * ival(weight)
            )
            links[k] = _link(k, raw, n0, weight)

    tables = {k: q_table(k, verify_range) for k in links}
    verified = []
    for k, link in links.items():
        minimal = _minimal_holding_n(link, tables[k], precision_bits)
        verified.append(
            link.model_copy(
                update={"minimal_n": minimal, "verified_until": verify_range}
            )
        )
        logger.info(
            "Q_%d < %s n^%d exp(%s) holds for %s <= n <= %d",
            k,
            link.constant,
            link.n_power,
            link.exponent,
            minimal,
            verify_range,
        )
    return verified


def _link(k: int, raw: Any, threshold: int, weight: Fraction) -> ChainLink:
    printed = ChainDefaults.CONSTANTS[k]
    rounded = round_up(raw, decimals_of(printed))
    return ChainLink(
        k=k,
        constant=_decimal_text(rounded, decimals_of(printed)),
        raw_constant=float(hi(raw)),
        printed=printed,
        n_power=ChainDefaults.N_POWERS[k],
        exponent=_EXPONENTS[k],
        threshold=threshold,
        weight=str(weight),
    )


def _decimal_text(value: Fraction, decimals: int) -> str:
    scaled = value * 10**decimals
    assert scaled.denominator == 1
    digits = str(abs(scaled.numerator)).rjust(decimals + 1, "0")
    sign = "-" if scaled < 0 else ""
    if decimals == 0:
        return sign + digits
    return f"{sign}{digits[:-decimals]}.{digits[-decimals:]}"


def _minimal_holding_n(link: ChainLink, table: list[int], bits: int) -> int | None:
    """Least n0 such that Q_k(n) < envelope(n) for every n0 <= n < len(table)."""
    minimal = None
    for n in range(len(table) - 1, 0, -1):
        value = table[n]
        holds = decide(
            lambda n=n, value=value: link.envelope_log(n) - iv.log(ival(value)),
            start_bits=bits,
            label=f"Q_{link.k}({n}) envelope",
        )
        if not holds:
            break
        minimal = n
    return minimal


def chain_reports(links: list[ChainLink] | None = None) -> list[BoundReport]:
    """Reproduction and domination checks for every chain link."""
    links = links if links is not None else chain_constants()
    reports = []
    for link in links:
        reports.append(
            check_upper(
                f"Q_{link.k} chain constant {link.constant} "
                f"within 2% of {link.printed}",
                Fraction(link.constant),
                link.printed,
                ChainDefaults.TOLERANCE,
                provenance="explicit bound chain",
                details={"raw": link.raw_constant, "n_power": link.n_power},
            )
        )
        reports.append(
            check_upper(
                f"Q_{link.k}(n) < {link.constant} n^{link.n_power} "
                f"exp({link.exponent}) "
                f"for {link.threshold} <= n <= {link.verified_until}",
                link.minimal_n if link.minimal_n is not None else 10**9,
                link.threshold,
                provenance="explicit bound chain",
                details={"minimal_n": link.minimal_n},
            )
        )
    return reports


# === Hauptmodul coefficient bounds ===
def verify_thm3(
    N: int, precision_bits: int = RigorDefaults.PRECISION_BITS
) -> BoundReport:
    """Check |s(n)| < 0.9 n^11 exp(2 pi sqrt(2n)) and b(n) < 0.08 n^11
    exp(2 pi sqrt(2n)) for 1 <= n <= N with exact coefficients.

    The certified value is the largest ratio coefficient / envelope, which must
    stay below 1.
    """
    if N < 1:
        raise UnsupportedParameterError(f"N must be positive, got {N}.")
    s, b = _hauptmodul_tables(N)
    worst: dict[str, tuple[Any, int]] = {}
    violations: list[str] = []
    with working_precision(precision_bits):
        for name, table, constant in (
            ("s", s, ChainDefaults.S_CONSTANT),
            ("b", b, ChainDefaults.B_CONSTANT),
        ):
            worst_ratio, worst_n = iv.mpf(0), 1
            log_c = iv.log(ival(constant))
            for n in range(1, N + 1):
                coeff = abs(table[n])
                log_env = (
                    log_c
                    + 11 * iv.log(iv.mpf(n))
                    + 2 * iv.pi * iv.sqrt(2 * iv.mpf(n))
                )
                ratio = iv.exp(iv.log(ival(coeff)) - log_env)
                if hi(ratio) > hi(worst_ratio):
                    worst_ratio, worst_n = ratio, n
                if hi(ratio) >= 1 and not decide(
                    lambda n=n, coeff=coeff, c=constant: (
                        iv.log(ival(c))
                        + 11 * iv.log(iv.mpf(n))
                        + 2 * iv.pi * iv.sqrt(2 * iv.mpf(n))
                        - iv.log(ival(coeff))
                    ),
                    start_bits=precision_bits,
                    label=f"{name}({n}) envelope",
                ):
                    violations.append(f"{name}({n})")
            worst[name] = (worst_ratio, worst_n)
        s_worst, b_worst = worst["s"][0], worst["b"][0]
        value = s_worst if hi(s_worst) >= hi(b_worst) else b_worst
        report = check_upper(
            "|s(n)| < 0.9 n^11 e^(2 pi sqrt(2n)) and "
            f"b(n) < 0.08 n^11 e^(2 pi sqrt(2n)) for 1 <= n <= {N}",
            value,
            1,
            provenance="Hauptmodul coefficient bounds",
            details={
                "worst_s_ratio": float(hi(worst["s"][0])),
                "worst_s_n": worst["s"][1],
                "worst_b_ratio": float(hi(worst["b"][0])),
                "worst_b_n": worst["b"][1],
                "violations": violations[:10],
            },
        )
    if violations:
        logger.warning("Envelope violated at %s", ", ".join(violations[:10]))
    return report


# === Asymptotic profiles ===
class AsymptoticProfile(BaseModel):
    """lambda(n) ~ c n^alpha exp(A sqrt(n))."""

    c: float = Field(..., gt=0)
    alpha: float
    A: float = Field(..., gt=0)

    def at(self, n: int) -> Any:
        """Enclosure of c n^alpha exp(A sqrt n) using the stored float parameters."""
        return ival(self.c) * iv.mpf(n) ** ival(self.alpha) * iv.exp(
            ival(self.A) * iv.sqrt(n)
        )


def dm_compose(p: AsymptoticProfile, r: AsymptoticProfile) -> AsymptoticProfile:
    """Profile of the Cauchy product of two sequences with the given profiles.

    c = c_f c_g 2 sqrt(2 pi) A^(2 alpha + 1) B^(2 beta + 1)
    / (A^2 + B^2)^(5/4 + alpha + beta), with exponent sqrt(A^2 + B^2) and
    power alpha + beta + 3/4.
    """
    with mp.workdps(40):
        A, B = mp.mpf(p.A), mp.mpf(r.A)
        alpha, beta = mp.mpf(p.alpha), mp.mpf(r.alpha)
        c = (
            mp.mpf(p.c)
            * mp.mpf(r.c)
            * 2
            * mp.sqrt(2 * mp.pi)
            * A ** (2 * alpha + 1)
            * B ** (2 * beta + 1)
            / (A**2 + B**2) ** (mp.mpf(5) / 4 + alpha + beta)
        )
        return AsymptoticProfile(
            c=float(c),
            alpha=float(alpha + beta + mp.mpf(3) / 4),
            A=float(mp.sqrt(A**2 + B**2)),
        )


def distinct_parts_profile() -> AsymptoticProfile:
    """Q(n) ~ exp(pi sqrt(n/3)) / (4 3^(1/4) n^(3/4))."""
    return AsymptoticProfile(
        c=float(1 / (4 * mp.mpf(3) ** 0.25)), alpha=-0.75, A=float(mp.pi / mp.sqrt(3))
    )


def distinct_odd_parts_profile() -> AsymptoticProfile:
    """|g(n)| profile sqrt(6) / 24^(3/4) n^(-3/4) exp(pi sqrt(n/6))."""
    return AsymptoticProfile(
        c=float(mp.sqrt(6) / mp.mpf(24) ** 0.75),
        alpha=-0.75,
        A=float(mp.pi / mp.sqrt(6)),
    )


def compose_power(base: AsymptoticProfile, times: int) -> AsymptoticProfile:
    """Profile of the times-fold Cauchy power, by binary splitting."""
    if times < 1:
        raise UnsupportedParameterError(f"times must be positive, got {times}.")
    if times == 1:
        return base
    half = compose_power(base, times // 2)
    result = dm_compose(half, half)
    return dm_compose(result, base) if times % 2 else result


def hauptmodul_profiles() -> dict[str, AsymptoticProfile]:
    """Profiles of b(n) and |s(n)| by the chain 1 -> 2 -> 4 -> 8 -> 16, then 16 + 8."""
    return {
        "b": hauptmodul_power_profile("phi", 1),
        "s": hauptmodul_power_profile("psi", 1),
    }


def hauptmodul_power_profile(kind: str, r: int) -> AsymptoticProfile:
    """Coefficient profile of phi^r (kind "phi") or psi^r (kind "psi")."""
    if r < 1:
        raise UnsupportedParameterError(f"r must be positive, got {r}.")
    if kind == "phi":
        base = distinct_parts_profile()
    elif kind == "psi":
        base = distinct_odd_parts_profile()
    else:
        raise UnsupportedParameterError(f"kind must be 'phi' or 'psi', got '{kind}'.")
    if r == 1:
        q16 = compose_power(base, 16)
        q8 = compose_power(base, 8)
        return dm_compose(q16, q8)
    return compose_power(base, 24 * r)


def verify_thm2_trend(N: int, precision_bits: int = 100) -> pl.DataFrame:
    """Ratios exact coefficient / asymptotic formula at n = N/4, N/2, N.

    b(n) ~ 2^(1/4)/8192 n^(-3/4) exp(2 pi sqrt(2n)) and
    |s(n)| ~ 1/2 n^(-3/4) exp(2 pi sqrt(n)).
    """
    if N < 500:
        raise UnsupportedParameterError(f"N must be at least 500, got {N}.")
    s, b = _hauptmodul_tables(N)
    points = [N // 4, N // 2, N]
    rows = []
    with working_precision(precision_bits):
        formulas = {
            "b": (iv.mpf(2) ** (iv.mpf(1) / 4) / 8192, 2 * iv.pi * iv.sqrt(2), b),
            "s": (iv.mpf(1) / 2, 2 * iv.pi, s),
        }
        for name, (c, A, table) in formulas.items():
            for n in points:
                log_formula = (
                    iv.log(c) - iv.mpf(3) / 4 * iv.log(iv.mpf(n)) + A * iv.sqrt(n)
                )
                ratio = iv.exp(iv.log(ival(abs(table[n]))) - log_formula)
                mid = (lo(ratio) + hi(ratio)) / 2
                rows.append(
                    {
                        "series": name,
                        "n": n,
                        "ratio": float(mid),
                        "distance": float(abs(mid - 1)),
                    }
                )
    return pl.DataFrame(rows)


def thm2_trend_reports(N: int, tolerance: float = 0.05) -> list[BoundReport]:
    """Within-tolerance and monotone-approach checks on the ratio table."""
    table = verify_thm2_trend(N)
    reports = []
    for name in ("b", "s"):
        rows = table.filter(pl.col("series") == name).sort("n")
        distances = rows.get_column("distance").to_list()
        last = rows.row(-1, named=True)
        reports.append(
            check_upper(
                f"{name}(n) / asymptotic within {tolerance:.0%} of 1 "
                f"at n = {last['n']}",
                Fraction(last["distance"]),
                Fraction(tolerance).limit_denominator(1000),
                provenance="Hauptmodul asymptotics",
                details={"ratio": last["ratio"]},
            )
        )
        steps = sum(1 for a, c in zip(distances, distances[1:], strict=False) if c >= a)
        reports.append(
            check_upper(
                f"{name}(n) / asymptotic approaches 1 monotonically",
                steps,
                0,
                provenance="Hauptmodul asymptotics",
                details={"distances": distances},
            )
        )
    return reports


def sign_pattern_violations(N: int) -> dict[str, int]:
    """Count n <= N with (-1)^(n+1) s(n) <= 0 or b(n) <= 0."""
    s, b = _hauptmodul_tables(N)
    return {
        "s": sum(1 for n in range(1, N + 1) if (-1) ** (n + 1) * s[n] <= 0),
        "b": sum(1 for n in range(1, N + 1) if b[n] <= 0),
    }


def profile_reports(tolerance: float = 1e-9) -> list[BoundReport]:
    """Composed profiles of b(n) and |s(n)| against their closed forms.

    b(n) ~ 2^(1/4)/8192 n^(-3/4) exp(2 pi sqrt(2n)) and
    |s(n)| ~ 1/2 n^(-3/4) exp(2 pi sqrt(n)).
    """
    expected = {
        "b": AsymptoticProfile(
            c=float(mp.mpf(2) ** 0.25 / 8192),
            alpha=-0.75,
            A=float(2 * mp.pi * mp.sqrt(2)),
        ),
        "s": AsymptoticProfile(c=0.5, alpha=-0.75, A=float(2 * mp.pi)),
    }
    reports = []
    for name, profile in hauptmodul_profiles().items():
        target = expected[name]
        gap = max(
            abs(profile.c / target.c - 1),
            abs(profile.A / target.A - 1),
            abs(profile.alpha - target.alpha),
        )
        reports.append(
            check_upper(
                f"composed {name}(n) profile matches its closed form",
                Fraction(gap),
                Fraction(tolerance),
                provenance="profile composition",
                details={
                    "composed": profile.model_dump(),
                    "expected": target.model_dump(),
                },
            )
        )
    return reports


def distinct_parts_reports(
    N: int = 2000, precision_bits: int = RigorDefaults.PRECISION_BITS
) -> list[BoundReport]:
    """Q_1(n) below bound_q1(n) and |g(n)| <= Q_1(n) for 1 <= n <= N."""
    q1 = q_table(1, N)
    g = g_table(N)
    above = [n for n in range(1, N + 1) if abs(g[n]) > q1[n]]
    worst, worst_n = iv.mpf(0), 1
    with working_precision(precision_bits):
        for n in range(1, N + 1):
            ratio = ival(q1[n]) / bound_q1(n)
            if hi(ratio) > hi(worst):
                worst, worst_n = ratio, n
        reports = [
            check_upper(
                f"Q_1(n) < pi/(2 sqrt(3n)) exp(pi sqrt(n/3)) for 1 <= n <= {N}",
                worst,
                1,
                provenance="distinct partitions",
                details={"worst_n": worst_n},
            )
        ]
    reports.append(
        check_exact(
            f"|g(n)| <= Q_1(n) for 1 <= n <= {N}",
            len(above),
            provenance="distinct partitions",
            details={"violations": above[:10]},
        )
    )
    return reports
