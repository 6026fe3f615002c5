"""Numerical constants consolidated in a single source of truth.

Printed constants are stored as decimal strings: the number of digits after the
decimal point is the precision at which a reproduced value is rounded before it
is compared or reused downstream.
"""

from collections.abc import Mapping
from fractions import Fraction
from typing import Final


class SeriesDefaults:
    """Defaults for exact q-series arithmetic."""

    TRUNCATION: Final[int] = 120
    """Default working truncation order for constructed series."""

    STRATEGY: Final[str] = "packed"
    """Default convolution strategy name in the convolution registry."""

    CSV_SEPARATOR: Final[str] = ","
    """Separator of the `n,num/den` coefficient exchange format."""


class RigorDefaults:
    """Defaults for certified evaluation."""

    # === Precision ===
    PRECISION_BITS: Final[int] = 200
    """Working precision for interval evaluation."""

    MAX_PRECISION_BITS: Final[int] = 2000
    """Precision cap for doubling on indeterminate comparisons."""

    # === Grids ===
    GRID_POINTS: Final[int] = 40000
    """Grid density for the ψ-type tables (steps of 1/40000 on |x| <= 1/2)."""

    S4_GRID_POINTS: Final[int] = 20000
    """Grid density for the S_4 tables (steps of 1/20000 on |x| <= 1/2)."""

    FIXED_POINT_BITS: Final[int] = 128
    """Scale 2^bits of the integer Horner kernel used on grids."""

    # === Evaluation lines ===
    Y_LINE: Final[Fraction] = Fraction(173, 200)
    """Imaginary part y = 0.865 of the lower evaluation line."""

    V_LINE: Final[Fraction] = Fraction(29, 25)
    """Imaginary part v = 1.16 of the upper evaluation line."""

    SUITE_TOLERANCE: Final[float] = 0.01
    """Relative tolerance for the reproduced evaluation table."""

    TRANSFORM_TOLERANCE: Final[float] = 1e-8
    """Relative tolerance for transformation identity checks."""


class DisplayedBounds:
    """The printed evaluation table, as decimal strings."""

    F2_Z: Final[str] = "1.10514"
    F2_TAU: Final[str] = "1.01642"
    S4_Z: Final[str] = "0.00452"
    S4_TAU: Final[str] = "0.00067"
    PSI_Z: Final[str] = "254.56248"
    PSI_Z_SAMPLE: Final[str] = "254.52626"
    PSI_TAU: Final[str] = "1439.51688"
    PHI_HALF_Z: Final[str] = "0.34276"
    F2_INVERSION: Final[str] = "1.35659"
    S4_INVERSION: Final[str] = "0.0042"
    S4_SHIFT: Final[str] = "0.044063"
    F2_SHIFT: Final[str] = "2.69392"
    PHI_Z: Final[str] = "0.00486"
    PSI_HALF_Z: Final[str] = "15.95619"
    ABS_Z: Final[str] = "0.99912"
    PSI_DERIVATIVE: Final[str] = "1448.69599"
    S4_DERIVATIVE: Final[str] = "0.00871"


class ChainDefaults:
    """The doubling chain for r-colored distinct-part partitions."""

    LEVELS: Final[tuple[int, ...]] = (1, 2, 4, 8, 16, 24)
    """Supported colour counts k of prod (1 + q^n)^k."""

    CONSTANTS: Final[Mapping[int, str]] = {
        2: "3.44",
        4: "12.08",
        8: "24.33",
        16: "4.23",
        24: "0.08",
    }
    """Printed chain constants."""

    N_POWERS: Final[Mapping[int, int]] = {2: 0, 4: 1, 8: 3, 16: 7, 24: 11}
    """Printed powers of n in the chain envelopes."""

    Q2_THRESHOLD: Final[int] = 10
    """Starting n of the partial summation estimate for Q_2."""

    Q4_THRESHOLD: Final[int] = 50
    """Starting n of the weight estimate for Q_4 and beyond."""

    VERIFY_RANGE: Final[int] = 3000
    """Range on which chain envelopes are checked against exact tables."""

    TOLERANCE: Final[float] = 0.02
    """Relative tolerance on reproduced chain constants."""

    S_CONSTANT: Final[str] = "0.9"
    """Envelope constant for |s(n)|."""

    B_CONSTANT: Final[str] = "0.08"
    """Envelope constant for b(n)."""


class EnvelopeDefaults:
    """Constants of the coefficient envelopes and the final bound."""

    # === Sector envelopes ===
    SECTORS: Final[Mapping[int, tuple[str, str, str]]] = {
        1: ("0.242", "6.747", "1.73"),
        2: ("108.842", "6.269", "0.865"),
        3: ("1.551", "65.766", "0.865"),
    }
    """Printed (c1, c2, c3) triples of the three sector envelopes."""

    TOLERANCE: Final[float] = 0.02
    """Relative tolerance on derived envelope constants."""

    # === Integral bounds ===
    I1_CORRECTION: Final[str] = "4.5763"
    I1_BASE: Final[str] = "45.523"
    I1_EXPONENT: Final[str] = "10.86992"
    I2_CONSTANT: Final[str] = "2363259"
    I3_CONSTANT: Final[str] = "480"
    LINE_SUM: Final[str] = "29.77087"
    """Printed value of sum exp((y - sqrt(3)/2) pi n) / sqrt(n)."""

    # === Inner product display ===
    INNER_TERM2: Final[tuple[str, str]] = ("2.908", "17.094")
    INNER_TERM3: Final[tuple[str, str]] = ("13.817", "1.828")
    INNER_TERM4: Final[tuple[str, str]] = ("5.03", "8.11")

    # === Final assembly ===
    PRE_C_LEADING: Final[str] = "44"
    PRE_C_EXPONENTS: Final[tuple[str, str, str]] = ("4.601", "10.057", "5.663")
    C_FACTOR: Final[Fraction] = Fraction(7, 3)
    LEADING_CONSTANT: Final[int] = 103
    B_EXPONENTS: Final[tuple[str, str, str]] = ("5.449", "10.905", "6.511")
    B_BASES: Final[tuple[str, str, str]] = ("6.274", "4.793", "10.096")
    B_OF_K_TOLERANCE: Final[float] = 0.02
    """Relative tolerance between the printed and the recomputed B(k)."""
    THEOREM_DECAY: Final[str] = "7.288"
    """Printed exponent of exp(-7.288 m); slightly below 2 pi v."""

    NEWFORM_FLOOR: Final[int] = 86
    LEVEL_ONE_FLOOR: Final[int] = 64
    OLDFORM_FLOOR: Final[int] = 96

    # === Level one comparison ===
    LEVEL_ONE_LEADING: Final[int] = 11
    LEVEL_ONE_EXPONENT: Final[str] = "18.72"
    LEVEL_ONE_BASE: Final[str] = "41.41"

    J_ENVELOPE: Final[str] = "0.055"
    """Constant in |eps_n| <= 0.055 / n for the j-function coefficients."""


class LfuncDefaults:
    """Constants of the symmetric-square L-function estimates."""

    I_LOWER: Final[str] = "1.39873"
    I2_UPPER: Final[str] = "0.18047"
    A_EXPONENT: Final[Fraction] = Fraction(16, 5)
    RESIDUE_POINTS: Final[tuple[int, ...]] = (2, 48, 1000)
    PRIMES: Final[tuple[int, ...]] = (2, 3, 5, 7)
    QUADRATURE_TOLERANCE: Final[float] = 1e-6
