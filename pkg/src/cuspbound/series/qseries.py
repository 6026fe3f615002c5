"""Truncated Laurent series in q with exact rational coefficients."""

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from ..errors import NonInvertibleSeriesError, TruncationError
from .convolution import convolve

Coefficient = int | Fraction


@dataclass(frozen=True)
class QSeries:
    """A series sum c_n q^n known exactly for valuation <= n < trunc.

    Coefficients at exponents at or beyond `trunc` are unknown, never zero.
    """

    valuation: int
    coeffs: tuple[Fraction, ...]
    trunc: int

    def __post_init__(self):
        if len(self.coeffs) != self.trunc - self.valuation:
            raise ValueError(
                f"Expected {self.trunc - self.valuation} coefficients for "
                f"exponents {self.valuation}..{self.trunc - 1}, "
                f"got {len(self.coeffs)}."
            )
        if not all(type(c) is Fraction for c in self.coeffs):
            object.__setattr__(
                self, "coeffs", tuple(Fraction(c) for c in self.coeffs)
            )

    # === Construction ===
    @classmethod
    def from_coefficients(
        cls,
        coeffs: Iterable[Coefficient],
        valuation: int = 0,
        trunc: int | None = None,
    ) -> "QSeries":
        """Build a series from coefficients starting at `valuation`.

        When `trunc` exceeds the supplied coefficients, the gap is exact zeros.
        """
        values = [Fraction(c) for c in coeffs]
        if trunc is None:
            trunc = valuation + len(values)
        length = trunc - valuation
        if length < 0:
            raise ValueError("trunc must not be below valuation.")
        values = values[:length] + [Fraction(0)] * (length - len(values))
        return cls(valuation, tuple(values), trunc)

    @classmethod
    def zero(cls, trunc: int, valuation: int = 0) -> "QSeries":
        return cls.from_coefficients([], valuation, trunc)

    @classmethod
    def one(cls, trunc: int) -> "QSeries":
        return cls.monomial(0, trunc)

    @classmethod
    def monomial(cls, exponent: int, trunc: int, coefficient: Coefficient = 1):
        """Return coefficient * q^exponent known up to `trunc`."""
        if trunc <= exponent:
            return cls.zero(trunc, valuation=trunc)
        return cls.from_coefficients([coefficient], exponent, trunc)

    # === Access ===
    def __getitem__(self, n: int) -> Fraction:
        if n >= self.trunc:
            raise TruncationError(
                f"Coefficient of q^{n} requested, series known below q^{self.trunc}."
            )
        if n < self.valuation:
            return Fraction(0)
        return self.coeffs[n - self.valuation]

    def __iter__(self) -> Iterator[tuple[int, Fraction]]:
        return iter(zip(self.exponents(), self.coeffs))

    def __len__(self) -> int:
        return len(self.coeffs)

    def exponents(self) -> range:
        return range(self.valuation, self.trunc)

    def window(self, start: int, stop: int) -> list[Fraction]:
        """Coefficients for exponents start..stop-1."""
        return [self[n] for n in range(start, stop)]

    def leading_exponent(self) -> int | None:
        """Lowest exponent with a nonzero coefficient, None for the zero series."""
        for n, c in self:
            if c != 0:
                return n
        return None

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def denominators(self) -> set[int]:
        return {c.denominator for c in self.coeffs if c.denominator != 1}

    def agrees_with(self, other: "QSeries") -> bool:
        """True when both series coincide on their common known window."""
        top = min(self.trunc, other.trunc)
        bottom = min(self.valuation, other.valuation)
        return all(self[n] == other[n] for n in range(bottom, top))

    def normalized(self) -> "QSeries":
        """Drop leading zero coefficients so `valuation` is the true leading term."""
        lead = self.leading_exponent()
        if lead is None or lead == self.valuation:
            return self
        return QSeries(lead, self.coeffs[lead - self.valuation :], self.trunc)

    # === Elementary transforms ===
    def truncate(self, trunc: int) -> "QSeries":
        if trunc >= self.trunc:
            return self
        if trunc <= self.valuation:
            return QSeries(trunc, (), trunc)
        return QSeries(self.valuation, self.coeffs[: trunc - self.valuation], trunc)

    def shift(self, k: int) -> "QSeries":
        """Multiply by q^k."""
        return QSeries(self.valuation + k, self.coeffs, self.trunc + k)

    def scale(self, c: Coefficient) -> "QSeries":
        c = Fraction(c)
        return QSeries(self.valuation, tuple(c * x for x in self.coeffs), self.trunc)

    def twist_sign(self) -> "QSeries":
        """Replace q by -q, i.e. multiply the coefficient of q^n by (-1)^n."""
        return QSeries(
            self.valuation,
            tuple(-c if n % 2 else c for n, c in self),
            self.trunc,
        )

    # === Operators ===
    def __neg__(self) -> "QSeries":
        return self.scale(-1)

    def __add__(self, other: object) -> "QSeries":
        if isinstance(other, QSeries):
            return qs_add(self, other)
        if isinstance(other, int | Rational):
            return qs_add(self, QSeries.monomial(0, self.trunc, other))
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other: object) -> "QSeries":
        if isinstance(other, QSeries):
            return qs_add(self, -other)
        if isinstance(other, int | Rational):
            return qs_add(self, QSeries.monomial(0, self.trunc, -Fraction(other)))
        return NotImplemented

    def __rsub__(self, other: object) -> "QSeries":
        return (-self).__add__(other)

    def __mul__(self, other: object) -> "QSeries":
        if isinstance(other, QSeries):
            return qs_mul(self, other)
        if isinstance(other, int | Rational):
            return self.scale(Fraction(other))
        return NotImplemented

    def __rmul__(self, other: object) -> "QSeries":
        return self.__mul__(other)

    def __truediv__(self, other: object) -> "QSeries":
        if isinstance(other, QSeries):
            return qs_mul(self, qs_invert(other))
        if isinstance(other, int | Rational):
            return self.scale(1 / Fraction(other))
        return NotImplemented

    def __pow__(self, e: int) -> "QSeries":
        return qs_pow(self, e)

    def __repr__(self) -> str:
        shown = ", ".join(f"{n}: {c}" for n, c in list(self)[:6])
        more = ", ..." if len(self) > 6 else ""
        return f"QSeries({{{shown}{more}}}, O(q^{self.trunc}))"


def qs_add(a: QSeries, b: QSeries) -> QSeries:
    """Coefficientwise sum; the result is known up to the smaller truncation."""
    trunc = min(a.trunc, b.trunc)
    valuation = min(a.valuation, b.valuation, trunc)
    coeffs = tuple(a[n] + b[n] for n in range(valuation, trunc))
    return QSeries(valuation, coeffs, trunc)


def qs_mul(a: QSeries, b: QSeries, strategy: str | None = None) -> QSeries:
    """Cauchy product.

    The result is known for exponents below min(a.trunc + b.valuation,
    b.trunc + a.valuation).
    """
    valuation = a.valuation + b.valuation
    length = min(len(a), len(b))
    coeffs = convolve(a.coeffs, b.coeffs, length, strategy)
    return QSeries(valuation, tuple(coeffs), valuation + length)


def qs_invert(a: QSeries, strategy: str | None = None) -> QSeries:
    """Multiplicative inverse by Newton iteration w <- w (2 - u w).

    Raises:
        NonInvertibleSeriesError: If every computed coefficient is zero.
    """
    lead = a.leading_exponent()
    if lead is None:
        raise NonInvertibleSeriesError()
    u = list(a.coeffs[lead - a.valuation :])
    n = len(u)

    w = [1 / u[0]]
    prec = 1
    while prec < n:
        prec = min(2 * prec, n)
        e = [-x for x in convolve(u[:prec], w, prec, strategy)]
        e[0] += 2
        w = convolve(w, e, prec, strategy)
    return QSeries(-lead, tuple(w), -lead + n)


def qs_pow(a: QSeries, e: int, strategy: str | None = None) -> QSeries:
    """Repeated squaring; pow(a, 0) is 1 known to the same relative order as a."""
    if e < 0:
        raise ValueError(f"Exponent must be nonnegative, got {e}.")
    result = QSeries.one(len(a))
    base = a
    while e:
        if e & 1:
            result = qs_mul(result, base, strategy)
        e >>= 1
        if e:
            base = qs_mul(base, base, strategy)
    return result


def qs_apply_Vd(a: QSeries, d: int) -> QSeries:
    """The operator f(z) -> f(dz), mapping q^n to q^(dn)."""
    if d < 1:
        raise ValueError(f"d must be a positive integer, got {d}.")
    if d == 1:
        return a
    coeffs = [Fraction(0)] * (d * len(a))
    coeffs[::d] = a.coeffs
    return QSeries(d * a.valuation, tuple(coeffs), d * a.trunc)


def qs_theta(a: QSeries) -> QSeries:
    """q d/dq: the coefficient of q^n is multiplied by n."""
    return QSeries(a.valuation, tuple(n * c for n, c in a), a.trunc)


def qs_sum(terms: Sequence[QSeries]) -> QSeries:
    """Sum of a nonempty sequence of series."""
    total = terms[0]
    for t in terms[1:]:
        total = qs_add(total, t)
    return total
