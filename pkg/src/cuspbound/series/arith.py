"""Elementary arithmetic functions: Bernoulli numbers and divisor sums."""

from fractions import Fraction
from functools import lru_cache
from math import comb, isqrt


@lru_cache(maxsize=None)
def _bernoulli_table(k: int) -> tuple[Fraction, ...]:
    table = [Fraction(1)]
    for m in range(1, k + 1):
        acc = sum(comb(m + 1, j) * table[j] for j in range(m))
        table.append(-Fraction(acc) / (m + 1))
    return tuple(table)


def bernoulli(k: int) -> Fraction:
    """Bernoulli number B_k with the convention B_1 = -1/2.

    Uses the recurrence sum_{j=0}^{m} C(m+1, j) B_j = 0.
    """
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}.")
    if k > 1 and k % 2 == 1:
        return Fraction(0)
    return _bernoulli_table(k)[k]


def divisors(n: int) -> list[int]:
    """Sorted positive divisors of n."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}.")
    small = [d for d in range(1, isqrt(n) + 1) if n % d == 0]
    large = [n // d for d in reversed(small) if d * d != n]
    return small + large


def sigma(n: int, r: int = 1) -> int:
    """Sum of the r-th powers of the divisors of n."""
    return sum(d**r for d in divisors(n))


def divisor_count(n: int) -> int:
    """Number of divisors d(n); equal to sigma(n, 0)."""
    return len(divisors(n))


def sigma_table(N: int, r: int, odd_only: bool = False) -> list[int]:
    """sigma_r(n) for 0 <= n < N by sieving; entry 0 is 0.

    With `odd_only` only odd divisors contribute.
    """
    table = [0] * N
    step = 2 if odd_only else 1
    for d in range(1, N, step):
        p = d**r
        for m in range(d, N, d):
            table[m] += p
    return table


def divisor_count_table(N: int) -> list[int]:
    return sigma_table(N, 0)
