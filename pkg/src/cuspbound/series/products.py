"""Infinite products expanded by combinatorial recurrences.

These give coefficient oracles independent of series division.
"""

from .qseries import QSeries


def euler_product(T: int) -> QSeries:
    """prod_{n>=1} (1 - q^n) by the pentagonal number theorem."""
    coeffs = [0] * T
    k = 0
    while True:
        k += 1
        sign = -1 if k % 2 else 1
        first = k * (3 * k - 1) // 2
        if first >= T:
            break
        coeffs[first] += sign
        second = k * (3 * k + 1) // 2
        if second < T:
            coeffs[second] += sign
    if T > 0:
        coeffs[0] = 1
    return QSeries.from_coefficients(coeffs, 0, T)


def distinct_parts_product(T: int) -> QSeries:
    """prod_{n>=1} (1 + q^n): partitions into distinct parts."""
    coeffs = [0] * T
    if T > 0:
        coeffs[0] = 1
    for part in range(1, T):
        for total in range(T - 1, part - 1, -1):
            coeffs[total] += coeffs[total - part]
    return QSeries.from_coefficients(coeffs, 0, T)


def distinct_odd_parts_product(T: int) -> QSeries:
    """prod_{n>=1} (1 - q^(2n-1)): signed partitions into distinct odd parts."""
    coeffs = [0] * T
    if T > 0:
        coeffs[0] = 1
    for part in range(1, T, 2):
        for total in range(T - 1, part - 1, -1):
            coeffs[total] -= coeffs[total - part]
    return QSeries.from_coefficients(coeffs, 0, T)
