"""Coefficient exchange in the `n,numerator/denominator` CSV format."""

from fractions import Fraction
from pathlib import Path

import polars as pl

from ..errors import CoefficientParseError
from .qseries import QSeries


def format_coefficient(c: Fraction) -> str:
    """Render an exact rational, omitting the denominator when it is 1."""
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def parse_coefficient(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as e:
        raise CoefficientParseError(f"Cannot parse coefficient '{text}'.") from e


def series_to_frame(series: QSeries, stop: int | None = None) -> pl.DataFrame:
    """Tabulate exponents and formatted coefficients from the valuation upward."""
    stop = series.trunc if stop is None else min(stop, series.trunc)
    rows = [(n, format_coefficient(c)) for n, c in series if n < stop]
    return pl.DataFrame(
        rows,
        schema={"n": pl.Int64, "coefficient": pl.Utf8},
        orient="row",
    )


def write_series_csv(
    series: QSeries, path: str | Path, stop: int | None = None
) -> pl.DataFrame:
    """Write a series as headerless `n,num/den` lines and return the table."""
    frame = series_to_frame(series, stop)
    frame.write_csv(path, include_header=False)
    return frame


def read_series_csv(path: str | Path) -> QSeries:
    """Read a series written by `write_series_csv`.

    Exponents must be consecutive; the series is known just past the last row.
    """
    frame = _read_raw(path)
    if frame.width != 2:
        raise CoefficientParseError(
            f"Expected two columns 'n,coefficient' in {path}, got {frame.width}."
        )
    try:
        exponents = [int(v) for v in frame.get_column(frame.columns[0])]
    except (TypeError, ValueError) as e:
        raise CoefficientParseError(f"Non-integer exponent in {path}.") from e
    if exponents != list(range(exponents[0], exponents[0] + len(exponents))):
        raise CoefficientParseError(f"Exponents in {path} are not consecutive.")
    coeffs = [parse_coefficient(v) for v in frame.get_column(frame.columns[1])]
    return QSeries.from_coefficients(coeffs, exponents[0])


def read_coefficient_vector(path: str | Path) -> list[Fraction]:
    """Read a coefficient vector a(1), a(2), ...

    Accepts one value per line, or `m,value` lines in any order whose
    indices are exactly 1, 2, ..., N.

    Raises:
        CoefficientParseError: If the file is unreadable, a value does not
            parse, or the indices have gaps or repeats.
    """
    frame = _read_raw(path)
    if frame.width == 1:
        return [parse_coefficient(v) for v in frame.get_column(frame.columns[0])]
    if frame.width == 2:
        try:
            frame = frame.with_columns(
                pl.col(frame.columns[0]).str.strip_chars().cast(pl.Int64)
            ).sort(frame.columns[0])
        except pl.exceptions.PolarsError as e:
            raise CoefficientParseError(f"Non-integer index in {path}.") from e
        indices = frame.get_column(frame.columns[0]).to_list()
        if indices != list(range(1, len(indices) + 1)):
            raise CoefficientParseError(
                f"Indices in {path} must be 1..{len(indices)} without gaps or repeats."
            )
        return [parse_coefficient(v) for v in frame.get_column(frame.columns[1])]
    raise CoefficientParseError(
        f"Expected one or two columns in {path}, got {frame.width}."
    )


def _read_raw(path: str | Path) -> pl.DataFrame:
    try:
        frame = pl.read_csv(path, has_header=False, infer_schema_length=0)
    except (pl.exceptions.PolarsError, OSError) as e:
        raise CoefficientParseError(f"Cannot read coefficients from {path}.") from e
    frame = frame.drop_nulls()
    if frame.height == 0:
        raise CoefficientParseError(f"No coefficients found in {path}.")
    return frame
