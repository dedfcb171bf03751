"""Sampling-rate parsing and validation utilities."""

from fractions import Fraction
from math import gcd, lcm

# Largest intermediate grid (in Hz) tolerated by the interpolate-then-decimate path
MAX_LCM_RATE = 100_000


def parse_rate_input(rate: str | int | float | Fraction) -> Fraction:
    """Parse a sampling rate into an exact rational number of hertz.

    Supports:
    - Integers: 100, "700"
    - Ratios: "31/2"
    - Decimals: 15.5, "15.5" (converted through their decimal string, so 15.5
      becomes exactly 31/2 rather than the binary float expansion)

    Args:
        rate: Rate to parse

    Returns:
        Positive rational rate

    Raises:
        ValueError: If the rate cannot be parsed or is not positive
    """
    if isinstance(rate, Fraction):
        value = rate
    elif isinstance(rate, bool):
        raise ValueError(f"Unable to parse sampling rate {rate!r}")
    elif isinstance(rate, int):
        value = Fraction(rate)
    elif isinstance(rate, float):
        value = Fraction(repr(rate))
    else:
        text = rate.strip()
        try:
            value = Fraction(text)
        except (ValueError, ZeroDivisionError):
            raise ValueError(
                f"Unable to parse sampling rate '{rate}'. "
                "Supported formats include: 100, 15.5, 31/2"
            ) from None

    if value <= 0:
        raise ValueError(f"Sampling rate must be positive, got {value}")
    return value


def format_rate(rate: Fraction) -> str:
    """Render a rate the way it is written in manifests ("100" or "31/2")."""
    if rate.denominator == 1:
        return str(rate.numerator)
    return f"{rate.numerator}/{rate.denominator}"


def common_grid_rate(source: Fraction, target: Fraction) -> Fraction:
    """Return the smallest rate that both ``source`` and ``target`` divide.

    For 31/2 Hz and 16 Hz this is 496 Hz. The result is the least common
    multiple of the two rationals: lcm of numerators over gcd of denominators.
    """
    return Fraction(
        lcm(source.numerator, target.numerator),
        gcd(source.denominator, target.denominator),
    )


def samples_for(seconds: float | Fraction, fs: Fraction) -> int:
    """Convert a duration to a sample count, requiring an exact integer.

    Raises:
        ValueError: If ``seconds * fs`` is not a positive integer
    """
    if isinstance(seconds, float):
        seconds = Fraction(repr(seconds))
    count = Fraction(seconds) * fs
    if count.denominator != 1 or count <= 0:
        raise ValueError(
            f"{seconds} s at {format_rate(fs)} Hz is not a positive whole "
            "number of samples"
        )
    return count.numerator
