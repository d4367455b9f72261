"""
Exact rational helpers.

Decision thresholds such as (1+ε)·t_r(n) are compared as Fractions so that
boundary cases never depend on floating-point rounding.
"""

from fractions import Fraction
from numbers import Rational
from typing import Union

from turannical.config.constants import FRACTION_MAX_DENOMINATOR
from turannical.errors import ParameterError

Number = Union[int, float, str, Fraction]


def as_fraction(value: Number) -> Fraction:
    """
    Convert a user-supplied number to an exact rational.

    Floats are snapped to the nearest fraction with a bounded denominator,
    so 0.1 becomes 1/10 and 1/3 (as a float) becomes 1/3.

    Args:
        value: int, float, decimal string or Fraction

    Returns:
        Fraction equal to the intended value

    Raises:
        ParameterError: If the value is not a finite number
    """
    if isinstance(value, bool):
        raise ParameterError(f"expected a number, got {value!r}")
    if isinstance(value, Rational):
        return Fraction(value)
    if isinstance(value, float):
        if value != value or value in (float("inf"), float("-inf")):
            raise ParameterError(f"expected a finite number, got {value!r}")
        return Fraction(value).limit_denominator(FRACTION_MAX_DENOMINATOR)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise ParameterError(f"cannot read {value!r} as a number: {e}")
    raise ParameterError(f"expected a number, got {type(value).__name__}")


def floor_fraction(value: Fraction) -> int:
    """Largest integer not exceeding the rational."""
    return value.numerator // value.denominator


def fraction_text(value: Fraction) -> str:
    """'num/den' (or just 'num' for integers)."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
