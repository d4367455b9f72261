"""
Exception hierarchy for Turannical.

Parameter problems subclass ValueError so callers can keep catching the
built-in exception.
"""

from typing import Optional


class TurannicalError(Exception):
    """Base class for all Turannical errors."""


class ParameterError(TurannicalError, ValueError):
    """An argument is out of range or inconsistent with another argument."""


class InputFormatError(ParameterError):
    """A JSON/CSV document could not be parsed or failed schema validation."""

    def __init__(self, message: str, offset: Optional[int] = None, field_path: str = "$"):
        self.offset = offset
        self.field_path = field_path
        location = f"at offset {offset}" if offset is not None else "at unknown offset"
        super().__init__(f"{message} ({location}, field {field_path})")


class UndefinedRatioError(ParameterError):
    """A ratio was requested over an empty denominator."""


class CountOverflowError(TurannicalError, OverflowError):
    """A count does not fit in the fixed-width integers it is stored in."""


class ConstructionError(TurannicalError, RuntimeError):
    """An extremal construction failed its own verification."""
