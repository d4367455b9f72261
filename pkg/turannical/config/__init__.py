"""Configuration module for Turannical."""

from .constants import (
    DEFAULT_BUDGET,
    EXACT_PARTITION_MAX_N,
    CONFIDENCE_LEVEL,
    CSV_COLUMNS,
    PROPERTY_KINDS,
    DECISION_MODES,
)
from .settings import PropertySpec, GridSpec, ScanConfig

__all__ = [
    "DEFAULT_BUDGET",
    "EXACT_PARTITION_MAX_N",
    "CONFIDENCE_LEVEL",
    "CSV_COLUMNS",
    "PROPERTY_KINDS",
    "DECISION_MODES",
    "PropertySpec",
    "GridSpec",
    "ScanConfig",
]
