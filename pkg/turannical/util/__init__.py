"""Utility module for Turannical."""

from . import bitset, combinatorics, numeric, stats, rng, digest

__all__ = ["bitset", "combinatorics", "numeric", "stats", "rng", "digest"]
