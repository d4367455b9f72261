"""
Combinatorial helpers for Turannical: binomials, 64-bit count guards and
unranking of r-subsets.
"""

import math
from typing import Tuple

from turannical.config.constants import INT64_MAX
from turannical.errors import CountOverflowError, ParameterError


def binomial(n: int, k: int) -> int:
    """C(n, k), zero outside 0 <= k <= n."""
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


def checked_int64(value: int, what: str) -> int:
    """
    Ensure a count fits a signed 64-bit integer.

    Args:
        value: Count to check
        what: Description used in the error message

    Returns:
        The value, unchanged

    Raises:
        CountOverflowError: If the value does not fit in 64 bits
    """
    if value > INT64_MAX or value < -INT64_MAX - 1:
        raise CountOverflowError(f"{what} = {value} does not fit in a 64-bit count")
    return value


def unrank_combination(index: int, n: int, r: int) -> Tuple[int, ...]:
    """
    The r-subset of range(n) at a given lexicographic rank.

    Args:
        index: Rank in [0, C(n, r))
        n: Ground set size
        r: Subset size

    Returns:
        Sorted tuple of r vertices

    Raises:
        ParameterError: If the rank is out of range
    """
    total = binomial(n, r)
    if not 0 <= index < total:
        raise ParameterError(f"rank {index} outside [0, C({n},{r})={total})")
    result = []
    start = 0
    remaining = r
    while remaining:
        for candidate in range(start, n):
            block = binomial(n - candidate - 1, remaining - 1)
            if index < block:
                result.append(candidate)
                start = candidate + 1
                remaining -= 1
                break
            index -= block
    return tuple(result)
