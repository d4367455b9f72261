"""
Bitset utilities for Turannical.

Vertex sets and adjacency rows are Python ints used as bitsets: vertex v is
present when bit v is set.
"""

from typing import Iterable, Iterator, Tuple


def mask_of(indices: Iterable[int]) -> int:
    """
    Build a bitset from indices.

    Args:
        indices: Iterable of non-negative indices

    Returns:
        Bitset with those bits set
    """
    mask = 0
    for index in indices:
        mask |= 1 << index
    return mask


def iterate_bits(mask: int) -> Iterator[int]:
    """
    Iterate over the set bits of a bitset, lowest index first.

    Args:
        mask: Bitset

    Yields:
        Indices of set bits in increasing order
    """
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def members(mask: int) -> Tuple[int, ...]:
    """Sorted tuple of the indices in a bitset."""
    return tuple(iterate_bits(mask))


def popcount(mask: int) -> int:
    """Number of set bits."""
    return mask.bit_count()


def above(index: int) -> int:
    """Bitset of all indices strictly greater than `index` (unbounded)."""
    return -1 << (index + 1)


def full_mask(size: int) -> int:
    """Bitset {0, ..., size-1}."""
    return (1 << size) - 1
