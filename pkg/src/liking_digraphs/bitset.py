"""Vertex sets as plain int bitmasks.

A subset of {0..n-1} is the integer with bit i set for each member i, so
set algebra is &, |, ^, ~ and cardinality is int.bit_count().  Hot loops
elsewhere inline these idioms; the helpers here cover construction,
iteration, and fixed-size subset enumeration.
"""

from collections.abc import Iterable, Iterator


def mask_of(vertices: Iterable[int]) -> int:
    """Bitmask with exactly the given vertex indices set."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits(mask: int) -> Iterator[int]:
    """Indices of set bits, ascending."""
    while mask:
        lsb = mask & -mask
        yield lsb.bit_length() - 1
        mask ^= lsb


def subsets_fixed_size(n: int, k: int) -> Iterator[int]:
    """All k-subsets of {0..n-1} as masks, in ascending mask order.

    Ascending mask order is colex order on subsets; witness selection in
    the liking checker depends on that, so do not reorder.
    """
    if k < 0 or k > n:
        return
    if k == 0:
        yield 0
        return
    v = (1 << k) - 1
    limit = 1 << n
    while v < limit:
        yield v
        # Gosper's hack: next integer with the same popcount.
        c = v & -v
        r = v + c
        v = (((r ^ v) >> 2) // c) | r
