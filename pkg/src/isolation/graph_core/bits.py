"""Integer bitsets: bit v of an int is vertex v."""

from collections.abc import Iterable, Iterator

Bits = int


def iter_bits(x: Bits) -> Iterator[int]:
    """Yields the vertices of x in increasing order."""
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def to_bits(vertices: Iterable[int]) -> Bits:
    x = 0
    for v in vertices:
        x |= 1 << v
    return x


def lowest(x: Bits) -> int:
    """Index of the smallest vertex of a nonempty set."""
    return (x & -x).bit_length() - 1


def full_mask(n: int) -> Bits:
    return (1 << n) - 1


def next_combination(x: Bits) -> Bits:
    """Next integer with the same popcount (Gosper's hack)."""
    low = x & -x
    ripple = x + low
    return ripple | (((x ^ ripple) >> 2) // low)


def combinations_of(n: int, k: int) -> Iterator[Bits]:
    """All k-subsets of range(n) as integers, in increasing numeric order."""
    if k == 0:
        yield 0
        return
    if k > n:
        return
    x = full_mask(k)
    limit = 1 << n
    while x < limit:
        yield x
        x = next_combination(x)
