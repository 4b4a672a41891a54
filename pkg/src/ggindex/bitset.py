"""Small helpers for vertex sets stored as Python int bitmasks."""

from __future__ import annotations

from typing import Iterable, Iterator


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def reach(adj: tuple[int, ...] | list[int], start: int) -> int:
    """Mask of all vertices reachable from start (bitset BFS)."""
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen


def components(adj: tuple[int, ...] | list[int], n: int) -> list[int]:
    """Connected components as vertex masks, ordered by smallest member."""
    out = []
    left = (1 << n) - 1
    while left:
        start = (left & -left).bit_length() - 1
        comp = reach(adj, start)
        out.append(comp)
        left &= ~comp
    return out
