"""Immutable connected simple graphs on vertices 0..n-1.

The constructor validates and normalizes its input once; after that a Graph
is hashable, comparable and safe to share. Adjacency is kept both as sorted
neighbor tuples and as per-vertex bitmasks (arbitrary-size Python ints, so
nothing breaks past 64 vertices, the enumerator just never goes there).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional

from . import canon as _canon
from . import formats as _formats
from .bitset import iter_bits

DistanceMatrix = tuple[tuple[int, ...], ...]
CanonicalForm = bytes


class GraphError(ValueError):
    """Invalid graph construction input."""


@dataclass(frozen=True)
class Graph:
    """Connected simple undirected graph.

    Edges are stored deduplicated and sorted with the smaller endpoint
    first, so two Graphs over the same labeled edge set compare and hash
    equal regardless of how the edges were supplied.
    """

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 1:
            raise GraphError(f"vertex count must be a positive integer, got {self.n!r}")
        seen = set()
        normalized = []
        for e in self.edges:
            try:
                u, v = e
            except (TypeError, ValueError):
                raise GraphError(f"edge {e!r} is not a vertex pair") from None
            if not (isinstance(u, int) and isinstance(v, int)):
                raise GraphError(f"edge {e!r} has non-integer endpoints")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge {e!r} out of range for n={self.n}")
            if u > v:
                u, v = v, u
            if (u, v) not in seen:
                seen.add((u, v))
                normalized.append((u, v))
        normalized.sort()
        object.__setattr__(self, "edges", tuple(normalized))
        # connectivity (bitset BFS from vertex 0)
        adj = self.adjacency_bits
        seen_mask = 1
        frontier = 1
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= adj[v]
            frontier = nxt & ~seen_mask
            seen_mask |= frontier
        if seen_mask != (1 << self.n) - 1:
            missing = (~seen_mask & ((1 << self.n) - 1) & -(~seen_mask)).bit_length() - 1
            raise GraphError(
                f"graph is disconnected: vertex {missing} is unreachable from vertex 0"
            )

    @cached_property
    def adjacency_bits(self) -> tuple[int, ...]:
        bits = [0] * self.n
        for u, v in self.edges:
            bits[u] |= 1 << v
            bits[v] |= 1 << u
        return tuple(bits)

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            out[u].append(v)
            out[v].append(u)
        return tuple(tuple(sorted(x)) for x in out)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def cyclomatic_number(self) -> int:
        """Independent cycles: m - n + 1 (the graph is connected)."""
        return self.m - self.n + 1

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(b.bit_count() for b in self.adjacency_bits)

    def degree(self, v: int) -> int:
        return self.degrees[v]

    @property
    def max_degree(self) -> int:
        return max(self.degrees)

    @property
    def is_tree(self) -> bool:
        return self.m == self.n - 1


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Validating constructor; rejects self-loops, bad labels, disconnected input."""
    return Graph(n, tuple(tuple(e) for e in edges))


def relabel(g: Graph, perm) -> Graph:
    """Image of g under the vertex permutation perm (perm[old] = new)."""
    return Graph(g.n, tuple((perm[u], perm[v]) for u, v in g.edges))


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """BFS from every vertex; entry [u][v] is the hop distance."""
    adj = g.adjacency_bits
    n = g.n
    full = (1 << n) - 1
    rows = []
    for s in range(n):
        dist = [0] * n
        seen = 1 << s
        frontier = seen
        d = 0
        while seen != full:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= adj[v]
            frontier = nxt & ~seen
            d += 1
            for v in iter_bits(frontier):
                dist[v] = d
            seen |= frontier
        rows.append(tuple(dist))
    return tuple(rows)


def two_coloring(g: Graph) -> Optional[tuple[int, ...]]:
    """A proper 2-coloring (vertex 0 colored 0), or None if none exists."""
    color = [-1] * g.n
    color[0] = 0
    queue = [0]
    adj = g.neighbors
    while queue:
        u = queue.pop()
        for w in adj[u]:
            if color[w] < 0:
                color[w] = color[u] ^ 1
                queue.append(w)
            elif color[w] == color[u]:
                return None
    return tuple(color)


def is_bipartite(g: Graph) -> bool:
    return two_coloring(g) is not None


def canonical_form(g: Graph) -> CanonicalForm:
    """Isomorphism-invariant total-order key (graph6 bytes of a canonical relabeling)."""
    return _canon.canon_key(g.n, g.adjacency_bits)


def to_graph6(g: Graph) -> str:
    return _formats.encode_graph6(g.n, g.adjacency_bits)


def from_graph6(line: str) -> Graph:
    n, edges = _formats.decode_graph6(line)
    return build_graph(n, edges)
