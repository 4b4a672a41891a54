"""Isomorph-free exhaustive generation of small connected graphs.

The generator grows graphs one vertex at a time (canonical augmentation).
Level k holds one representative per isomorphism class of k-vertex graphs
that can still extend to a valid final graph; intermediate graphs may be
disconnected, connectivity is enforced on the last level by requiring the
new vertex to touch every component. A child survives only if the vertex
just added sits in the same automorphism orbit as the child's canonical-last
vertex, so every class is produced from exactly one parent class and exactly
once overall. Constraint classes are pruned hereditarily:

  * bipartite: the new neighborhood must hit only one color class per
    component; admissible neighborhoods are generated directly from the
    parent's two-coloring instead of filtered afterwards;
  * bounded degree: saturated vertices are excluded, the neighborhood size
    is capped;
  * forests (trees at the end): at most one neighbor per component;
  * fixed cyclomatic number r: children whose cycle count already exceeds r
    are dropped, and the last level keeps exact matches only.

Emission is sorted by canonical form, so output order is a function of the
constraint set alone; worker count changes wall time, never bytes.

Two independent oracles cross-check the generator in the test suite.
brute_force_classes walks every labeled graph on n <= 7 vertices as an
edge-set bitmask and partitions them into isomorphism classes by flood fill
under adjacent-transposition relabelings (which generate the full symmetric
group), touching no canonical-labeling code at all. prufer_trees decodes all
n^(n-2) Prufer sequences (n <= 8) and deduplicates the labeled trees with an
AHU-style certificate.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from heapq import heapify, heappop, heappush
from itertools import combinations, product
from typing import Iterator, Optional

from . import canon as _canon
from .bitset import components, iter_bits, mask_of, reach
from .graphs import Graph, build_graph, canonical_form, from_graph6

ENV_MAX_N = "GGINDEX_MAX_N"


class EnumerationBoundError(ValueError):
    """Requested order exceeds the configured feasibility bound."""

    def __init__(self, n: int, limit: int, what: str):
        super().__init__(
            f"enumerating {what} at n={n} exceeds the configured bound n <= {limit}; "
            f"pass --max-n (or set {ENV_MAX_N}) to raise it if you accept the runtime"
        )
        self.n = n
        self.limit = limit


@dataclass(frozen=True)
class Constraints:
    """Isomorphism-invariant restrictions on the generated class."""

    n: int
    bipartite_only: bool = False
    max_degree: Optional[int] = None
    trees_only: bool = False
    cyclomatic: Optional[int] = None

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("Constraints.n must be at least 1")
        if self.max_degree is not None and self.max_degree < 1:
            raise ValueError("max_degree must be at least 1")
        if self.cyclomatic is not None and self.cyclomatic < 0:
            raise ValueError("cyclomatic number cannot be negative")
        if self.trees_only and self.cyclomatic not in (None, 0):
            raise ValueError("trees_only contradicts a nonzero cyclomatic number")

    @property
    def forest_growth(self) -> bool:
        return self.trees_only or self.cyclomatic == 0

    def describe(self) -> str:
        parts = []
        if self.trees_only:
            parts.append("trees")
        elif self.bipartite_only:
            parts.append("connected bipartite graphs")
        else:
            parts.append("connected graphs")
        if self.max_degree is not None:
            parts.append(f"with max degree {self.max_degree}")
        if self.cyclomatic is not None and not self.trees_only:
            parts.append(f"with cyclomatic number {self.cyclomatic}")
        return " ".join(parts)


@dataclass(frozen=True)
class FeasibilityBounds:
    """Order caps guarding against accidentally huge runs."""

    general: int = 10
    bipartite: int = 11
    trees: int = 14

    @classmethod
    def from_env(cls) -> "FeasibilityBounds":
        raw = os.environ.get(ENV_MAX_N)
        if raw is None:
            return cls()
        try:
            v = int(raw)
        except ValueError:
            raise ValueError(f"{ENV_MAX_N} must be an integer, got {raw!r}") from None
        return cls(general=v, bipartite=v, trees=v)

    def override(self, max_n: Optional[int]) -> "FeasibilityBounds":
        if max_n is None:
            return self
        return FeasibilityBounds(general=max_n, bipartite=max_n, trees=max_n)


# ----------------------------------------------------------- augmentation ----

def _bipartition_sides(masks, comps) -> list[tuple[int, int]]:
    """Per component, the two color-class masks of the (bipartite) parent."""
    color = {}
    sides = []
    for comp in comps:
        start = (comp & -comp).bit_length() - 1
        color[start] = 0
        a, b = 1 << start, 0
        stack = [start]
        while stack:
            u = stack.pop()
            for w in iter_bits(masks[u]):
                if w not in color:
                    color[w] = color[u] ^ 1
                    if color[w]:
                        b |= 1 << w
                    else:
                        a |= 1 << w
                    stack.append(w)
        sides.append((a, b))
    return sides


def _nonempty_submasks(mask: int, cap: int) -> list[int]:
    verts = list(iter_bits(mask))
    out = []
    for r in range(1, min(cap, len(verts)) + 1):
        for combo in combinations(verts, r):
            out.append(mask_of(combo))
    return out


def _assemble(option_lists: list[list[int]], cap: int) -> list[int]:
    """All unions of one option per component, capped at cap set bits."""
    acc = [(0, 0)]
    for opts in option_lists:
        nxt = []
        for m, s in acc:
            for o in opts:
                s2 = s + o.bit_count()
                if s2 <= cap:
                    nxt.append((m | o, s2))
        acc = nxt
    return [m for m, _ in acc]


def _neighborhood_options(masks, cons: Constraints, final: bool) -> list[int]:
    """Admissible neighbor sets for the vertex about to be added."""
    k = len(masks)
    if cons.max_degree is not None:
        allowed = mask_of(v for v in range(k) if masks[v].bit_count() < cons.max_degree)
        cap = cons.max_degree
    else:
        allowed = (1 << k) - 1
        cap = k
    comps = components(masks, k)

    if cons.forest_growth:
        option_lists = []
        for comp in comps:
            opts = [] if final else [0]
            opts.extend(1 << v for v in iter_bits(comp & allowed))
            option_lists.append(opts)
        return _assemble(option_lists, cap)

    if cons.bipartite_only:
        option_lists = []
        for comp, (a, b) in zip(comps, _bipartition_sides(masks, comps)):
            opts = [] if final else [0]
            opts.extend(_nonempty_submasks(a & allowed, cap))
            opts.extend(_nonempty_submasks(b & allowed, cap))
            option_lists.append(opts)
        return _assemble(option_lists, cap)

    verts = list(iter_bits(allowed))
    out = []
    lo = 1 if final else 0
    for r in range(lo, min(cap, len(verts)) + 1):
        for combo in combinations(verts, r):
            s = mask_of(combo)
            if final and any(not (s & comp) for comp in comps):
                continue
            out.append(s)
    return out


def _expand_parent(masks, cons: Constraints, final: bool) -> dict[bytes, tuple[int, ...]]:
    """Children of one parent class that pass the canonical-deletion test."""
    k = len(masks)
    m_parent = sum(x.bit_count() for x in masks) // 2
    target_r = cons.cyclomatic
    out: dict[bytes, tuple[int, ...]] = {}
    for s in _neighborhood_options(masks, cons, final):
        child = list(masks)
        child.append(s)
        for u in iter_bits(s):
            child[u] |= 1 << k
        if target_r is not None and target_r > 0:
            m_child = m_parent + s.bit_count()
            c_child = len(components(child, k + 1))
            r_child = m_child - (k + 1) + c_child
            if r_child > target_r or (final and r_child != target_r):
                continue
        res = _canon.canon_full(k + 1, child)
        if res.orbits[k] != res.orbits[res.last_vertex]:
            continue
        out.setdefault(res.key, tuple(child))
    return out


def _expand_chunk(args) -> dict[bytes, tuple[int, ...]]:
    chunk, cons, final = args
    merged: dict[bytes, tuple[int, ...]] = {}
    for masks in chunk:
        merged.update(_expand_parent(masks, cons, final))
    return merged


def _final_keys(cons: Constraints, workers: int = 1) -> list[bytes]:
    """Sorted canonical keys of every class matching cons."""
    n = cons.n
    if n == 1:
        if not _matches(build_graph(1, []), cons):
            return []
        return [_canon.canon_full(1, (0,)).key]
    level: list[tuple[int, ...]] = [(0,)]
    keys: list[bytes] = []
    pool = ProcessPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        for k in range(1, n):
            final = k == n - 1
            merged: dict[bytes, tuple[int, ...]] = {}
            if pool is not None and len(level) > 2 * workers:
                chunks = [level[i::workers] for i in range(workers)]
                for part in pool.map(_expand_chunk, [(c, cons, final) for c in chunks]):
                    merged.update(part)
            else:
                for masks in level:
                    merged.update(_expand_parent(masks, cons, final))
            if final:
                keys = sorted(merged)
            else:
                level = [merged[key] for key in sorted(merged)]
    finally:
        if pool is not None:
            pool.shutdown()
    return keys


def _graph_from_masks(masks) -> Graph:
    n = len(masks)
    edges = [(u, v) for v in range(n) for u in iter_bits(masks[v]) if u < v]
    return build_graph(n, edges)


def _bound_for(cons: Constraints, bounds: FeasibilityBounds) -> tuple[int, str]:
    if cons.forest_growth:
        return bounds.trees, cons.describe()
    if cons.bipartite_only:
        return bounds.bipartite, cons.describe()
    return bounds.general, cons.describe()


def enumerate_connected(
    cons: Constraints,
    *,
    bounds: Optional[FeasibilityBounds] = None,
    workers: int = 1,
) -> Iterator[Graph]:
    """One Graph per isomorphism class matching cons, in canonical-form order.

    Emitted graphs carry their canonical labeling, so to_graph6 of the k-th
    graph is exactly the k-th key in the stream's sort order.
    """
    bounds = bounds if bounds is not None else FeasibilityBounds.from_env()
    limit, what = _bound_for(cons, bounds)
    if cons.n > limit:
        raise EnumerationBoundError(cons.n, limit, what)
    return (from_graph6(key.decode("ascii")) for key in _final_keys(cons, workers))


def enumerate_trees(
    n: int,
    *,
    max_degree: Optional[int] = None,
    bounds: Optional[FeasibilityBounds] = None,
    workers: int = 1,
) -> Iterator[Graph]:
    """All unlabeled trees on n vertices (optionally degree-bounded).

    Trees get a higher feasibility bound than the general stream; the forest
    intermediates stay sparse enough to reach n = 14 comfortably.
    """
    bounds = bounds if bounds is not None else FeasibilityBounds.from_env()
    if n > bounds.trees:
        raise EnumerationBoundError(n, bounds.trees, "trees")
    cons = Constraints(n, trees_only=True, max_degree=max_degree)
    return (from_graph6(key.decode("ascii")) for key in _final_keys(cons, workers))


def count_classes(
    cons: Constraints,
    *,
    bounds: Optional[FeasibilityBounds] = None,
    workers: int = 1,
) -> int:
    """Cardinality of the stream without building Graph objects."""
    bounds = bounds if bounds is not None else FeasibilityBounds.from_env()
    limit, what = _bound_for(cons, bounds)
    if cons.n > limit:
        raise EnumerationBoundError(cons.n, limit, what)
    return len(_final_keys(cons, workers))


# ------------------------------------------------------------ oracle no. 1 ----

def _matches(g: Graph, cons: Constraints) -> bool:
    if cons.bipartite_only or cons.trees_only:
        from .graphs import is_bipartite

        if cons.trees_only and not g.is_tree:
            return False
        if not is_bipartite(g):
            return False
    if cons.max_degree is not None and g.max_degree > cons.max_degree:
        return False
    if cons.cyclomatic is not None and g.cyclomatic_number != cons.cyclomatic:
        return False
    return True


def brute_force_classes(cons: Constraints) -> list[Graph]:
    """Every connected isomorphism class matching cons, by sheer enumeration.

    Walks all 2^(n(n-1)/2) labeled graphs as edge bitmasks and flood-fills
    isomorphism orbits under adjacent-transposition relabelings. Exact and
    completely independent of the augmentation generator and of the
    canonical-labeling search; usable for n <= 7.
    """
    n = cons.n
    if n > 7:
        raise ValueError("the brute-force oracle is limited to n <= 7")
    if n == 1:
        k1 = build_graph(1, [])
        return [k1] if _matches(k1, cons) else []

    nbits = n * (n - 1) // 2
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    index = {p: b for b, p in enumerate(pairs)}
    lo_bits = nbits // 2
    lo_mask = (1 << lo_bits) - 1

    tables = []
    for t in range(n - 1):
        perm = list(range(n))
        perm[t], perm[t + 1] = perm[t + 1], perm[t]
        bitmap = []
        for i, j in pairs:
            pi, pj = perm[i], perm[j]
            bitmap.append(index[(pi, pj) if pi < pj else (pj, pi)])

        def build(width: int, offset: int) -> list[int]:
            singles = [1 << bitmap[offset + b] for b in range(width)]
            tab = [0] * (1 << width)
            for x in range(1, 1 << width):
                low = x & -x
                tab[x] = tab[x ^ low] | singles[low.bit_length() - 1]
            return tab

        tables.append((build(lo_bits, 0), build(nbits - lo_bits, lo_bits)))

    visited = bytearray(1 << nbits)
    reps = []
    for start in range(1 << nbits):
        if visited[start]:
            continue
        visited[start] = 1
        rep = start
        stack = [start]
        while stack:
            x = stack.pop()
            xl, xh = x & lo_mask, x >> lo_bits
            for lo, hi in tables:
                y = lo[xl] | hi[xh]
                if not visited[y]:
                    visited[y] = 1
                    if y < rep:
                        rep = y
                    stack.append(y)
        reps.append(rep)

    out = []
    for rep in reps:
        adj = [0] * n
        for b, (i, j) in enumerate(pairs):
            if (rep >> b) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
        if reach(adj, 0) != (1 << n) - 1:
            continue
        g = _graph_from_masks(adj)
        if _matches(g, cons):
            out.append(g)
    out.sort(key=canonical_form)
    return out


# ------------------------------------------------------------ oracle no. 2 ----

def _prufer_decode(n: int, seq) -> list[tuple[int, int]]:
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapify(leaves)
    edges = []
    for x in seq:
        leaf = heappop(leaves)
        edges.append((leaf, x) if leaf < x else (x, leaf))
        degree[leaf] -= 1
        degree[x] -= 1
        if degree[x] == 1:
            heappush(leaves, x)
    u = heappop(leaves)
    v = heappop(leaves)
    edges.append((u, v) if u < v else (v, u))
    return edges


def _tree_centers(n: int, adj: list[list[int]]) -> list[int]:
    if n <= 2:
        return list(range(n))
    deg = [len(a) for a in adj]
    leaves = [v for v in range(n) if deg[v] == 1]
    count = n
    while count > 2:
        nxt = []
        for v in leaves:
            deg[v] = 0
            for w in adj[v]:
                if deg[w] > 1:
                    deg[w] -= 1
                    if deg[w] == 1:
                        nxt.append(w)
        count -= len(leaves)
        leaves = nxt
    return leaves


def ahu_certificate(n: int, edges) -> str:
    """Center-rooted AHU code; equal exactly for isomorphic trees."""
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)

    def code(v: int, parent: int) -> str:
        subs = sorted(code(w, v) for w in adj[v] if w != parent)
        return "(" + "".join(subs) + ")"

    return min(code(c, -1) for c in _tree_centers(n, adj))


def prufer_trees(n: int) -> list[Graph]:
    """All unlabeled trees on n vertices via Prufer sequences; n <= 8."""
    if n > 8:
        raise ValueError("the Prufer oracle is limited to n <= 8")
    if n == 1:
        return [build_graph(1, [])]
    if n == 2:
        return [build_graph(2, [(0, 1)])]
    found: dict[str, list[tuple[int, int]]] = {}
    for seq in product(range(n), repeat=n - 2):
        edges = _prufer_decode(n, seq)
        cert = ahu_certificate(n, edges)
        if cert not in found:
            found[cert] = edges
    graphs = [build_graph(n, e) for e in found.values()]
    graphs.sort(key=canonical_form)
    return graphs
