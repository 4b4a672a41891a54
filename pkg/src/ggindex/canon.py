"""Canonical labeling of small simple graphs by refinement and backtracking.

Graphs are handled as adjacency bitmasks: adj[v] has bit u set when uv is an
edge. The canonical key of a graph is the graph6 string (as ASCII bytes) of
the relabeled graph chosen by the search, so two graphs receive equal keys
exactly when they are isomorphic, keys sort deterministically, and a key can
be decoded back into a representative graph with any graph6 reader.

The search first refines the all-equal coloring by iterated neighbor-multiset
splitting (degree refinement and its transitive closure). If the stable
partition still has a non-singleton cell, the first such cell is branched on:
each vertex in it is individualized in turn and the search recurses. Among
all complete labelings consistent with the refinement, the one encoding to
the lexicographically smallest upper-triangle bitstring wins. Two standard
prunes keep symmetric graphs from exploding into n! leaves:

  * every leaf whose bitstring equals the current best, or equals the first
    leaf reached, yields an automorphism; generators are accumulated as they
    are discovered;
  * a sibling vertex is skipped when a known automorphism fixing all
    previously individualized vertices maps it into an already-explored
    sibling, since its subtree would repeat explored work.

The accumulated generators also give the automorphism orbits of the vertex
set, which the isomorph-free enumerator uses for its canonical-deletion test.
Orbit correctness is load-bearing there, so the test suite compares orbits
against a permutation brute force on every graph with up to 6 vertices and on
random larger ones.

canon_key_exhaustive minimizes over every permutation (feasible for n <= 8).
It generally picks a different representative than the search, which only
minimizes across refinement-consistent labelings; the properties that must
agree, and that the tests compare, are the induced isomorphism partition
(equal keys exactly for isomorphic graphs), the orbit partition, and the
invariance of each key under relabeling.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .bitset import iter_bits
from .formats import graph6_from_bits


@dataclass(frozen=True)
class CanonResult:
    key: bytes                 # graph6 of the canonically relabeled graph
    labeling: tuple[int, ...]  # canonical position -> original vertex
    orbits: tuple[int, ...]    # orbit id (smallest member) per vertex
    last_vertex: int           # vertex placed on the final canonical position


def _refine(n: int, neigh: list[tuple[int, ...]], colors: list[int]) -> list[int]:
    """Stable iso-invariant coloring refinement (1-WL), classes renumbered."""
    while True:
        sigs = [
            (colors[v], tuple(sorted(colors[u] for u in neigh[v])))
            for v in range(n)
        ]
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [rank[s] for s in sigs]
        if new == colors:
            return new
        colors = new


def _individualize(colors: list[int], v: int) -> list[int]:
    cv = colors[v]
    return [
        c + 1 if (c > cv or (c == cv and u != v)) else c
        for u, c in enumerate(colors)
    ]


def _encode(n: int, adj, lab) -> int:
    """Upper-triangle bits of the relabeled graph, column-major, msb first."""
    bits = 0
    for j in range(1, n):
        row = adj[lab[j]]
        for i in range(j):
            bits = (bits << 1) | ((row >> lab[i]) & 1)
    return bits


def canon_full(n: int, adj) -> CanonResult:
    if n < 1:
        raise ValueError("canonical form needs at least one vertex")
    if n == 1:
        return CanonResult(graph6_from_bits(1, 0).encode("ascii"), (0,), (0,), 0)

    neigh = [tuple(iter_bits(adj[v])) for v in range(n)]
    identity = tuple(range(n))
    gens: list[tuple[int, ...]] = []
    gen_seen = {identity}

    best_bits: int | None = None
    best_lab: tuple[int, ...] = identity
    first_bits: int | None = None
    first_lab: tuple[int, ...] = identity

    def record(lab_a: tuple[int, ...], lab_b: tuple[int, ...]) -> None:
        sigma = [0] * n
        for va, vb in zip(lab_a, lab_b):
            sigma[va] = vb
        tup = tuple(sigma)
        if tup not in gen_seen:
            gen_seen.add(tup)
            gens.append(tup)

    def orbit_find(prefix: tuple[int, ...]):
        """Union-find over the generators that fix prefix pointwise."""
        parent = list(range(n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in gens:
            if any(g[p] != p for p in prefix):
                continue
            for v in range(n):
                a, b = find(v), find(g[v])
                if a != b:
                    parent[max(a, b)] = min(a, b)
        return find

    def search(colors: list[int], prefix: tuple[int, ...]) -> None:
        nonlocal best_bits, best_lab, first_bits, first_lab
        ncells = max(colors) + 1
        if ncells == n:
            lab = tuple(sorted(range(n), key=colors.__getitem__))
            bits = _encode(n, adj, lab)
            if first_bits is None:
                first_bits, first_lab = bits, lab
            elif bits == first_bits and lab != first_lab:
                record(first_lab, lab)
            if best_bits is None or bits < best_bits:
                best_bits, best_lab = bits, lab
            elif bits == best_bits and lab != best_lab:
                record(best_lab, lab)
            return
        counts = [0] * ncells
        for c in colors:
            counts[c] += 1
        target = next(c for c in range(ncells) if counts[c] > 1)
        cell = [v for v in range(n) if colors[v] == target]
        explored: list[int] = []
        for v in cell:
            if explored:
                find = orbit_find(prefix)
                rv = find(v)
                if any(find(u) == rv for u in explored):
                    continue
            explored.append(v)
            search(_refine(n, neigh, _individualize(colors, v)), prefix + (v,))

    search(_refine(n, neigh, [0] * n), ())
    assert best_bits is not None

    parent = list(range(n))

    def find_root(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for v in range(n):
            a, b = find_root(v), find_root(g[v])
            if a != b:
                parent[max(a, b)] = min(a, b)
    orbits = tuple(find_root(v) for v in range(n))

    return CanonResult(
        key=graph6_from_bits(n, best_bits).encode("ascii"),
        labeling=best_lab,
        orbits=orbits,
        last_vertex=best_lab[n - 1],
    )


def canon_key(n: int, adj) -> bytes:
    return canon_full(n, adj).key


# ------------------------------------------------------ exhaustive oracle ----

def canon_key_exhaustive(n: int, adj) -> bytes:
    """Key minimized over every permutation; oracle use only (n <= 8)."""
    if n > 8:
        raise ValueError("exhaustive canonical form is limited to n <= 8")
    if n == 1:
        return graph6_from_bits(1, 0).encode("ascii")
    best = min(_encode(n, adj, lab) for lab in permutations(range(n)))
    return graph6_from_bits(n, best).encode("ascii")


def orbits_exhaustive(n: int, adj) -> tuple[int, ...]:
    """Automorphism orbits by checking every permutation; n <= 8."""
    if n > 8:
        raise ValueError("exhaustive orbit computation is limited to n <= 8")
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for perm in permutations(range(n)):
        if all(
            ((adj[perm[v]] >> perm[u]) & 1) == ((adj[v] >> u) & 1)
            for v in range(n)
            for u in range(v)
        ):
            for v in range(n):
                a, b = find(v), find(perm[v])
                if a != b:
                    parent[max(a, b)] = min(a, b)
    return tuple(find(v) for v in range(n))
