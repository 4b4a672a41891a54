"""Parametric graph family constructors and their closed-form NGG values.

Families and their text spellings (used by the CLI and parse_spec):

    P:n      path on n vertices
    C:n      cycle, n >= 3
    K:n      complete graph
    KB:a,b   complete bipartite K_{a,b}
    S:n      star (center 0), n >= 2
    CP:n     odd n >= 5: cycle on n-1 vertices plus one pendant vertex
    CH:n     odd n >= 5: even cycle with a two-edge hook, theta(n-3, 2, 2)
    TH:a,b,c theta graph: two hub vertices joined by internally disjoint
             paths of a, b, c edges; a >= b >= c >= 1, at most one path of
             length one, a+b+c >= 5
    AD:n,d   almost dendrimer tree: breadth-first greedy filling where the
             root takes up to d children and every later vertex up to d-1

The pendant (CP) and hook (CH) families exist for odd order only; they are
the two candidate minimizers of NGG among bipartite graphs of odd order, and
nothing here needs an even variant.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .graphs import Graph, build_graph

_KIND_CODES = {
    "path": "P",
    "cycle": "C",
    "complete": "K",
    "complete_bipartite": "KB",
    "star": "S",
    "cycle_pendant": "CP",
    "cycle_hook": "CH",
    "theta": "TH",
    "almost_dendrimer": "AD",
}
_CODE_KINDS = {v: k for k, v in _KIND_CODES.items()}
_ARITY = {"KB": 2, "TH": 3, "AD": 2}


class FamilyError(ValueError):
    """Invalid family parameters."""


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.kind not in _KIND_CODES:
            raise FamilyError(f"unknown family kind {self.kind!r}")
        object.__setattr__(self, "params", tuple(int(p) for p in self.params))

    @property
    def text(self) -> str:
        return f"{_KIND_CODES[self.kind]}:{','.join(str(p) for p in self.params)}"


def parse_spec(text: str) -> FamilySpec:
    """Parse 'CODE:params', e.g. 'P:10', 'KB:3,4', 'TH:4,2,2'."""
    head, sep, tail = text.strip().partition(":")
    code = head.strip().upper()
    if not sep or code not in _CODE_KINDS:
        known = " ".join(sorted(_CODE_KINDS))
        raise FamilyError(f"cannot parse family spec {text!r} (known codes: {known})")
    try:
        params = tuple(int(p) for p in tail.split(","))
    except ValueError:
        raise FamilyError(f"non-integer parameter in family spec {text!r}") from None
    want = _ARITY.get(code, 1)
    if len(params) != want:
        raise FamilyError(f"family {code} takes {want} parameter(s), got {len(params)}")
    return FamilySpec(_CODE_KINDS[code], params)


# ---------------------------------------------------------- constructors ----

def path(n: int) -> Graph:
    if n < 1:
        raise FamilyError("path needs n >= 1")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise FamilyError("cycle needs n >= 3")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise FamilyError("complete graph needs n >= 1")
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise FamilyError("complete bipartite graph needs both sides non-empty")
    return build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def star(n: int) -> Graph:
    if n < 2:
        raise FamilyError("star needs n >= 2")
    return build_graph(n, [(0, i) for i in range(1, n)])


def cycle_pendant(n: int) -> Graph:
    """Even cycle on vertices 0..n-2 plus the pendant vertex n-1 on vertex 0."""
    if n < 5 or n % 2 == 0:
        raise FamilyError("cycle_pendant is defined for odd n >= 5")
    edges = [(i, (i + 1) % (n - 1)) for i in range(n - 1)]
    edges.append((0, n - 1))
    return build_graph(n, edges)


def theta(a: int, b: int, c: int) -> Graph:
    """Two hubs joined by internally disjoint paths of a, b, c edges."""
    if not (a >= b >= c >= 1):
        raise FamilyError("theta needs a >= b >= c >= 1")
    if b == 1:
        raise FamilyError("theta allows at most one path of length one")
    if a + b + c < 5:
        raise FamilyError("theta needs a + b + c >= 5")
    # hubs are 0 and 1; internal path vertices are numbered consecutively
    edges = []
    nxt = 2
    for length in (a, b, c):
        prev = 0
        for _ in range(length - 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, 1))
    return build_graph(nxt, edges)


def cycle_hook(n: int) -> Graph:
    """theta(n-3, 2, 2): an even cycle with a hooked two-edge path across it."""
    if n < 5 or n % 2 == 0:
        raise FamilyError("cycle_hook is defined for odd n >= 5")
    return theta(n - 3, 2, 2)


def almost_dendrimer(n: int, d: int) -> Graph:
    """Greedy breadth-first tree: root takes up to d children, others d-1.

    Vertices are labeled in breadth-first order, so labels coincide with the
    filling order and degrees are non-increasing along the labeling. At most
    one non-pendant vertex ends up short of its full degree.
    """
    if n < 2:
        raise FamilyError("almost_dendrimer needs n >= 2")
    if d < 2:
        raise FamilyError("almost_dendrimer needs d >= 2")
    edges = []
    nxt = 1
    for v in range(n):
        if nxt >= n:
            break
        cap = d if v == 0 else d - 1
        while cap and nxt < n:
            edges.append((v, nxt))
            nxt += 1
            cap -= 1
    return build_graph(n, edges)


_CONSTRUCTORS = {
    "path": path,
    "cycle": cycle,
    "complete": complete,
    "complete_bipartite": complete_bipartite,
    "star": star,
    "cycle_pendant": cycle_pendant,
    "cycle_hook": cycle_hook,
    "theta": theta,
    "almost_dendrimer": almost_dendrimer,
}


def construct(spec: FamilySpec) -> Graph:
    return _CONSTRUCTORS[spec.kind](*spec.params)


# ----------------------------------------------------------- closed forms ----

def ngg_path_closed(n: int) -> float:
    """NGG of the path: sum over 1 <= i <= n-1 of 1/sqrt(i(n-i))."""
    if n < 1:
        raise FamilyError("path needs n >= 1")
    return math.fsum(1.0 / math.sqrt(i * (n - i)) for i in range(1, n))


def path_ngg_limit() -> float:
    """Limit of NGG(path) as n grows: the integral of 1/sqrt(x(1-x)) on (0,1)."""
    return math.pi


def ngg_closed(spec: FamilySpec) -> float:
    """Exact-formula NGG for the families that have one.

    Supported: path, even cycle (value 2), complete bipartite (sqrt(ab)),
    star (sqrt(n-1)), cycle_pendant and cycle_hook (odd n = 2k+1):

        cycle_pendant: 1/sqrt(2k) + 2k/sqrt(k(k+1))
        cycle_hook:    (2k+2)/sqrt(k(k+1))
    """
    kind, params = spec.kind, spec.params
    if kind == "path":
        return ngg_path_closed(params[0])
    if kind == "cycle":
        n = params[0]
        if n % 2:
            raise FamilyError("closed-form NGG for cycles covers even n only")
        if n < 4:
            raise FamilyError("cycle needs n >= 3 (even form: n >= 4)")
        return 2.0
    if kind == "complete_bipartite":
        a, b = params
        if a < 1 or b < 1:
            raise FamilyError("complete bipartite graph needs both sides non-empty")
        return math.sqrt(a * b)
    if kind == "star":
        n = params[0]
        if n < 2:
            raise FamilyError("star needs n >= 2")
        return math.sqrt(n - 1)
    if kind == "cycle_pendant":
        n = params[0]
        if n < 5 or n % 2 == 0:
            raise FamilyError("cycle_pendant is defined for odd n >= 5")
        k = (n - 1) // 2
        return 1.0 / math.sqrt(2 * k) + 2 * k / math.sqrt(k * (k + 1))
    if kind == "cycle_hook":
        n = params[0]
        if n < 5 or n % 2 == 0:
            raise FamilyError("cycle_hook is defined for odd n >= 5")
        k = (n - 1) // 2
        return (2 * k + 2) / math.sqrt(k * (k + 1))
    raise FamilyError(f"no closed-form NGG for family kind {kind!r}")
