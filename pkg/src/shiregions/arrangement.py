"""Exact geometry of arrangements of hyperplanes x_i - x_j = c.

Regions and faces are enumerated as feasible sign vectors.  Feasibility of a
system of difference constraints is decided by Bellman-Ford over pairs
(integer part, epsilon count) compared lexicographically, so strict
inequalities are handled exactly and every answer comes with a rational
witness point.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .diagram import Diagram, KDiagram, prune_spans
from .errors import InvariantError, ShiError
from .pfcore import SimpleGraph

KINDS = ("braid", "shi", "graphical", "extended", "family")


@dataclass(frozen=True, order=True)
class Hyperplane:
    """The hyperplane x_i - x_j = c, with i < j."""

    i: int
    j: int
    c: int

    def __post_init__(self):
        if not self.i < self.j:
            raise ShiError("hyperplane needs i < j, got %d, %d" % (self.i, self.j))

    def value(self, x: Sequence) -> object:
        return x[self.i - 1] - x[self.j - 1] - self.c


@dataclass(frozen=True)
class Arrangement:
    n: int
    hyperplanes: tuple[Hyperplane, ...]
    kind: str = "custom"
    graph: SimpleGraph | None = field(default=None, compare=False)
    k: int = field(default=1, compare=False)

    def __post_init__(self):
        hs = tuple(self.hyperplanes)
        for h in hs:
            if h.j > self.n:
                raise ShiError("hyperplane %s outside dimension %d" % (h, self.n))
        if len(set(hs)) != len(hs):
            raise ShiError("repeated hyperplane")
        object.__setattr__(self, "hyperplanes", hs)

    def __len__(self):
        return len(self.hyperplanes)

    def __iter__(self):
        return iter(self.hyperplanes)

    def max_offset(self) -> int:
        return max((abs(h.c) for h in self.hyperplanes), default=0)

    def to_json(self) -> dict:
        return {"n": self.n, "hyperplanes": [[h.i, h.j, h.c] for h in self.hyperplanes]}

    @classmethod
    def from_json(cls, data: dict) -> Arrangement:
        return cls(int(data["n"]), tuple(Hyperplane(*map(int, h)) for h in data["hyperplanes"]))


def _sorted(n, planes, **meta) -> Arrangement:
    return Arrangement(n, tuple(sorted(set(planes))), **meta)


def braid(n: int) -> Arrangement:
    return build("braid", n)


def shi(n: int) -> Arrangement:
    return build("shi", n)


def graphical(n: int, graph: SimpleGraph) -> Arrangement:
    return build("graphical", n, graph=graph)


def extended(n: int, k: int) -> Arrangement:
    return build("extended", n, k=k)


def family(n: int, m: int, k: int) -> Arrangement:
    return build("family", n, m=m, k=k)


def build(kind: str, n: int, *, graph: SimpleGraph | None = None,
          k: int | None = None, m: int | None = None) -> Arrangement:
    """Build a named arrangement in R^n with hyperplanes sorted by (i, j, c).

    ``family`` is the two-parameter family x_1 - x_j = 0..m for 2 <= j < k,
    x_1 - x_j = 0..m+1 for k <= j <= n, x_i - x_j = 0, 1 for 2 <= i < j <= n.
    """
    if n < 2:
        raise ShiError("need n >= 2")
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    if kind == "braid":
        return _sorted(n, [Hyperplane(i, j, 0) for i, j in pairs], kind=kind,
                       graph=SimpleGraph.empty(n))
    if kind == "shi":
        return _sorted(n, [Hyperplane(i, j, c) for i, j in pairs for c in (0, 1)],
                       kind=kind, graph=SimpleGraph.complete(n))
    if kind == "graphical":
        if graph is None or graph.n != n:
            raise ShiError("graphical arrangement needs a graph on [%d]" % n)
        planes = [Hyperplane(i, j, 0) for i, j in pairs]
        planes += [Hyperplane(i, j, 1) for i, j in pairs if graph.has_edge(i, j)]
        return _sorted(n, planes, kind=kind, graph=graph)
    if kind == "extended":
        if k is None or k < 1:
            raise ShiError("extended arrangement needs k >= 1")
        return _sorted(n, [Hyperplane(i, j, c) for i, j in pairs
                           for c in range(-k + 1, k + 1)], kind=kind, k=k)
    if kind == "family":
        if m is None or m < 0 or k is None or not 2 <= k <= n + 1:
            raise ShiError("family needs m >= 0 and 2 <= k <= n+1")
        planes = [Hyperplane(1, j, c) for j in range(2, n + 1)
                  for c in range(m + 1 if j < k else m + 2)]
        planes += [Hyperplane(i, j, c) for i, j in pairs if i >= 2 for c in (0, 1)]
        return _sorted(n, planes, kind=kind)
    raise ShiError("unknown arrangement kind %r" % (kind,))


# -- difference constraints -------------------------------------------------

Constraint = tuple  # (i, j, rel, c): x_i - x_j rel c, rel in "<", ">", "="


def _satisfied(x: Sequence[Fraction], con: Constraint) -> bool:
    i, j, rel, c = con
    d = x[i - 1] - x[j - 1]
    return d < c if rel == "<" else d > c if rel == ">" else d == c


def feasible(constraints: Iterable[Constraint], n: int | None = None) -> tuple[Fraction, ...] | None:
    """A rational point satisfying every constraint, or None if there is none.

    Each constraint becomes an edge of a potential graph: x_i - x_j <= c - eps
    (strict) or <= c (non-strict) is an edge j -> i of weight (c, -1) or (c, 0).
    The system is infeasible exactly when some cycle has lexicographically
    negative weight.
    """
    constraints = list(constraints)
    if n is None:
        n = max((max(i, j) for i, j, _, _ in constraints), default=0)
    edges = []
    for i, j, rel, c in constraints:
        if rel == "<":
            edges.append((j, i, c, -1))
        elif rel == ">":
            edges.append((i, j, -c, -1))
        elif rel == "=":
            edges.append((j, i, c, 0))
            edges.append((i, j, -c, 0))
        else:
            raise ShiError("unknown relation %r" % (rel,))
    # Implicit source at distance (0, 0) from every vertex.
    dist = [(0, 0)] * (n + 1)
    for _ in range(n + 1):
        changed = False
        for u, v, a, b in edges:
            cand = (dist[u][0] + a, dist[u][1] + b)
            if cand < dist[v]:
                dist[v] = cand
                changed = True
        if not changed:
            break
    else:
        return None
    eps = Fraction(1, 2 * len(constraints) + 2)
    x = tuple(Fraction(a) + b * eps for a, b in dist[1:])
    for con in constraints:
        if not _satisfied(x, con):
            raise InvariantError("witness %s violates %s" % (x, con))
    return x


# -- regions and faces ------------------------------------------------------

_REL = {"+": ">", "-": "<", "0": "="}


def _sign_constraints(planes: Sequence[Hyperplane], signs: str) -> list[Constraint]:
    return [(h.i, h.j, _REL[s], h.c) for h, s in zip(planes, signs)]


def sign_of(h: Hyperplane, x: Sequence) -> str:
    v = h.value(x)
    return "+" if v > 0 else "-" if v < 0 else "0"


@dataclass(frozen=True)
class Region:
    signs: str
    witness: tuple[Fraction, ...]

    def to_json(self) -> dict:
        return {"signs": self.signs, "witness": [_frac(w) for w in self.witness]}


@dataclass(frozen=True)
class Face:
    signs: str
    dim: int
    witness: tuple[Fraction, ...]

    def to_json(self) -> dict:
        return {"signs": self.signs, "dim": self.dim,
                "witness": [_frac(w) for w in self.witness]}


def _frac(q: Fraction) -> str:
    return "%d/%d" % (q.numerator, q.denominator)


def _search(a: Arrangement, alphabet: str) -> Iterator[tuple[str, tuple[Fraction, ...]]]:
    planes = a.hyperplanes

    def walk(prefix: str, witness):
        if len(prefix) == len(planes):
            yield prefix, witness
            return
        for s in alphabet:
            signs = prefix + s
            x = feasible(_sign_constraints(planes, signs), a.n)
            if x is not None:
                yield from walk(signs, x)

    yield from walk("", tuple(Fraction(0) for _ in range(a.n)))


def enumerate_regions(a: Arrangement) -> list[Region]:
    """One region per feasible {+,-} sign vector, in depth-first order (+ before -)."""
    return [Region(s, x) for s, x in _search(a, "+-")]


def equality_components(n: int, planes: Sequence[Hyperplane], signs: str) -> int:
    parent = list(range(n + 1))

    def find(u):
        while parent[u] != u:
            parent[u] = parent[parent[u]]
            u = parent[u]
        return u

    comps = n
    for h, s in zip(planes, signs):
        if s == "0":
            a, b = find(h.i), find(h.j)
            if a != b:
                parent[a] = b
                comps -= 1
    return comps


def enumerate_faces(a: Arrangement) -> list[Face]:
    """One face per feasible {+,0,-} vector; dimension from the equality graph."""
    return [Face(s, equality_components(a.n, a.hyperplanes, s), x)
            for s, x in _search(a, "+0-")]


def f_vector(a: Arrangement) -> dict[int, int]:
    counts = {d: 0 for d in range(0, a.n + 1)}
    for face in enumerate_faces(a):
        counts[face.dim] += 1
    return counts


def check_witness(a: Arrangement, cell: Region | Face) -> bool:
    return all(sign_of(h, cell.witness) == s for h, s in zip(a.hyperplanes, cell.signs))


# -- deletion and restriction -----------------------------------------------

def delete(a: Arrangement, h: Hyperplane) -> Arrangement:
    return Arrangement(a.n, tuple(p for p in a.hyperplanes if p != h))


def restrict(a: Arrangement, h: Hyperplane) -> Arrangement:
    """Trace of the other hyperplanes on ``h``, in the coordinates left after
    eliminating x_j via x_j = x_i - c and renumbering."""
    keep = [v for v in range(1, a.n + 1) if v != h.j]
    label = {v: t for t, v in enumerate(keep, 1)}
    planes = set()
    for p in a.hyperplanes:
        if p == h:
            continue
        # write p as x_u - x_v = c with x_j replaced by x_i - h.c
        u, v, c = p.i, p.j, p.c
        if u == h.j:
            u, c = h.i, c + h.c
        if v == h.j:
            v, c = h.i, c - h.c
        if u == v:
            # parallel to h: either all of h or disjoint from it
            if c == 0:
                raise InvariantError("hyperplane %s duplicates %s" % (p, h))
            continue
        if u > v:
            u, v, c = v, u, -c
        planes.add(Hyperplane(label[u], label[v], c))
    return Arrangement(a.n - 1, tuple(sorted(planes)))


# -- diagrams of regions ----------------------------------------------------

def region_to_diagram(r: Region, a: Arrangement, *, graph: SimpleGraph | None = None,
                      k: int | None = None) -> Diagram | KDiagram:
    """Arc diagram of a region of a braid, Shi, graphical or extended arrangement.

    The flavour comes from ``a.kind``; ``graph`` or ``k`` override it.
    """
    x = r.witness
    n = a.n
    if k is None:
        k = a.k if a.kind == "extended" else 1
    if a.kind == "extended" or k > 1:
        return _kdiagram(x, n, k)
    if graph is None:
        graph = a.graph
    if graph is None:
        raise ShiError("arrangement of kind %r has no diagram" % (a.kind,))
    word = sorted(range(1, n + 1), key=lambda v: x[v - 1], reverse=True)
    if len({x[v - 1] for v in word}) != n:
        raise InvariantError("witness %s has tied coordinates" % (x,))
    pos = {v: p for p, v in enumerate(word, 1)}
    raw = {(pos[i], pos[j]) for i, j in graph.edges if x[i - 1] - x[j - 1] > 1}
    return Diagram.from_spans(word, prune_spans(raw))


def _kdiagram(x: Sequence[Fraction], n: int, k: int) -> KDiagram:
    # Variables x_i + m, 0 <= m < k, sorted decreasingly.
    nodes = sorted(((x[i - 1] + m, i, m) for i in range(1, n + 1) for m in range(k)),
                   reverse=True)
    if len({val for val, _, _ in nodes}) != len(nodes):
        raise InvariantError("witness %s has tied translates" % (x,))
    pos = {(i, m): p for p, (_, i, m) in enumerate(nodes, 1)}
    raw = {(pos[i, m], pos[i, m - 1]) for i in range(1, n + 1) for m in range(1, k)}
    raw |= {(pos[i, 0], pos[j, k - 1]) for i, j in itertools.combinations(range(1, n + 1), 2)
            if x[i - 1] - x[j - 1] > k}
    return KDiagram(tuple(i for _, i, _ in nodes), k, prune_spans(raw))
