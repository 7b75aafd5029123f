"""Parking functions, k-parking functions, cyclic cosets and graphs on [n]."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import GraphConditionError, InvariantError, NotParkingError, ShiError


def _check_values(values: Sequence[int]) -> tuple[int, ...]:
    values = tuple(int(v) for v in values)
    if not values:
        raise ShiError("empty sequence")
    bad = [v for v in values if v < 1]
    if bad:
        raise ShiError("entries must be positive integers, got %r" % (bad[0],))
    return values


def is_k_parking(values: Sequence[int], k: int = 1) -> bool:
    """True iff the sorted values b_1 <= ... <= b_n satisfy b_i <= 1 + k(i-1)."""
    if k < 1:
        raise ShiError("k must be positive")
    values = _check_values(values)
    return all(b <= 1 + k * i for i, b in enumerate(sorted(values)))


def is_parking(values: Sequence[int]) -> bool:
    return is_k_parking(values, 1)


@dataclass(frozen=True)
class KParkingFunction:
    """A k-parking function on [n]; ``k == 1`` gives ordinary parking functions."""

    values: tuple[int, ...]
    k: int = 1

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))
        if not is_k_parking(self.values, self.k):
            raise NotParkingError(
                "%s is not a %d-parking function" % (list(self.values), self.k))

    @property
    def n(self) -> int:
        return len(self.values)

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def to_json(self) -> list[int]:
        return list(self.values)


def ParkingFunction(values: Sequence[int]) -> KParkingFunction:
    """Build an ordinary (k = 1) parking function."""
    return KParkingFunction(tuple(values), 1)


def _k_parking_sequences(n: int, k: int) -> Iterator[tuple[int, ...]]:
    # Every k-parking value is at most 1 + k(n-1); filter the full cube.
    top = 1 + k * (n - 1)
    for values in itertools.product(range(1, top + 1), repeat=n):
        if all(b <= 1 + k * i for i, b in enumerate(sorted(values))):
            yield values


def enumerate_k_parking(n: int, k: int = 1) -> list[KParkingFunction]:
    """All k-parking functions on [n] in lexicographic order."""
    if n < 1 or k < 1:
        raise ShiError("need n >= 1 and k >= 1")
    return [KParkingFunction(v, k) for v in _k_parking_sequences(n, k)]


def enumerate_parking(n: int) -> list[KParkingFunction]:
    return enumerate_k_parking(n, 1)


@dataclass(frozen=True)
class CosetVector:
    """An element of Z_{kn+1}^n, standing for its coset modulo (1, ..., 1)."""

    entries: tuple[int, ...]
    k: int = 1

    def __post_init__(self):
        if self.k < 1 or not self.entries:
            raise ShiError("need k >= 1 and a nonempty vector")
        m = len(self.entries) * self.k + 1
        object.__setattr__(self, "entries", tuple(int(e) % m for e in self.entries))

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def modulus(self) -> int:
        return self.k * self.n + 1

    def shift(self, t: int = 1) -> CosetVector:
        return CosetVector(tuple(e + t for e in self.entries), self.k)

    def coset(self) -> list[CosetVector]:
        return [self.shift(t) for t in range(self.modulus)]

    def equivalent(self, other: CosetVector) -> bool:
        if (self.n, self.k) != (other.n, other.k):
            return False
        diffs = {(a - b) % self.modulus for a, b in zip(self.entries, other.entries)}
        return len(diffs) == 1


def embed_residues(v: CosetVector) -> tuple[int, ...] | None:
    """Read residues as integers in {1, ..., k(n-1)+1}; None if one falls outside."""
    top = v.k * (v.n - 1) + 1
    if all(1 <= e <= top for e in v.entries):
        return v.entries
    return None


def coset_representative(v: CosetVector) -> KParkingFunction:
    """The unique k-parking function in the coset of ``v``."""
    hits = []
    for w in v.coset():
        values = embed_residues(w)
        if values is not None and is_k_parking(values, v.k):
            hits.append(values)
    if len(hits) != 1:
        raise InvariantError(
            "coset of %s holds %d k-parking functions" % (list(v.entries), len(hits)))
    return KParkingFunction(hits[0], v.k)


def coset_vectors(n: int, k: int = 1) -> Iterator[CosetVector]:
    """One vector per coset: the representative with first entry 0."""
    m = k * n + 1
    for tail in itertools.product(range(m), repeat=n - 1):
        yield CosetVector((0,) + tail, k)


@dataclass(frozen=True)
class SimpleGraph:
    """A simple graph on the vertex set [n]; edges are stored as (i, j), i < j."""

    n: int
    edges: frozenset

    def __post_init__(self):
        if self.n < 1:
            raise ShiError("graph needs n >= 1")
        norm = set()
        for e in self.edges:
            i, j = (int(x) for x in e)
            if i == j:
                raise ShiError("loop at vertex %d" % i)
            i, j = min(i, j), max(i, j)
            if i < 1 or j > self.n:
                raise ShiError("edge %d%d outside [%d]" % (i, j, self.n))
            norm.add((i, j))
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def complete(cls, n: int) -> SimpleGraph:
        return cls(n, frozenset(itertools.combinations(range(1, n + 1), 2)))

    @classmethod
    def empty(cls, n: int) -> SimpleGraph:
        return cls(n, frozenset())

    @classmethod
    def path(cls, n: int) -> SimpleGraph:
        return cls(n, frozenset((i, i + 1) for i in range(1, n)))

    @classmethod
    def from_json(cls, n: int, data: Iterable) -> SimpleGraph:
        return cls(n, frozenset(tuple(e) for e in data))

    def has_edge(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.edges

    def is_complete(self) -> bool:
        return len(self.edges) == self.n * (self.n - 1) // 2

    def to_json(self) -> list[list[int]]:
        return [list(e) for e in sorted(self.edges)]


def all_graphs(n: int) -> Iterator[SimpleGraph]:
    """Every simple graph on [n] (2^C(n,2) of them), in a fixed order."""
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    for mask in range(1 << len(pairs)):
        yield SimpleGraph(n, frozenset(p for b, p in enumerate(pairs) if mask >> b & 1))


def repeat_pairs(values: Sequence[int]) -> Iterator[tuple[int, int]]:
    """Yield (i, j), 1-based, with j the first index after i where the value recurs."""
    last = {}
    for idx in range(len(values), 0, -1):
        v = values[idx - 1]
        if v in last:
            yield idx, last[v]
        last[v] = idx


def graph_violation(values: Sequence[int], graph: SimpleGraph) -> tuple[int, int] | None:
    if len(values) != graph.n:
        raise ShiError("sequence of length %d against a graph on [%d]"
                       % (len(values), graph.n))
    for i, j in sorted(repeat_pairs(values)):
        if not graph.has_edge(i, j):
            return i, j
    return None


def satisfies_graph_condition(values: Sequence[int], graph: SimpleGraph) -> bool:
    return graph_violation(values, graph) is None


def check_graph_condition(values: Sequence[int], graph: SimpleGraph) -> None:
    pair = graph_violation(values, graph)
    if pair is not None:
        raise GraphConditionError(pair)
