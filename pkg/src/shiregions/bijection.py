"""The maps from arc diagrams to (k-)parking functions and their inverses.

The forward maps send every element of a chain to the position of the
chain's leftmost element.  The inverses rebuild the diagram chain by chain
in increasing order of value: the chain with value j gets its leftmost
element at position j, and its remaining elements go to the right wherever
no arc ends up containing another.  That placement is found by exhaustive
search and must be unique.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from typing import Sequence

from .diagram import Diagram, KDiagram, containment_free
from .errors import InvariantError, NotParkingError, ShiError
from .pfcore import KParkingFunction, SimpleGraph, check_graph_condition, is_k_parking


def _leftmost_positions(d: Diagram | KDiagram) -> dict[int, int]:
    if not d.is_valid():
        raise ShiError("invalid diagram: %s" % (d.to_json(),))
    out = {}
    for chain in d.chain_positions():
        for p in chain:
            out[d.word[p - 1]] = chain[0]
    return out


def sigma(d: Diagram) -> KParkingFunction:
    """Parking function sending i to the position of the head of i's chain."""
    lead = _leftmost_positions(d)
    return KParkingFunction(tuple(lead[i] for i in range(1, d.n + 1)), 1)


def sigma_k(d: KDiagram) -> KParkingFunction:
    """k-parking function sending i to the position of the head of the chain of i's."""
    lead = _leftmost_positions(d)
    return KParkingFunction(tuple(lead[i] for i in range(1, d.n + 1)), d.k)


def _spread(seq: list[int], items: Sequence[int], gaps: Sequence[int]) -> list[int]:
    """Insert ``items[t]`` just before ``seq[gaps[t]]`` (gaps nondecreasing)."""
    out = []
    t = 0
    for idx in range(len(seq) + 1):
        while t < len(items) and gaps[t] == idx:
            out.append(items[t])
            t += 1
        if idx < len(seq):
            out.append(seq[idx])
    return out


def _place_chains(chains: list[tuple[int, list[int]]]) -> tuple[list[int], list[tuple[int, int]]]:
    """Run the insertion procedure.

    ``chains`` holds (value, labels) pairs.  Returns the final word of labels
    and the arcs as 1-based position spans.
    """
    labels: list[int] = []
    seq: list[int] = []
    arcs: list[tuple[int, int]] = []
    for j, chain in sorted(chains):
        if j - 1 > len(seq):
            raise InvariantError("chain with value %d but only %d elements placed"
                                 % (j, len(seq)))
        ids = list(range(len(labels), len(labels) + len(chain)))
        labels.extend(chain)
        head = j - 1
        base = seq[:head] + [ids[0]] + seq[head:]
        new_arcs = arcs + list(zip(ids, ids[1:]))
        found = []
        for gaps in itertools.combinations_with_replacement(
                range(head + 1, len(base) + 1), len(ids) - 1):
            cand = _spread(base, ids[1:], gaps)
            where = {node: p for p, node in enumerate(cand, 1)}
            if containment_free((where[a], where[b]) for a, b in new_arcs):
                found.append(cand)
        if len(found) != 1:
            raise InvariantError("chain %s at position %d has %d containment-free placements"
                                 % (chain, j, len(found)))
        seq = found[0]
        arcs = new_arcs
    where = {node: p for p, node in enumerate(seq, 1)}
    return [labels[node] for node in seq], [(where[a], where[b]) for a, b in arcs]


def sigma_inverse(f: Sequence[int] | KParkingFunction,
                  graph: SimpleGraph | None = None) -> Diagram:
    """Diagram whose image under :func:`sigma` is the parking function ``f``.

    With a graph, ``f`` must also pass the nearest-repeat condition for it.
    """
    values = tuple(f)
    if not is_k_parking(values, 1):
        raise NotParkingError("%s is not a parking function" % (list(values),))
    if graph is not None:
        check_graph_condition(values, graph)
    blocks = defaultdict(list)
    for i, a in enumerate(values, 1):
        blocks[a].append(i)
    word, spans = _place_chains(list(blocks.items()))
    d = Diagram.from_spans(word, spans)
    if sigma(d).values != values:
        raise InvariantError("sigma does not invert on %s" % (list(values),))
    return d


def sigma_k_inverse(f: Sequence[int] | KParkingFunction, k: int | None = None) -> KDiagram:
    """KDiagram whose image under :func:`sigma_k` is the k-parking function ``f``."""
    if k is None:
        k = f.k if isinstance(f, KParkingFunction) else 1
    values = tuple(f)
    if not is_k_parking(values, k):
        raise NotParkingError("%s is not a %d-parking function" % (list(values), k))
    blocks = defaultdict(list)
    for i, a in enumerate(values, 1):
        blocks[a].extend([i] * k)
    word, spans = _place_chains(list(blocks.items()))
    d = KDiagram(tuple(word), k, frozenset(spans))
    if sigma_k(d).values != values:
        raise InvariantError("sigma_k does not invert on %s" % (list(values),))
    return d
