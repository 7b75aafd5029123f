"""Arc diagrams: words with rightward, containment-free arcs, and their chains.

Containment is judged on closed position spans.  Span [p, q] contains
[p2, q2] when p <= p2 and q2 <= q and the spans differ, so arcs sharing an
endpoint on the same side nest.  Arcs that only meet end-to-start (q == p2)
do not.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ShiError

Span = tuple[int, int]


def contains(outer: Span, inner: Span) -> bool:
    return outer != inner and outer[0] <= inner[0] and inner[1] <= outer[1]


def containment_free(spans: Iterable[Span]) -> bool:
    spans = list(spans)
    return not any(contains(a, b) for a in spans for b in spans)


def prune_spans(spans: Iterable[Span], rng: random.Random | None = None) -> frozenset:
    """Drop every span that contains another span.

    Without ``rng`` all containing spans go at once.  With ``rng`` they are
    removed one at a time in random order; containment is transitive so the
    outcome is the same.
    """
    spans = set(spans)
    if rng is None:
        return frozenset(a for a in spans if not any(contains(a, b) for b in spans))
    while True:
        fat = sorted(a for a in spans if any(contains(a, b) for b in spans))
        if not fat:
            return frozenset(spans)
        spans.remove(rng.choice(fat))


def _chains_from_spans(length: int, spans: Iterable[Span]) -> list[list[int]]:
    """Arc-connected position paths, ordered by their leftmost position."""
    nxt = {}
    has_in = set()
    for p, q in spans:
        if p in nxt or q in has_in:
            raise ShiError("position with two outgoing or two incoming arcs")
        nxt[p] = q
        has_in.add(q)
    chains = []
    for start in range(1, length + 1):
        if start in has_in:
            continue
        chain = [start]
        while chain[-1] in nxt:
            chain.append(nxt[chain[-1]])
        chains.append(chain)
    return chains


def render_ascii(word: Sequence[int], spans: Iterable[Span]) -> str:
    """Word on the first line, each arc as ``+---+`` on rows underneath."""
    step = max(len(str(w)) for w in word) + 1
    width = step * len(word)
    lines = [" ".join(str(w).rjust(step - 1) for w in word)]

    def col(p):
        return step * (p - 1) + step - 2

    rows: list[list[Span]] = []
    for p, q in sorted(spans, key=lambda s: (s[1] - s[0], s)):
        for row in rows:
            if all(q < a or p > b for a, b in row):
                row.append((p, q))
                break
        else:
            rows.append([(p, q)])
    for row in rows:
        cells = [" "] * width
        for p, q in row:
            a, b = col(p), col(q)
            for c in range(a + 1, b):
                cells[c] = "-"
            cells[a] = cells[b] = "+"
        lines.append("".join(cells).rstrip())
    return "\n".join(lines)


@dataclass(frozen=True)
class ChainPartition:
    blocks: tuple[tuple[int, ...], ...]

    def __str__(self):
        return "/".join("".join(str(v) for v in b) for b in self.blocks)

    def as_set(self) -> frozenset:
        return frozenset(self.blocks)


@dataclass(frozen=True)
class Diagram:
    """A permutation of [n] with arcs ``(i, j)`` between values, i < j."""

    word: tuple[int, ...]
    arcs: frozenset = frozenset()

    def __post_init__(self):
        word = tuple(int(w) for w in self.word)
        if sorted(word) != list(range(1, len(word) + 1)):
            raise ShiError("word %s is not a permutation" % (list(word),))
        object.__setattr__(self, "word", word)
        object.__setattr__(self, "arcs", frozenset((int(i), int(j)) for i, j in self.arcs))

    @property
    def n(self) -> int:
        return len(self.word)

    @property
    def k(self) -> int:
        return 1

    def position(self, value: int) -> int:
        return self.word.index(value) + 1

    def spans(self) -> frozenset:
        pos = {v: p for p, v in enumerate(self.word, 1)}
        return frozenset((pos[i], pos[j]) for i, j in self.arcs)

    def is_valid(self) -> bool:
        pos = {v: p for p, v in enumerate(self.word, 1)}
        for i, j in self.arcs:
            if i not in pos or j not in pos or not i < j or not pos[i] < pos[j]:
                return False
        spans = self.spans()
        if not containment_free(spans):
            return False
        try:
            _chains_from_spans(self.n, spans)
        except ShiError:
            return False
        return True

    def chain_positions(self) -> list[list[int]]:
        return _chains_from_spans(self.n, self.spans())

    @classmethod
    def from_chains(cls, word: Sequence[int], blocks: Iterable[Sequence[int]]) -> Diagram:
        arcs = {(b[t], b[t + 1]) for b in blocks for t in range(len(b) - 1)}
        return cls(tuple(word), frozenset(arcs))

    @classmethod
    def from_spans(cls, word: Sequence[int], spans: Iterable[Span]) -> Diagram:
        word = tuple(word)
        return cls(word, frozenset((word[p - 1], word[q - 1]) for p, q in spans))

    def to_json(self) -> dict:
        return {"word": list(self.word), "arcs": [list(s) for s in sorted(self.spans())]}

    def render(self) -> str:
        return render_ascii(self.word, self.spans())


@dataclass(frozen=True)
class KDiagram:
    """A word over [n] using each value k times, with arcs between positions."""

    word: tuple[int, ...]
    k: int
    arcs: frozenset = frozenset()

    def __post_init__(self):
        word = tuple(int(w) for w in self.word)
        if self.k < 1 or not word or len(word) % self.k:
            raise ShiError("word length %d is not a multiple of k=%d" % (len(word), self.k))
        n = len(word) // self.k
        if Counter(word) != Counter({v: self.k for v in range(1, n + 1)}):
            raise ShiError("word %s does not use each of 1..%d exactly %d times"
                           % (list(word), n, self.k))
        object.__setattr__(self, "word", word)
        object.__setattr__(self, "arcs", frozenset((int(p), int(q)) for p, q in self.arcs))

    @property
    def n(self) -> int:
        return len(self.word) // self.k

    def spans(self) -> frozenset:
        return self.arcs

    def is_valid(self) -> bool:
        size = len(self.word)
        for p, q in self.arcs:
            if not 1 <= p < q <= size or self.word[p - 1] > self.word[q - 1]:
                return False
        if not containment_free(self.arcs):
            return False
        try:
            chains = _chains_from_spans(size, self.arcs)
        except ShiError:
            return False
        home = {}
        for c, chain in enumerate(chains):
            for p in chain:
                if home.setdefault(self.word[p - 1], c) != c:
                    return False
        return True

    def chain_positions(self) -> list[list[int]]:
        return _chains_from_spans(len(self.word), self.arcs)

    @classmethod
    def from_diagram(cls, d: Diagram) -> KDiagram:
        return cls(d.word, 1, d.spans())

    def to_diagram(self) -> Diagram:
        if self.k != 1:
            raise ShiError("only k = 1 diagrams convert to plain diagrams")
        return Diagram.from_spans(self.word, self.arcs)

    def to_json(self) -> dict:
        return {"word": list(self.word), "k": self.k,
                "arcs": [list(s) for s in sorted(self.arcs)]}

    def render(self) -> str:
        return render_ascii(self.word, self.arcs)


def diagram_from_json(data: dict) -> Diagram | KDiagram:
    """Parse ``{"word": [...], "arcs": [[p, q], ...]}``; arcs are 1-based positions.

    A ``k`` key, or a word with repeated letters, selects :class:`KDiagram`.
    """
    try:
        word = [int(w) for w in data["word"]]
        spans = [(int(p), int(q)) for p, q in data.get("arcs", [])]
    except (KeyError, TypeError, ValueError) as exc:
        raise ShiError("malformed diagram JSON: %s" % exc) from None
    for p, q in spans:
        if not 1 <= p <= len(word) or not 1 <= q <= len(word):
            raise ShiError("arc [%d, %d] outside the word" % (p, q))
    k = data.get("k")
    if k is None:
        k = len(word) // max(word) if word else 1
    if k == 1:
        return Diagram.from_spans(word, spans)
    return KDiagram(tuple(word), int(k), frozenset(spans))


def validate_diagram(d: Diagram | KDiagram) -> bool:
    """True iff the arcs are rightward, increasing and containment-free.

    A malformed word is rejected when the diagram is constructed.
    """
    return d.is_valid()


def chain_partition(d: Diagram | KDiagram) -> ChainPartition:
    """Arc-connected components as value blocks, ordered by leftmost position."""
    return ChainPartition(tuple(tuple(d.word[p - 1] for p in chain)
                                for chain in d.chain_positions()))


def prune_containments(word: Sequence[int], raw_arcs: Iterable[tuple[int, int]],
                       rng: random.Random | None = None) -> Diagram:
    """Diagram on ``word`` keeping only the raw value arcs that contain no other arc."""
    pos = {v: p for p, v in enumerate(word, 1)}
    spans = set()
    for i, j in raw_arcs:
        if pos[i] >= pos[j]:
            raise ShiError("arc (%d, %d) does not go rightwards" % (i, j))
        spans.add((pos[i], pos[j]))
    return Diagram.from_spans(word, prune_spans(spans, rng))
