"""Closed-form region and face counts, with the checks that back them."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb, factorial, prod

from .errors import ShiError
from .pfcore import SimpleGraph


def count_shi(n: int, k: int = 1) -> int:
    """(kn+1)^(n-1): regions of the k-extended Shi arrangement, k-parking functions."""
    if n < 1 or k < 1:
        raise ShiError("need n >= 1 and k >= 1")
    return (k * n + 1) ** (n - 1)


def product_hypothesis(graph: SimpleGraph) -> tuple[int, int, int] | None:
    """First triple i < j < l with ij an edge but il not, or None."""
    n = graph.n
    for i, j, l in itertools.combinations(range(1, n + 1), 3):
        if graph.has_edge(i, j) and not graph.has_edge(i, l):
            return i, j, l
    return None


def non_neighbours_below(graph: SimpleGraph, j: int) -> int:
    return sum(1 for i in range(1, j) if not graph.has_edge(i, j))


def count_graphical_product(graph: SimpleGraph) -> int:
    """prod_{1<j<=n} (n - d_j + 1), where d_j counts non-edges ij with i < j.

    Only valid when ij in G and i < j < l force il in G; otherwise raises.
    """
    bad = product_hypothesis(graph)
    if bad is not None:
        raise ShiError("graph fails the product hypothesis at %d<%d<%d" % bad)
    n = graph.n
    return prod(n - non_neighbours_below(graph, j) + 1 for j in range(2, n + 1))


def count_path(n: int) -> int:
    """Regions of the graphical Shi arrangement of the path 12, 23, ..., (n-1)n."""
    if n < 1:
        raise ShiError("need n >= 1")
    return sum(factorial(n) // factorial(k) * comb(n - 1, k - 1) for k in range(1, n + 1))


@dataclass(frozen=True)
class FamilyParams:
    n: int
    m: int
    k: int

    def __post_init__(self):
        if self.n < 2 or self.m < 0 or not 2 <= self.k <= self.n + 1:
            raise ShiError("family parameters need n >= 2, m >= 0, 2 <= k <= n+1; got %s"
                           % (self,))


def count_family(n: int, m: int, k: int) -> int:
    """(n+m)^(k-2) (n+m+1)^(n-k+1)."""
    p = FamilyParams(n, m, k)
    return (p.n + p.m) ** (p.k - 2) * (p.n + p.m + 1) ** (p.n - p.k + 1)


def family_recursion_failures(n_max: int, m_max: int) -> list[tuple]:
    """Triples where the count-level deletion/restriction identity breaks.

    For 2 <= k <= n: r(n,m,k) = r(n,m,k+1) + r(n-1,m+1,k); deleting
    x_1 - x_k = m+1 gives the first term, restricting to it the second.
    At k = n+1 the family coincides with (n, m-1, 2) when m >= 1, and with
    n choices of x_1 over a region of S_{n-1} when m = 0.
    """
    if n_max < 2 or m_max < 2:
        raise ShiError("bounds must be at least 2")
    bad = []
    for n in range(2, n_max + 1):
        for m in range(0, m_max + 1):
            for k in range(2, n + 1):
                if n >= 3:
                    rhs = count_family(n, m, k + 1) + count_family(n - 1, m + 1, k)
                    if count_family(n, m, k) != rhs:
                        bad.append((n, m, k))
            top = count_family(n, m, n + 1)
            if m >= 1 and top != count_family(n, m - 1, 2):
                bad.append((n, m, n + 1))
            if m == 0 and top != n * count_shi(n - 1):
                bad.append((n, 0, n + 1))
    return bad


def family_recursion_check(n_max: int, m_max: int) -> bool:
    return not family_recursion_failures(n_max, m_max)


def surjective_prefix_count(n: int, k: int) -> int:
    """#{f : [n-1] -> [n+1] with [n-k] inside the image}, by inclusion-exclusion."""
    need = n - k
    return sum((-1) ** i * comb(need, i) * (n + 1 - i) ** (n - 1) for i in range(need + 1))


def surjective_prefix_brute(n: int, k: int) -> int:
    """Same cardinality by listing every map."""
    need = set(range(1, n - k + 1))
    return sum(1 for f in itertools.product(range(1, n + 2), repeat=n - 1)
               if need <= set(f))


def count_faces_formula(n: int, k: int, brute: bool = False) -> int:
    """Number of k-dimensional faces of the Shi arrangement S_n."""
    if not 1 <= k <= n:
        raise ShiError("face dimension %d outside 1..%d" % (k, n))
    inner = surjective_prefix_brute(n, k) if brute else surjective_prefix_count(n, k)
    return comb(n, k) * inner
