"""Characteristic polynomials by counting points of (Z_q)^n off the hyperplanes."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

import numpy as np

from .arrangement import Arrangement
from .errors import InvariantError, ShiError


def is_prime(q: int) -> bool:
    if q < 2:
        return False
    f = 2
    while f * f <= q:
        if q % f == 0:
            return False
        f += 1
    return True


def prime_bound(a: Arrangement) -> int:
    """Primes must exceed this for the point count to equal chi(a, q)."""
    return 2 * a.max_offset() * a.n


def admissible_primes(a: Arrangement, count: int) -> list[int]:
    out = []
    q = prime_bound(a) + 1
    while len(out) < count:
        if is_prime(q):
            out.append(q)
        q += 1
    return out


def count_points_offplanes(a: Arrangement, q: int) -> int:
    """#{x in (Z_q)^n : x_i - x_j != c mod q for every hyperplane}.

    Every hyperplane is invariant under x -> x + t(1, ..., 1), so we fix
    x_n = 0 and multiply by q.
    """
    if not is_prime(q):
        raise ShiError("%d is not prime" % q)
    if q <= prime_bound(a):
        raise ShiError("prime %d is not above the bound %d" % (q, prime_bound(a)))
    n = a.n
    grids = np.meshgrid(*([np.arange(q, dtype=np.int64)] * (n - 1)), indexing="ij")
    x = [g.ravel() for g in grids] + [np.zeros(q ** (n - 1), dtype=np.int64)]
    ok = np.ones(q ** (n - 1), dtype=bool)
    for h in a.hyperplanes:
        ok &= (x[h.i - 1] - x[h.j - 1] - h.c) % q != 0
    return q * int(ok.sum())


def interpolate(points: Sequence[tuple[int, int]]) -> list[Fraction]:
    """Coefficients (constant term first) of the polynomial through ``points``."""
    size = len(points)
    coeffs = [Fraction(0)] * size
    for a, (xa, ya) in enumerate(points):
        basis = [Fraction(1)]
        denom = 1
        for b, (xb, _) in enumerate(points):
            if b == a:
                continue
            # multiply basis by (t - xb)
            basis = [Fraction(0)] + basis
            for t in range(len(basis) - 1):
                basis[t] -= xb * basis[t + 1]
            denom *= xa - xb
        for t in range(size):
            coeffs[t] += Fraction(ya, denom) * basis[t]
    return coeffs


def evaluate(coeffs: Sequence, t) -> Fraction:
    total = Fraction(0)
    for c in reversed(coeffs):
        total = total * t + c
    return total


def characteristic_polynomial(a: Arrangement) -> list[int]:
    """chi(a, q) as integer coefficients, constant term first.

    Interpolates through n+1 admissible primes and checks the result at one
    more prime.
    """
    primes = admissible_primes(a, a.n + 2)
    pts = [(q, count_points_offplanes(a, q)) for q in primes[:-1]]
    coeffs = interpolate(pts)
    check = primes[-1]
    if evaluate(coeffs, check) != count_points_offplanes(a, check):
        raise InvariantError("point counts at %s are not one polynomial; prime bound too small"
                             % primes)
    if any(c.denominator != 1 for c in coeffs):
        raise InvariantError("non-integral characteristic polynomial %s" % coeffs)
    return [int(c) for c in coeffs]


def regions_via_zaslavsky(a: Arrangement) -> int:
    """Number of regions as (-1)^n chi(a, -1)."""
    return (-1) ** a.n * int(evaluate(characteristic_polynomial(a), -1))


def format_polynomial(coeffs: Sequence[int], var: str = "q") -> str:
    terms = []
    for d in range(len(coeffs) - 1, -1, -1):
        c = coeffs[d]
        if c == 0:
            continue
        mag = abs(c)
        body = var if d == 1 else "%s^%d" % (var, d) if d else ""
        text = body if mag == 1 and d else "%d%s" % (mag, body)
        terms.append(("-" if c < 0 else "+", text))
    if not terms:
        return "0"
    head = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    return head + "".join(" %s %s" % t for t in terms[1:])
