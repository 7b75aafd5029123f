"""Cross-checks between the bijections, the counting formulas and the oracle.

Each suite returns a :class:`SuiteResult`; the first counterexample found is
kept in ``counterexample`` as plain JSON data.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from . import arrangement as arr
from .bijection import sigma, sigma_inverse, sigma_k, sigma_k_inverse
from .counting import (count_faces_formula, count_family, count_graphical_product,
                       count_path, count_shi, family_recursion_failures, product_hypothesis)
from .finite_field import admissible_primes, characteristic_polynomial, count_points_offplanes
from .finite_field import evaluate, regions_via_zaslavsky
from .pfcore import (SimpleGraph, all_graphs, coset_representative, coset_vectors,
                     enumerate_k_parking, satisfies_graph_condition)


@dataclass
class SuiteResult:
    name: str
    passed: bool
    summary: str
    data: dict = field(default_factory=dict)
    counterexample: object = None

    def to_json(self) -> dict:
        out = {"suite": self.name, "passed": self.passed, "summary": self.summary}
        out.update(self.data)
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out


def _fail(name, summary, example):
    return SuiteResult(name, False, summary, {}, example)


def bijection(n: int, graph: SimpleGraph | None = None) -> SuiteResult:
    """sigma is a bijection from regions to (graph-compatible) parking functions."""
    name = "bijection"
    a = arr.shi(n) if graph is None else arr.graphical(n, graph)
    regions = arr.enumerate_regions(a)
    seen = {}
    for r in regions:
        d = arr.region_to_diagram(r, a)
        f = sigma(d).values
        if f in seen:
            return _fail(name, "two regions share parking function %s" % (list(f),),
                         {"parking_function": list(f), "signs": [seen[f], r.signs]})
        seen[f] = r.signs
        back = sigma_inverse(f, graph)
        if back != d:
            return _fail(name, "sigma_inverse does not return the region's diagram",
                         {"parking_function": list(f), "diagram": d.to_json(),
                          "got": back.to_json()})
    expected = {f.values for f in enumerate_k_parking(n)
                if graph is None or satisfies_graph_condition(f.values, graph)}
    if set(seen) != expected:
        missing = sorted(expected - set(seen))
        return _fail(name, "image differs from the parking functions",
                     {"missing": [list(f) for f in missing[:1]]})
    return SuiteResult(name, True, "%d regions round-tripped" % len(regions),
                       {"n": n, "regions": len(regions)})


def k_bijection(n: int, k: int) -> SuiteResult:
    name = "k-bijection"
    a = arr.extended(n, k)
    regions = arr.enumerate_regions(a)
    images = set()
    for r in regions:
        d = arr.region_to_diagram(r, a)
        f = sigma_k(d).values
        if f in images or sigma_k_inverse(f, k) != d:
            return _fail(name, "k-diagram round trip failed", {"parking_function": list(f),
                                                               "diagram": d.to_json()})
        images.add(f)
    missing = {f.values for f in enumerate_k_parking(n, k)} - images
    if missing or len(images) != len(regions):
        return _fail(name, "image differs from the k-parking functions",
                     {"missing": [list(f) for f in sorted(missing)[:1]]})
    return SuiteResult(name, True, "%d regions of S_%d^%d round-tripped" % (len(regions), n, k),
                       {"n": n, "k": k, "regions": len(regions)})


def cosets(n: int, graphs: Iterable[SimpleGraph] | None = None) -> SuiteResult:
    """Region count of S_{n,G} equals the number of cosets passing the graph condition."""
    name = "cosets"
    graphs = list(all_graphs(n) if graphs is None else graphs)
    vectors = [v.entries for v in coset_vectors(n)]
    for g in graphs:
        regions = len(arr.enumerate_regions(arr.graphical(n, g)))
        good = sum(1 for v in vectors if satisfies_graph_condition(v, g))
        if regions != good:
            return _fail(name, "region and coset counts differ",
                         {"graph": g.to_json(), "regions": regions, "cosets": good})
    return SuiteResult(name, True, "%d graphs on [%d] agree" % (len(graphs), n),
                       {"n": n, "graphs": len(graphs)})


def product(n: int) -> SuiteResult:
    name = "product"
    checked = 0
    for g in all_graphs(n):
        if product_hypothesis(g) is not None:
            continue
        checked += 1
        formula = count_graphical_product(g)
        regions = len(arr.enumerate_regions(arr.graphical(n, g)))
        if formula != regions:
            return _fail(name, "product formula disagrees with the oracle",
                         {"graph": g.to_json(), "formula": formula, "regions": regions})
    return SuiteResult(name, True, "%d qualifying graphs on [%d]" % (checked, n),
                       {"n": n, "graphs": checked})


def path(n: int) -> SuiteResult:
    formula = count_path(n)
    regions = len(arr.enumerate_regions(arr.graphical(n, SimpleGraph.path(n))))
    data = {"n": n, "formula": formula, "regions": regions}
    summary = "path on [%d]: formula %d, oracle %d" % (n, formula, regions)
    if formula != regions:
        return _fail("path", summary, data)
    return SuiteResult("path", True, summary, data)


def family(n_max: int, m_max: int, algebra_n: int = 6, algebra_m: int = 4) -> SuiteResult:
    name = "family"
    for n in range(2, n_max + 1):
        for m in range(m_max + 1):
            for k in range(2, n + 2):
                regions = len(arr.enumerate_regions(arr.family(n, m, k)))
                if regions != count_family(n, m, k):
                    return _fail(name, "closed form disagrees with the oracle",
                                 {"n": n, "m": m, "k": k, "regions": regions,
                                  "formula": count_family(n, m, k)})
    bad = family_recursion_failures(algebra_n, algebra_m)
    if bad:
        return _fail(name, "deletion/restriction identity fails", {"triple": list(bad[0])})
    return SuiteResult(name, True, "oracle n<=%d m<=%d, identity n<=%d m<=%d"
                       % (n_max, m_max, algebra_n, algebra_m))


def chi(a: arr.Arrangement, primes: int = 4) -> SuiteResult:
    """Finite-field counts against q(q-kn)^(n-1) where known, and Zaslavsky vs oracle."""
    name = "chi"
    n = a.n
    data = {"n": n}
    if a.kind in ("shi", "extended", "braid"):
        for q in admissible_primes(a, primes):
            got = count_points_offplanes(a, q)
            if a.kind == "braid":
                want = 1
                for t in range(n):
                    want *= q - t
            else:
                want = q * (q - a.k * n) ** (n - 1)
            if got != want:
                return _fail(name, "point count differs from the closed form",
                             {"q": q, "count": got, "expected": want})
    coeffs = characteristic_polynomial(a)
    via_chi = (-1) ** n * int(evaluate(coeffs, -1))
    regions = len(arr.enumerate_regions(a))
    data.update(chi=coeffs, zaslavsky=via_chi, regions=regions)
    if via_chi != regions:
        return _fail(name, "Zaslavsky count differs from the oracle", data)
    return SuiteResult(name, True, "chi checked, %d regions via Zaslavsky" % regions, data)


def faces(n: int) -> SuiteResult:
    name = "faces"
    fv = arr.f_vector(arr.shi(n))
    formula = {k: count_faces_formula(n, k) for k in range(1, n + 1)}
    euler = sum((-1) ** k * c for k, c in fv.items())
    data = {"n": n, "f_vector": [fv[k] for k in range(1, n + 1)],
            "formula": [formula[k] for k in range(1, n + 1)], "euler": euler}
    if fv[0] != 0:
        return _fail(name, "vertex found", data)
    if any(fv[k] != formula[k] for k in formula):
        return _fail(name, "face counts differ from the formula", data)
    if euler != (-1) ** n:
        return _fail(name, "Euler relation fails", data)
    return SuiteResult(name, True, "f-vector %s" % data["f_vector"], data)


def pollack(n: int, k: int = 1) -> SuiteResult:
    """Every coset of Z_{kn+1}^n modulo (1,...,1) holds exactly one k-parking function."""
    name = "pollack"
    reps = set()
    for v in coset_vectors(n, k):
        reps.add(coset_representative(v).values)
    total = len(enumerate_k_parking(n, k))
    ok = len(reps) == total == count_shi(n, k)
    return SuiteResult(name, ok, "%d cosets, %d k-parking functions" % (len(reps), total),
                       {"n": n, "k": k, "cosets": len(reps)})


def default_suites(n: int = 4) -> list[SuiteResult]:
    out = [bijection(m) for m in range(2, n + 1)]
    out += [k_bijection(2, 2), k_bijection(3, 2)]
    out += [cosets(m) for m in range(3, n + 1)]
    out += [product(m) for m in range(2, n + 1)]
    out += [path(m) for m in range(2, n + 1)]
    out.append(family(min(n, 4), 2))
    out += [chi(arr.shi(m)) for m in range(2, n + 1)]
    out += [faces(2), faces(3)]
    out += [pollack(m) for m in range(1, 6)] + [pollack(2, 2), pollack(3, 2)]
    return out
