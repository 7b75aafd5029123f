"""Command-line interface.

Subcommands: regions, faces, map, count, chi, verify.  Streams are JSON
Lines.  Exit codes: 0 ok, 1 verification failure, 2 usage, 3 internal
invariant failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import arrangement as arr
from . import counting, verify
from .bijection import sigma, sigma_inverse, sigma_k, sigma_k_inverse
from .diagram import chain_partition, diagram_from_json, Diagram
from .errors import InvariantError, ShiError
from .finite_field import (admissible_primes, characteristic_polynomial,
                           count_points_offplanes, evaluate, format_polynomial)
from .pfcore import SimpleGraph, all_graphs, coset_vectors, satisfies_graph_condition

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _parse_json(text: str, what: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ShiError("could not parse %s: %s" % (what, exc)) from None


def _add_arrangement_flags(p: argparse.ArgumentParser, required: bool = True):
    g = p.add_mutually_exclusive_group(required=required)
    for kind in arr.KINDS:
        g.add_argument("--" + kind, type=int, nargs="?", const=0, metavar="N",
                       help="%s arrangement in dimension N (or --n)" % kind)
    p.add_argument("--n", type=int, help="dimension, if not given after the kind flag")
    p.add_argument("--k", type=int, help="k for --extended and --family")
    p.add_argument("--m", type=int, help="m for --family")
    p.add_argument("--graph", help="edge list for --graphical, e.g. '[[1,2],[2,3]]'")


def _graph(args, n: int) -> SimpleGraph:
    if args.graph is None:
        raise ShiError("--graphical needs --graph")
    data = _parse_json(args.graph, "--graph")
    try:
        return SimpleGraph.from_json(n, data)
    except (TypeError, ValueError) as exc:
        raise ShiError("bad --graph: %s" % exc) from None


def _arrangement(args) -> arr.Arrangement | None:
    for kind in arr.KINDS:
        given = getattr(args, kind, None)
        if given is None:
            continue
        n = given or args.n
        if not n:
            raise ShiError("--%s needs a dimension" % kind)
        if kind == "graphical":
            return arr.build(kind, n, graph=_graph(args, n))
        if kind == "extended":
            return arr.build(kind, n, k=args.k if args.k is not None else 1)
        if kind == "family":
            return arr.build(kind, n, m=args.m if args.m is not None else 0,
                             k=args.k if args.k is not None else 2)
        return arr.build(kind, n)
    return None


def _has_diagrams(a: arr.Arrangement) -> bool:
    return a.kind in ("braid", "shi", "graphical", "extended")


def cmd_regions(args, out) -> int:
    a = _arrangement(args)
    for r in arr.enumerate_regions(a):
        rec = r.to_json()
        d = None
        if _has_diagrams(a):
            d = arr.region_to_diagram(r, a)
            f = sigma(d) if isinstance(d, Diagram) else sigma_k(d)
            rec["diagram"] = d.to_json()
            rec["parking_function"] = f.to_json()
        if args.format == "ascii":
            print(rec["signs"], " ".join(rec["witness"]), file=out)
            if d is not None:
                print("f = %s   chains %s" % (rec["parking_function"], chain_partition(d)),
                      file=out)
                print(d.render(), file=out)
            print(file=out)
        else:
            print(_dump(rec), file=out)
    return EXIT_OK


def cmd_faces(args, out) -> int:
    a = _arrangement(args)
    faces = arr.enumerate_faces(a)
    if args.format == "ascii":
        counts = {d: 0 for d in range(1, a.n + 1)}
        for face in faces:
            counts[face.dim] = counts.get(face.dim, 0) + 1
        for d in sorted(counts):
            print("f_%d = %d" % (d, counts[d]), file=out)
        return EXIT_OK
    for face in faces:
        print(_dump(face.to_json()), file=out)
    return EXIT_OK


def cmd_map(args, out) -> int:
    if args.to_region is not None:
        values = _parse_json(args.to_region, "parking function")
        if not isinstance(values, list) or not all(isinstance(v, int) for v in values):
            raise ShiError("expected a JSON array of integers")
        k = args.k or 1
        if k == 1:
            graph = SimpleGraph.from_json(len(values), _parse_json(args.graph, "--graph")) \
                if args.graph else None
            d = sigma_inverse(values, graph)
        else:
            d = sigma_k_inverse(values, k)
        rec = {"parking_function": values, "diagram": d.to_json(),
               "chains": str(chain_partition(d))}
    else:
        data = _parse_json(args.to_pf, "diagram")
        if not isinstance(data, dict):
            raise ShiError("expected a diagram object {word, arcs}")
        if args.k and "k" not in data:
            data = dict(data, k=args.k)
        d = diagram_from_json(data)
        if not d.is_valid():
            raise ShiError("diagram arcs are not rightward, increasing and containment-free")
        f = sigma(d) if isinstance(d, Diagram) else sigma_k(d)
        rec = {"parking_function": f.to_json(), "diagram": d.to_json(),
               "chains": str(chain_partition(d))}
    print(_dump(rec), file=out)
    if args.render == "ascii" or args.format == "ascii":
        print(d.render(), file=out)
    return EXIT_OK


def cmd_count(args, out) -> int:
    a = _arrangement(args)
    n = a.n
    rec = {"kind": a.kind, "n": n}
    if a.kind == "shi":
        rec["formula"] = counting.count_shi(n)
        if args.faces:
            rec["faces"] = [counting.count_faces_formula(n, k) for k in range(1, n + 1)]
    elif a.kind == "braid":
        rec["formula"] = counting.count_graphical_product(SimpleGraph.empty(n))
    elif a.kind == "extended":
        rec["k"] = a.k
        rec["formula"] = counting.count_shi(n, a.k)
    elif a.kind == "family":
        m = args.m if args.m is not None else 0
        k = args.k if args.k is not None else 2
        rec.update(m=m, k=k, formula=counting.count_family(n, m, k))
    elif a.kind == "graphical":
        g = a.graph
        rec["graph"] = g.to_json()
        if g == SimpleGraph.path(n):
            rec["path_formula"] = counting.count_path(n)
        if counting.product_hypothesis(g) is None:
            rec["product_formula"] = counting.count_graphical_product(g)
        rec["cosets"] = sum(1 for v in coset_vectors(n)
                            if satisfies_graph_condition(v.entries, g))
    if args.oracle:
        rec["oracle"] = len(arr.enumerate_regions(a))
    print(_dump(rec), file=out)
    return EXIT_OK


def cmd_chi(args, out) -> int:
    a = _arrangement(args)
    if args.q is not None:
        rec = {"q": args.q, "count": count_points_offplanes(a, args.q)}
    else:
        coeffs = characteristic_polynomial(a)
        rec = {"chi": coeffs, "polynomial": format_polynomial(coeffs),
               "primes": admissible_primes(a, a.n + 2),
               "regions": (-1) ** a.n * int(evaluate(coeffs, -1))}
    print(_dump(rec), file=out)
    return EXIT_OK


def _verify_results(args) -> list[verify.SuiteResult]:
    suite = args.suite
    n = args.n
    if suite == "all":
        return verify.default_suites(n or 4)
    if suite == "chi":
        a = _arrangement(args) or arr.shi(n or 3)
        return [verify.chi(a, primes=args.primes)]
    if n is None:
        raise ShiError("verify %s needs --n" % suite)
    if suite == "bijection":
        graph = _graph(args, n) if args.graph else None
        if args.k and args.k > 1:
            return [verify.k_bijection(n, args.k)]
        return [verify.bijection(n, graph)]
    if suite == "cosets":
        if args.all_graphs or not args.graph:
            return [verify.cosets(n)]
        return [verify.cosets(n, [_graph(args, n)])]
    if suite == "product":
        return [verify.product(n)]
    if suite == "path":
        return [verify.path(n)]
    if suite == "family":
        return [verify.family(n, args.m if args.m is not None else 2)]
    if suite == "faces":
        return [verify.faces(n)]
    if suite == "pollack":
        return [verify.pollack(n, args.k or 1)]
    raise ShiError("unknown suite %r" % suite)


def cmd_verify(args, out) -> int:
    results = _verify_results(args)
    width = max(len(r.name) for r in results)
    for r in results:
        print("%-4s  %-*s  %s" % ("PASS" if r.passed else "FAIL", width, r.name, r.summary),
              file=out)
    passed = all(r.passed for r in results)
    report = {"passed": passed, "results": [r.to_json() for r in results]}
    first = next((r for r in results if not r.passed), None)
    if first is not None:
        report["counterexample"] = first.counterexample
    print(_dump(report), file=out)
    return EXIT_OK if passed else EXIT_FAIL


SUITES = ("all", "bijection", "cosets", "product", "path", "family", "chi", "faces", "pollack")


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="shiregions",
        description="Regions of Shi-type arrangements and their parking functions.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("regions", help="enumerate regions as JSON lines")
    _add_arrangement_flags(p)
    p.add_argument("--format", choices=("json", "ascii"), default="json")
    p.set_defaults(func=cmd_regions)

    p = sub.add_parser("faces", help="enumerate faces; --format ascii prints the f-vector")
    _add_arrangement_flags(p)
    p.add_argument("--format", choices=("json", "ascii"), default="json")
    p.set_defaults(func=cmd_faces)

    p = sub.add_parser("map", help="convert between parking functions and diagrams")
    way = p.add_mutually_exclusive_group(required=True)
    way.add_argument("--to-region", metavar="JSON", help="parking function as a JSON array")
    way.add_argument("--to-pf", metavar="JSON", help="diagram as {word, arcs}")
    p.add_argument("--k", type=int, help="use k-parking functions and k-diagrams")
    p.add_argument("--graph", help="graph whose condition the parking function must pass")
    p.add_argument("--render", choices=("ascii",), help="also draw the diagram")
    p.add_argument("--format", choices=("json", "ascii"), default="json")
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("count", help="closed-form region counts")
    _add_arrangement_flags(p)
    p.add_argument("--oracle", action="store_true", help="also enumerate regions")
    p.add_argument("--faces", action="store_true", help="face counts (Shi only)")
    p.add_argument("--format", choices=("json",), default="json")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("chi", help="characteristic polynomial by finite-field counting")
    _add_arrangement_flags(p)
    p.add_argument("--q", type=int, help="count points at this prime only")
    p.add_argument("--format", choices=("json",), default="json")
    p.set_defaults(func=cmd_chi)

    p = sub.add_parser("verify", help="run cross-validation suites")
    p.add_argument("suite", choices=SUITES)
    _add_arrangement_flags(p, required=False)
    p.add_argument("--all-graphs", action="store_true")
    p.add_argument("--primes", type=int, default=4, help="primes checked by the chi suite")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = make_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except InvariantError as exc:
        print("internal error: %s" % exc, file=sys.stderr)
        return EXIT_INTERNAL
    except ShiError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
