import pytest
from hypothesis import given, settings, strategies as st

from shiregions import arrangement as arr
from shiregions.bijection import sigma, sigma_inverse, sigma_k, sigma_k_inverse
from shiregions.diagram import Diagram, KDiagram, chain_partition
from shiregions.errors import GraphConditionError, NotParkingError, ShiError
from shiregions.pfcore import (CosetVector, SimpleGraph, all_graphs, coset_representative,
                               enumerate_k_parking, satisfies_graph_condition)

FIG2_PF = (6, 1, 6, 2, 2, 1, 2, 4, 1)
FIG2 = Diagram((2, 4, 6, 8, 5, 1, 9, 7, 3),
               frozenset({(2, 6), (6, 9), (4, 5), (5, 7), (1, 3)}))


def test_sigma_fig2():
    assert sigma(FIG2).values == FIG2_PF


def test_sigma_inverse_fig2():
    d = sigma_inverse(FIG2_PF)
    assert d == FIG2
    # the region's chain order x_2 > x_4 > x_6 > ... > x_7 > x_3
    assert d.word[:3] == (2, 4, 6) and d.word[-2:] == (7, 3)


@pytest.mark.parametrize("word,arcs,pf", [
    ((1,), (), (1,)),
    ((1, 2), ((1, 2),), (1, 1)),
    ((1, 2), (), (1, 2)),
    ((2, 1), (), (2, 1)),
])
def test_small_diagrams(word, arcs, pf):
    d = Diagram(word, frozenset(arcs))
    assert sigma(d).values == pf
    assert sigma_inverse(pf) == d


def test_s2_regions_give_the_three_small_diagrams():
    a = arr.shi(2)
    ds = {arr.region_to_diagram(r, a) for r in arr.enumerate_regions(a)}
    assert ds == {Diagram((1, 2), frozenset({(1, 2)})), Diagram((1, 2)), Diagram((2, 1))}


def test_identity_parking_function():
    assert sigma_inverse((1, 2, 3, 4)) == Diagram((1, 2, 3, 4))


def test_sigma_rejects_invalid_diagram():
    with pytest.raises(ShiError):
        sigma(Diagram((1, 2, 3), frozenset({(1, 3), (2, 3)})))


def test_sigma_inverse_errors():
    with pytest.raises(NotParkingError):
        sigma_inverse((2, 2))
    with pytest.raises(GraphConditionError):
        sigma_inverse((1, 1, 2), SimpleGraph(3, frozenset({(2, 3)})))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_round_trip_all_parking_functions(n):
    diagrams = set()
    for f in enumerate_k_parking(n):
        d = sigma_inverse(f)
        assert d.is_valid()
        assert sigma(d) == f
        diagrams.add(d)
    assert len(diagrams) == (n + 1) ** (n - 1)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 8).flatmap(
    lambda n: st.lists(st.integers(0, n), min_size=n, max_size=n)))
def test_round_trip_random_larger_parking_functions(vec):
    f = coset_representative(CosetVector(vec))
    assert sigma(sigma_inverse(f)) == f


@pytest.mark.parametrize("n", [2, 3, 4])
def test_oracle_diagrams_round_trip(shi_cache, n):
    a, regions = shi_cache(n)
    for r in regions:
        d = arr.region_to_diagram(r, a)
        assert sigma_inverse(sigma(d)) == d


@pytest.mark.parametrize("n", [2, 3, 4])
def test_graphical_images(n):
    pfs = enumerate_k_parking(n)
    for g in all_graphs(n):
        a = arr.graphical(n, g)
        ds = [arr.region_to_diagram(r, a) for r in arr.enumerate_regions(a)]
        image = [sigma(d).values for d in ds]
        assert len(set(image)) == len(image)
        assert set(image) == {f.values for f in pfs if satisfies_graph_condition(f.values, g)}
        for d in ds:
            for block in chain_partition(d).blocks:
                assert all(g.has_edge(u, v) for u, v in zip(block, block[1:]))
            assert sigma_inverse(sigma(d), g) == d


FIG4 = KDiagram((2, 1, 2, 1, 4, 3, 4, 3), 2,
                frozenset({(1, 3), (3, 5), (5, 7), (2, 4), (6, 8)}))


def test_sigma_k_fig4():
    assert sigma_k(FIG4).values == (2, 1, 6, 1)
    assert sigma_k_inverse((2, 1, 6, 1), 2) == FIG4


def test_sigma_k_specialises_to_sigma():
    for f in enumerate_k_parking(3):
        d = sigma_inverse(f)
        assert sigma_k(KDiagram.from_diagram(d)) == sigma(d)
        assert sigma_k_inverse(f, 1).to_diagram() == d


@pytest.mark.parametrize("k", [1, 2, 3])
def test_single_value_gives_one_chain(k):
    d = sigma_k_inverse((1, 1, 1), k)
    assert chain_partition(d).blocks == (tuple(v for v in (1, 2, 3) for _ in range(k)),)
    assert sigma_k_inverse((1,), k).word == (1,) * k
    assert sigma_k(sigma_k_inverse((1,), k)).values == (1,)


@pytest.mark.parametrize("n,k", [(2, 2), (2, 3), (3, 2), (3, 3)])
def test_k_round_trip(n, k):
    diagrams = set()
    for f in enumerate_k_parking(n, k):
        d = sigma_k_inverse(f)
        assert d.is_valid() and sigma_k(d) == f
        diagrams.add(d)
    assert len(diagrams) == (k * n + 1) ** (n - 1)


def test_extended_oracle_matches_inverse_images():
    a = arr.extended(3, 2)
    from_regions = {arr.region_to_diagram(r, a) for r in arr.enumerate_regions(a)}
    from_pfs = {sigma_k_inverse(f) for f in enumerate_k_parking(3, 2)}
    assert len(from_regions) == 49
    assert from_regions == from_pfs


def test_sigma_k_inverse_rejects():
    with pytest.raises(NotParkingError):
        sigma_k_inverse((4, 1), 2)
