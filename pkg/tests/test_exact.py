from itertools import combinations, product

import pytest
from hypothesis import given, settings, strategies as st

from d2color import generators as gen
from d2color.colorer import ListAssignment
from d2color.errors import TooLargeError
from d2color.exact import (
    accepts_coloring,
    chi2_exact,
    chi2_list_exact,
    find_list_coloring,
    is_choosable,
    list_colorable_exact,
)
from d2color.graph import Graph, square

from _strategies import graphs


def naive_chromatic(h: Graph) -> int:
    edges = h.edges()
    for k in range(0, h.n + 1):
        for col in product(range(k), repeat=h.n):
            if all(col[a] != col[b] for a, b in edges):
                return k
    raise AssertionError


def naive_list_colorable(h: Graph, lists) -> bool:
    edges = h.edges()
    return any(all(col[a] != col[b] for a, b in edges) for col in product(*lists))


def naive_choosable(g: Graph, k: int) -> bool:
    """Every k-list assignment over a universe of k*n + 1 colors, first list pinned."""
    h = square(g)
    if g.n == 0:
        return True
    subsets = list(combinations(range(k * g.n + 1), k))
    first = [tuple(range(k))]
    return all(naive_list_colorable(h, lists) for lists in product(first, *[subsets] * (g.n - 1)))


def test_chi2_examples():
    assert chi2_exact(gen.cycle(5)) == 5
    assert chi2_exact(gen.petersen()) == 10
    for n in range(0, 11):
        assert chi2_exact(gen.star(n)) == n + 1
    assert chi2_exact(gen.cube()) == 4
    assert chi2_exact(Graph(0)) == 0
    assert chi2_exact(Graph(3)) == 1


@given(graphs(max_n=7))
def test_chi2_matches_naive(g):
    assert chi2_exact(g) == naive_chromatic(square(g))


def test_list_colorable_examples():
    tri = gen.complete(3)
    assert not list_colorable_exact(tri, ListAssignment.uniform(3, (1, 2)))
    assert list_colorable_exact(tri, ListAssignment([(1, 2), (2, 3), (1, 3)]))
    g = gen.petersen()
    assert list_colorable_exact(g, ListAssignment([(v,) for v in range(10)]))


@given(graphs(max_n=7), st.data())
def test_list_colorable_matches_naive(g, data):
    lists = [
        tuple(sorted(data.draw(st.sets(st.integers(0, 5), min_size=1, max_size=4)))) for _ in range(g.n)
    ]
    la = ListAssignment(lists)
    col = find_list_coloring(g, la)
    assert (col is not None) == naive_list_colorable(square(g), lists)
    if col is not None:
        assert accepts_coloring(g, la, col)


def test_large_lists_are_peeled_not_materialized():
    g = gen.cycle(20)
    la = ListAssignment.sampled(20, 10**6, 10**9, seed=1)
    col = find_list_coloring(g, la)
    assert col is not None and accepts_coloring(g, la, col)


def test_checker_rejects_conflicts():
    g = gen.path(3)
    la = ListAssignment.uniform(3, range(3))
    assert not accepts_coloring(g, la, {0: 0, 1: 1, 2: 0})
    assert not accepts_coloring(g, la, {0: 0, 1: 1})
    assert not accepts_coloring(g, la, {0: 0, 1: 1, 2: 7})
    assert accepts_coloring(g, la, {0: 0, 1: 1, 2: 2})


def test_choosability_examples():
    assert chi2_list_exact(gen.cycle(5), 5)
    assert not chi2_list_exact(gen.cycle(5), 4)
    assert chi2_list_exact(Graph(1), 1)
    assert not chi2_list_exact(Graph(1), 0)
    assert chi2_list_exact(gen.cycle(6), 3)
    assert not chi2_list_exact(gen.cycle(6), 2)


@settings(max_examples=25)
@given(graphs(max_n=4), st.integers(1, 2))
def test_choosability_matches_unrestricted_enumeration(g, k):
    assert chi2_list_exact(g, k) == naive_choosable(g, k)


@settings(max_examples=10)
@given(graphs(max_n=3))
def test_choosability_k3_matches_enumeration(g):
    assert chi2_list_exact(g, 3) == naive_choosable(g, 3)


def test_guards():
    with pytest.raises(TooLargeError):
        chi2_exact(gen.cycle(25))
    with pytest.raises(TooLargeError):
        chi2_list_exact(gen.cycle(7), 3)
    with pytest.raises(TooLargeError):
        chi2_list_exact(gen.cycle(5), 7)
    with pytest.raises(TooLargeError):
        list_colorable_exact(gen.cycle(25), ListAssignment.uniform(25, range(5)))


def masks(g: Graph) -> list[int]:
    return [sum(1 << w for w in g.neighbors(v)) for v in g.vertices()]


def naive_graph_choosable(h: Graph, k: int) -> bool:
    if h.n == 0:
        return True
    subsets = list(combinations(range(k * h.n + 1), k))
    first = [tuple(range(k))]
    return all(naive_list_colorable(h, lists) for lists in product(first, *[subsets] * (h.n - 1)))


def bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


@pytest.mark.parametrize(
    "h, k, expected",
    [
        (gen.cycle(4), 2, True),
        (bipartite(2, 3), 2, True),
        (bipartite(2, 4), 2, False),
        (bipartite(3, 3), 2, False),
        (gen.cycle(5), 2, False),
        (gen.cycle(5), 3, True),
        (gen.cycle(6), 2, True),
        (gen.path(5), 2, True),
    ],
)
@pytest.mark.parametrize("shortcuts", [True, False])
def test_enumeration_on_known_graphs(h, k, expected, shortcuts):
    assert is_choosable(masks(h), k, shortcuts=shortcuts) is expected


@settings(max_examples=30)
@given(graphs(max_n=4), st.integers(1, 2))
def test_enumeration_matches_naive_without_shortcuts(h, k):
    assert is_choosable(masks(h), k, shortcuts=False) == naive_graph_choosable(h, k)
