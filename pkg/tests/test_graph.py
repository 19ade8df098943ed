import pytest
from hypothesis import given

from d2color import generators as gen
from d2color.errors import UnknownVertexError
from d2color.graph import ACYCLIC, Graph, conflicts, degree_stats, girth, square

from _strategies import graphs, square_oracle


def test_square_of_p3_is_triangle():
    assert set(square(gen.path(3)).edges()) == {(0, 1), (0, 2), (1, 2)}


def test_square_of_c5_is_k5():
    assert square(gen.cycle(5)) == gen.complete(5)


def test_square_of_star_is_complete():
    assert square(gen.star(4)) == gen.complete(5)


def test_conflicts_examples():
    assert conflicts(gen.cycle(5), 0) == {1, 2, 3, 4}
    assert conflicts(Graph(3, [(0, 1)]), 2) == frozenset()
    assert conflicts(gen.star(4), 3) == {0, 1, 2, 4}


def test_conflicts_unknown_vertex():
    with pytest.raises(UnknownVertexError):
        conflicts(gen.cycle(5), 5)


def test_girth_examples():
    assert girth(gen.cycle(5)) == 5
    assert girth(gen.random_tree(30, 1)) == ACYCLIC
    assert girth(gen.petersen()) == 5
    assert girth(gen.complete(4)) == 3
    assert girth(gen.cube()) == 4
    assert girth(Graph(0)) == ACYCLIC


def test_degree_stats_examples():
    assert degree_stats(gen.cycle(5)) == (2, 2, {v: 2 for v in range(5)})
    assert degree_stats(gen.star(4)) == (4, 1, {0: 4, 1: 1, 2: 1, 3: 1, 4: 1})
    assert degree_stats(Graph(3)) == (0, 0, {0: 0, 1: 0, 2: 0})


def test_graph_rejects_bad_edges():
    with pytest.raises(ValueError):
        Graph(3, [(1, 1)])
    with pytest.raises((ValueError, KeyError)):
        Graph(3, [(0, 3)])


def test_duplicate_edges_collapse():
    g = Graph(3, [(0, 1), (1, 0), (0, 1)])
    assert g.m == 1 and g.edges() == [(0, 1)]


def test_induced_subgraph_relabels():
    h, keep = gen.cycle(6).induced_subgraph([5, 0, 1])
    assert keep == [0, 1, 5]
    assert set(h.edges()) == {(0, 1), (0, 2)}


@given(graphs())
def test_square_matches_bfs_oracle(g):
    assert set(square(g).edges()) == square_oracle(g)


@given(graphs())
def test_edges_are_square_edges(g):
    assert set(g.edges()) <= set(square(g).edges())


@given(graphs())
def test_conflicts_are_square_neighbors(g):
    h = square(g)
    for v in g.vertices():
        assert conflicts(g, v) == h.neighbor_set(v)
        assert v not in conflicts(g, v)


@given(graphs(max_n=9))
def test_conflict_pairs_survive_squaring(g):
    h = square(g)
    hh = set(square(h).edges())
    for u, w in square_oracle(g):
        assert (u, w) in set(h.edges()) | hh


@given(graphs())
def test_girth_bounds(g):
    gi = girth(g)
    if g.m >= g.n and g.n > 0:
        assert gi != ACYCLIC  # m >= n forces a cycle
    if gi != ACYCLIC:
        assert 3 <= gi <= g.n
