from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from d2color import generators as gen
from d2color.classify import (
    Params,
    VertexClass,
    base_budget,
    ceil_sqrt,
    classify,
    compute_params,
    l_measure,
    params_for_degree,
)
from d2color.errors import ParameterError
from d2color.graph import Graph

from _corpus import SETTINGS
from _strategies import graphs

F = Fraction


def test_budget_examples():
    assert params_for_degree(100, 3, F(1, 10)).K == 14400
    assert params_for_degree(10, 3, F(3, 10)).K == 1600
    p = params_for_degree(63500, 6, F(2, 21), closed=True)
    assert p.K == 63506 and base_budget(6, F(2, 21)) == 63504


def test_endpoint_requires_closed():
    with pytest.raises(ParameterError):
        params_for_degree(63500, 6, F(2, 21))
    with pytest.raises(ParameterError):
        params_for_degree(10, 6, F(1, 10), closed=True)


def test_budget_is_ceiling():
    # 16*9/(7/100)^2 is not an integer
    assert base_budget(3, F(7, 100)) == -(-16 * 9 * 10000 // 49)


def test_graph_params_use_max_degree():
    assert compute_params(gen.star(20000), 3, F(3, 10)).K == 20003
    assert compute_params(gen.cycle(5), 3, F(3, 10)).K == 1600


@pytest.mark.parametrize("k", [1, 2, 3, 4, 15, 16, 17, 1600, 1601, 7092])
def test_ceil_sqrt(k):
    d = ceil_sqrt(k)
    assert d * d >= k > (d - 1) * (d - 1)


def test_k_at_least_4c2():
    for c, eps in SETTINGS:
        assert params_for_degree(0, c, eps).K >= 4 * c * c


def test_cycle_all_small():
    cl = classify(gen.cycle(5), compute_params(gen.cycle(5), 3, F(1, 10)))
    assert set(cl.tags) == {VertexClass.SMALL}


def test_double_star_classes():
    g = gen.double_star(45, 45)
    p = compute_params(g, 3, F(3, 10))
    assert p.K == 1600 and p.min_massive_degree == 40
    cl = classify(g, p)
    assert cl.members(VertexClass.MASSIVE) == [0, 1]
    assert cl.members(VertexClass.SMALL) == list(range(2, 47))


def test_cube_all_type_two():
    g = gen.cube()
    p = compute_params(g, 4, F(1, 10))
    assert p.K == 25600
    assert set(classify(g, p).tags) == {VertexClass.TYPE_TWO}


def test_l_measure_examples():
    assert l_measure(gen.cycle(5), compute_params(gen.cycle(5), 3, F(1, 10))) == (0, 5)
    k4 = gen.complete(4)
    assert l_measure(k4, compute_params(k4, 3, F(3, 10))) == (4, 6)
    assert l_measure(Graph(0), params_for_degree(0, 3, F(3, 10))) == (0, 0)


def test_boundary_degree_is_massive():
    # K = 1600 and a center of degree exactly 40
    g = gen.star(40)
    p = compute_params(g, 3, F(3, 10))
    cl = classify(g, p)
    assert cl.is_massive(0) and cl.is_type_one(0)
    g39 = gen.star(39)
    assert not classify(g39, compute_params(g39, 3, F(3, 10))).is_massive(0)


def test_type_one_needs_massive_neighbor():
    # hub of degree 40, leaf 1 extended to degree 3
    g = Graph(43, [(0, i) for i in range(1, 41)] + [(1, 41), (1, 42)])
    cl = classify(g, compute_params(g, 3, F(3, 10)))
    assert cl[1] is VertexClass.TYPE_ONE and cl.is_type_one(1) and not cl.is_massive(1)
    assert cl[2] is VertexClass.SMALL


@st.composite
def graph_and_params(draw):
    g = draw(graphs(max_n=14))
    c, eps = draw(st.sampled_from(SETTINGS))
    # small synthetic K so that massive vertices actually occur
    K = draw(st.integers(max(g.max_degree() + c, 1), max(g.max_degree() + c, 1) + 40))
    return g, Params(c, eps, K)


@given(graph_and_params())
def test_partition_invariants(gp):
    g, p = gp
    cl = classify(g, p)
    assert len(cl.tags) == g.n
    big = {v for v in g.vertices() if g.degree(v) >= 3}
    grouped = set(cl.members(VertexClass.MASSIVE)) | set(cl.members(VertexClass.TYPE_ONE)) | set(
        cl.members(VertexClass.TYPE_TWO)
    )
    if all(g.degree(v) >= 3 for v in cl.members(VertexClass.MASSIVE)):
        assert grouped == big
    assert cl.n1 + cl.n2 == len(grouped)


@given(graphs(max_n=14), st.sampled_from(SETTINGS))
def test_type_two_conflict_budget(g, setting):
    c, eps = setting
    p = compute_params(g, c, eps)
    cl = classify(g, p)
    for v in cl.members(VertexClass.TYPE_TWO):
        assert sum(g.degree(u) for u in g.neighbors(v)) < p.K


def test_type_two_conflict_budget_near_threshold():
    # centers of degree 39 (just below sqrt(1600)) hanging off a type-two vertex
    edges = [(0, 1), (0, 2), (0, 3)]
    nxt = 4
    for hub in (1, 2, 3):
        for _ in range(38):
            edges.append((hub, nxt))
            nxt += 1
    g = Graph(nxt, edges)
    p = compute_params(g, 3, F(3, 10))
    cl = classify(g, p)
    assert cl.is_type_two(0)
    assert sum(g.degree(u) for u in g.neighbors(0)) < p.K
