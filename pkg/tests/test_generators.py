from fractions import Fraction

import pytest

from d2color import generators as gen
from d2color.density import mad
from d2color.graph import ACYCLIC, girth


def test_dodecahedron():
    g = gen.dodecahedron()
    assert (g.n, g.m, girth(g), mad(g)) == (20, 30, 5, 3)
    assert mad(g) < Fraction(10, 3)
    assert all(g.degree(v) == 3 for v in g.vertices())


def test_double_star_sizes():
    g = gen.double_star(45, 45)
    assert (g.n, g.m) == (47, 90)
    assert g.degree(0) == g.degree(1) == 45
    h = gen.double_star(10, 3)
    assert h.degree(0) == h.degree(1) == 10 and h.n == 2 + 3 + 14


def test_small_catalog():
    assert gen.cycle(3) == gen.complete(3)
    assert gen.star(4).degree(0) == 4
    assert (gen.petersen().n, gen.petersen().m) == (10, 15)
    assert (gen.cube().n, gen.cube().m) == (8, 12)
    with pytest.raises(ValueError):
        gen.cycle(2)


def test_random_tree():
    for n in (1, 2, 3, 10, 50):
        t = gen.random_tree(n, 5)
        assert t.n == n and t.m == n - 1
        assert girth(t) == ACYCLIC
    assert gen.random_tree(30, 1) == gen.random_tree(30, 1)


def test_random_bounded_mad_deterministic():
    a = gen.random_bounded_mad(40, Fraction(5, 2), 9)
    assert a == gen.random_bounded_mad(40, Fraction(5, 2), 9)
    assert mad(a) < Fraction(5, 2)


def test_rejection_budget():
    with pytest.raises(gen.RejectionBudgetExceeded):
        gen.random_bounded_mad(10, Fraction(1, 2), 1, p=0.9, max_tries=5)


def test_subdivided_wheel():
    g = gen.subdivided_wheel(10)
    assert g.n == 21 and g.m == 30 and g.degree(0) == 10


def test_surgery_gadget_shape():
    from d2color.classify import base_budget, ceil_sqrt

    eps = Fraction(13, 100)
    D = ceil_sqrt(base_budget(5, eps))
    g = gen.surgery_gadget(5, eps, 4, 2, seed=3)
    u = D + 1  # right after hub 0 and its pool
    assert g.degree(0) == D and g.degree(u) == 4
    assert len(g.neighbor_set(u) & set(range(1, D + 1))) == 2
    # each pool vertex has the hub plus two stubs; u adds d_u more endpoints
    assert sum(g.degree(p) - 3 for p in range(1, D + 1)) == 4


@pytest.mark.parametrize(
    "name, g",
    [("cube", gen.cube()), ("dodecahedron", gen.dodecahedron())]
    + [(f"cycle({n})", gen.cycle(n)) for n in (3, 4, 5, 9, 20)]
    + [(f"subdivided_wheel({t})", gen.subdivided_wheel(t)) for t in (3, 8, 30)],
)
def test_planar_girth_bound(name, g):
    gi = girth(g)
    assert mad(g) < Fraction(2 * gi, gi - 2)


def test_planar_forests_below_two():
    for seed in range(5):
        t = gen.random_tree(25, seed)
        assert girth(t) == ACYCLIC and mad(t) < 2
