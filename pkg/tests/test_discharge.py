import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from d2color import generators as gen
from d2color.classify import Params, classify, compute_params
from d2color.density import mad
from d2color.discharge import CASES, audit, case_lower_bound, rule2_amount, rule_amounts, run_discharging
from d2color.graph import Graph
from d2color.reducer import find_reducible, reduction_sequence

from _corpus import SETTINGS
from _strategies import graphs

F = Fraction


def test_k4_exchange():
    g = gen.complete(4)
    p = compute_params(g, 3, F(1, 10))
    ledger = run_discharging(g, p)
    assert {t.rule for t in ledger.transfers} == {4}
    assert all(t.amount == F(1, 30) for t in ledger.transfers)
    assert len(ledger.transfers) == 12
    assert ledger.final == (3, 3, 3, 3)
    report = audit(g, p)
    assert report.min_final == 3 and report.threshold == F(29, 10)
    assert report.ok and report.certifying and report.cases == ("5",) * 4


def test_double_star_charges():
    g = gen.double_star(45, 45)
    p = compute_params(g, 3, F(3, 10))
    ledger = run_discharging(g, p)
    assert all(t.rule == 5 and t.amount == F(9, 10) for t in ledger.transfers)
    assert ledger.final[0] == ledger.final[1] == F(9, 2)
    assert set(ledger.final[2:]) == {F(19, 5)}
    report = audit(g, p)
    assert report.ok and report.certifying
    assert report.cases[:2] == ("6", "6") and set(report.cases[2:]) == {"1"}


def test_edgeless_graph():
    g = Graph(3)
    ledger = run_discharging(g, compute_params(g, 3, F(3, 10)))
    assert ledger.transfers == () and ledger.final == ledger.initial == (0, 0, 0)


def test_c5_is_not_a_certificate():
    g = gen.cycle(5)
    report = audit(g, compute_params(g, 3, F(1, 10)))
    assert not report.certifying
    assert report.violations == (0, 1, 2, 3, 4)
    assert set(report.ledger.final) == {2}


def test_rule_amounts():
    p = Params(4, F(1, 10), 25600)
    a = rule_amounts(p)
    assert a[1] == a[3] == F(3, 5)
    assert a[4] == 1 - F(4, 5) + F(1, 40)
    assert a[5] == 1 - F(1, 40)
    assert rule2_amount(3, 4) == F(1, 5)


def test_case_bounds_monotone_where_claimed():
    p = Params(6, F(1, 20), 10**6)
    t = p.threshold
    for d in range(3, 6):
        assert case_lower_bound("3", d, p) > t
    for d in range(6, 1000):
        assert case_lower_bound("4", d, p) >= t
        assert case_lower_bound("5", d, p) >= t
    assert case_lower_bound("1", 2, p) >= t and case_lower_bound("2", 3, p) >= t


def test_type_two_in_rule2_window_is_flagged():
    g = gen.cube()
    report = audit(g, compute_params(g, 4, F(1, 10)))
    assert report.flagged == tuple(range(8)) and not report.certifying


@st.composite
def graph_params(draw):
    g = draw(graphs(max_n=14))
    c, eps = draw(st.sampled_from(SETTINGS))
    K = draw(st.integers(max(g.max_degree() + c, 1), max(g.max_degree() + c, 1) + 40))
    return g, Params(c, eps, K)


@given(graph_params())
def test_conservation(gp):
    g, p = gp
    ledger = run_discharging(g, p)
    assert sum(ledger.final) == 2 * g.m
    assert sum(ledger.initial) == 2 * g.m


@given(graph_params())
def test_rule1_rule2_recipients_disjoint(gp):
    g, p = gp
    ledger = run_discharging(g, p)
    r1 = {(t.source, t.target) for t in ledger.transfers if t.rule == 1}
    r2 = {(t.source, t.target) for t in ledger.transfers if t.rule == 2}
    assert not r1 & r2
    assert all(g.degree(b) == 2 for _, b in r1)
    assert all(3 <= g.degree(b) <= p.c - 1 for _, b in r2)
    pairs = [(t.source, t.target) for t in ledger.transfers]
    assert len(pairs) == len(set(pairs))  # at most one rule per directed edge


def irreducible_residuals(count, seed):
    """Residual graphs left by reducing dense random graphs."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        c, eps = rng.choice(SETTINGS)
        g = gen.erdos_renyi(rng.randint(4, 14), rng.choice((0.5, 0.7, 0.9)), rng.randrange(2**32))
        trace = reduction_sequence(g, compute_params(g, c, eps))
        if not trace.complete:
            out.append(trace.irreducible)
    return out


@pytest.mark.parametrize("report", irreducible_residuals(40, 3), ids=lambda r: f"n{r.graph.n}")
def test_irreducible_certificate(report):
    g, p, a = report.graph, report.params, report.audit
    assert find_reducible(g, p) is None and a.certifying
    assert a.ok and a.min_final >= p.threshold
    assert a.conserved and sum(a.ledger.final) == 2 * g.m
    assert mad(g) >= p.threshold
    assert not a.flagged
    for v, label in enumerate(a.cases):
        assert label in CASES
        assert a.ledger.final[v] >= case_lower_bound(label, g.degree(v), p)
    if "6" in a.cases:
        assert min(a.ledger.final[v] for v, lab in enumerate(a.cases) if lab == "6") >= 4


def test_massive_vertex_case_six_bound():
    # centers of degree 40 = sqrt(1600) sit exactly on the massive boundary
    g = gen.double_star(40, 40)
    p = compute_params(g, 3, F(3, 10))
    report = audit(g, p)
    assert classify(g, p).is_massive(0)
    assert report.cases[0] == "6" and report.ledger.final[0] >= 4


def test_audit_json_has_exact_charges():
    g = gen.complete(4)
    obj = audit(g, compute_params(g, 3, F(1, 10))).to_json()
    assert obj["min_final"] == {"num": 3, "den": 1}
    assert obj["ledger"]["transfers"][0]["amount"] == {"num": 1, "den": 30}
