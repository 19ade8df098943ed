"""Discharging rules and the final-charge audit.

Every vertex starts with charge equal to its degree and the five rules move
charge along edges simultaneously.  On a graph with no reducible
configuration every final charge reaches ``4 - 4/(c+1) - eps``, which is the
certificate that such a graph violates the maximum average degree bound.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .classify import Classification, Params, classify
from .graph import Graph
from .rational import to_json as q_json
from .reducer import find_reducible

CASES = ("1", "2", "3", "4", "5", "6")
UNCOVERED = "uncovered"


@dataclass(frozen=True)
class Transfer:
    rule: int
    source: int
    target: int
    amount: Fraction


@dataclass(frozen=True)
class ChargeLedger:
    initial: tuple[Fraction, ...]
    transfers: tuple[Transfer, ...]
    final: tuple[Fraction, ...]

    def to_json(self) -> dict:
        return {
            "initial": [q_json(q) for q in self.initial],
            "transfers": [
                {"rule": t.rule, "from": t.source, "to": t.target, "amount": q_json(t.amount)}
                for t in self.transfers
            ],
            "final": [q_json(q) for q in self.final],
        }


def rule_amounts(p: Params) -> dict[int, Fraction]:
    """Per-edge amounts for rules 1, 3, 4, 5 (rule 2 depends on the sender's degree)."""
    c, eps = p.c, p.eps
    return {
        1: 1 - Fraction(2, c + 1),
        3: 1 - Fraction(2, c + 1),
        4: 1 - Fraction(4, c + 1) + eps / c,
        5: 1 - eps / c,
    }


def rule2_amount(d: int, c: int) -> Fraction:
    return Fraction(2 * d, c + 1) - 1


def run_discharging(g: Graph, p: Params, cl: Classification | None = None) -> ChargeLedger:
    cl = cl or classify(g, p)
    c = p.c
    amounts = rule_amounts(p)
    degs = g.degrees()
    transfers = []
    for u in g.vertices():
        d = degs[u]
        if cl.is_massive(u):
            transfers += [Transfer(5, u, w, amounts[5]) for w in g.neighbors(u)]
        elif cl.is_type_two(u):
            transfers += [Transfer(4, u, w, amounts[4]) for w in g.neighbors(u)]
        elif cl.is_type_one(u):
            if d < c:
                transfers += [Transfer(1, u, w, amounts[1]) for w in g.neighbors(u) if degs[w] == 2]
            # 2d >= c + 2  <=>  d >= (c+2)/2
            if 2 * d >= c + 2 and d <= c - 1:
                a2 = rule2_amount(d, c)
                transfers += [
                    Transfer(2, u, w, a2) for w in g.neighbors(u) if 3 <= degs[w] <= c - 1
                ]
            if d >= c:
                transfers += [
                    Transfer(3, u, w, amounts[3]) for w in g.neighbors(u) if not cl.is_massive(w)
                ]
    initial = tuple(Fraction(d) for d in degs)
    final = list(initial)
    for t in transfers:
        final[t.source] -= t.amount
        final[t.target] += t.amount
    return ChargeLedger(initial, tuple(transfers), tuple(final))


def case_label(g: Graph, p: Params, cl: Classification, u: int) -> str:
    """Which final-charge case covers ``u``, with that case's structural premise checked."""
    c = p.c
    d = g.degree(u)
    nbrs = g.neighbors(u)
    if cl.is_massive(u):
        return "6"
    if d == 2:
        a, b = nbrs
        if cl.is_type_one(a) and cl.is_type_one(b):
            return "1"
        if (cl.is_type_two(a) and cl.is_massive(b)) or (cl.is_type_two(b) and cl.is_massive(a)):
            return "1"
        return UNCOVERED
    if d < 3:
        return UNCOVERED
    if d >= c:
        return "5" if cl.is_type_two(u) else "4"
    # 3 <= d <= c-1 from here on
    if not cl.is_type_one(u):
        return UNCOVERED
    twos = sum(1 for w in nbrs if g.degree(w) == 2)
    if twos <= d - 3:
        return "3"
    if twos == d - 2:
        a, b = (w for w in nbrs if g.degree(w) != 2)
        for big, other in ((a, b), (b, a)):
            if cl.is_massive(big) and g.degree(other) >= c + 2 - d:
                return "2"
    return UNCOVERED


def case_lower_bound(label: str, d: int, p: Params) -> Fraction | None:
    """The lower bound on the final charge that the case argument proves."""
    c, eps = p.c, p.eps
    if label == "1":
        return 4 - Fraction(4, c + 1)
    if label == "2":
        return 4 - Fraction(4, c + 1) - eps / c
    if label == "3":
        if 2 * d >= c + 1:
            return 6 - Fraction(2 * (3 + d), c + 1) - eps / c
        return 4 - Fraction(2 * (3 - d), c + 1) - eps / c
    if label == "4":
        return 2 + Fraction(2 * d - 2, c + 1) - eps / c
    if label == "5":
        return d * (Fraction(4, c + 1) - eps / c)
    if label == "6":
        return d * eps / c
    return None


@dataclass(frozen=True)
class AuditReport:
    params: Params
    ledger: ChargeLedger
    threshold: Fraction
    min_final: Fraction | None
    violations: tuple[int, ...]
    cases: tuple[str, ...]
    flagged: tuple[int, ...]
    certifying: bool

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def conserved(self) -> bool:
        return sum(self.ledger.final) == sum(self.ledger.initial)

    def to_json(self) -> dict:
        return {
            "params": self.params.to_json(),
            "threshold": q_json(self.threshold),
            "min_final": None if self.min_final is None else q_json(self.min_final),
            "violations": list(self.violations),
            "cases": list(self.cases),
            "flagged_type_two_in_rule2_window": list(self.flagged),
            "certifying": self.certifying,
            "conserved": self.conserved,
            "ledger": self.ledger.to_json(),
        }


def audit(g: Graph, p: Params, *, certifying: bool | None = None) -> AuditReport:
    """Run the rules and compare every final charge with the threshold.

    ``certifying`` records whether ``g`` is free of reducible configurations;
    only then is a clean audit a proof of anything.  It is computed when not
    supplied.
    """
    cl = classify(g, p)
    ledger = run_discharging(g, p, cl)
    threshold = p.threshold
    violations = tuple(v for v in g.vertices() if ledger.final[v] < threshold)
    cases = tuple(case_label(g, p, cl, v) for v in g.vertices())
    flagged = tuple(
        v for v in g.vertices() if cl.is_type_two(v) and 3 <= g.degree(v) <= p.c - 1
    )
    if certifying is None:
        certifying = find_reducible(g, p) is None
    return AuditReport(
        params=p,
        ledger=ledger,
        threshold=threshold,
        min_final=min(ledger.final, default=None),
        violations=violations,
        cases=cases,
        flagged=flagged,
        certifying=certifying,
    )
