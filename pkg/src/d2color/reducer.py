"""Reducible configurations and the graph reductions that remove them.

Each configuration names a local structure whose removal (or, for
:class:`SmallTypeTwo`, surgical replacement) yields a smaller graph from which
any 2-distance list coloring extends back.  The colorer replays the recorded
:class:`EditScript` in reverse.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import ClassVar, Union

from .classify import Classification, Params, classify, l_measure, params_for_degree
from .errors import StaleConfigError
from .graph import Graph


@dataclass(frozen=True)
class LowDegree:
    """A vertex of degree at most 1."""

    v: int
    kind: ClassVar[str] = "LowDegree"

    def deleted(self) -> tuple[int, ...]:
        return (self.v,)


@dataclass(frozen=True)
class TwoByTwo:
    """Adjacent vertices ``x < y`` both of degree 2."""

    x: int
    y: int
    kind: ClassVar[str] = "TwoByTwo"

    def deleted(self) -> tuple[int, ...]:
        return (self.x, self.y)


@dataclass(frozen=True)
class SmallTypeTwo:
    """Type-two ``u`` with ``3 <= d(u) <= c-1``; ``Y`` lists its type-one neighbors."""

    u: int
    Y: tuple[int, ...]
    kind: ClassVar[str] = "SmallTypeTwo"

    def deleted(self) -> tuple[int, ...]:
        return (self.u,)


@dataclass(frozen=True)
class PendantPair:
    """``N(u) = {x, y}`` with ``x`` type two and ``y`` not massive."""

    u: int
    x: int
    y: int
    kind: ClassVar[str] = "PendantPair"

    def deleted(self) -> tuple[int, ...]:
        return (self.u,)


@dataclass(frozen=True)
class SmallMeetsSmall:
    """``N(u) = {x, y, z...}`` with every ``z`` of degree 2 and ``d(u) + d(x) <= c + 1``.

    ``v[i]`` is the neighbor of ``z[i]`` other than ``u``; only ``z[0]`` is deleted.
    """

    u: int
    x: int
    y: int
    z: tuple[int, ...]
    v: tuple[int, ...]
    kind: ClassVar[str] = "SmallMeetsSmall"

    def deleted(self) -> tuple[int, ...]:
        return (self.z[0],)


ReducibleConfig = Union[LowDegree, TwoByTwo, SmallTypeTwo, PendantPair, SmallMeetsSmall]


def config_to_json(cfg: ReducibleConfig) -> dict:
    out = {"kind": cfg.kind}
    for name in cfg.__dataclass_fields__:
        value = getattr(cfg, name)
        out[name] = list(value) if isinstance(value, tuple) else value
    return out


@dataclass(frozen=True)
class EditScript:
    """How the produced graph's vertex ids relate to the source graph's.

    ``new_to_old[i]`` is the source id of produced vertex ``i`` or ``None`` for
    a surrogate; ``surrogates`` holds ``(new_id, y1, y2)`` with source ids.
    """

    deleted: tuple[int, ...]
    new_to_old: tuple[int | None, ...]
    surrogates: tuple[tuple[int, int, int], ...] = ()

    def old_to_new(self) -> dict[int, int]:
        return {old: new for new, old in enumerate(self.new_to_old) if old is not None}

    def to_json(self) -> dict:
        return {
            "deleted": list(self.deleted),
            "new_to_old": list(self.new_to_old),
            "surrogates": [list(s) for s in self.surrogates],
        }


@dataclass(frozen=True)
class ReductionStep:
    config: ReducibleConfig
    graph: Graph
    produced: Graph
    edit: EditScript
    params: Params

    def to_json(self) -> dict:
        return {
            "config": config_to_json(self.config),
            "params": self.params.to_json(),
            "before": {"n": self.graph.n, "m": self.graph.m},
            "after": {"n": self.produced.n, "m": self.produced.m},
            "edit": self.edit.to_json(),
        }


@dataclass(frozen=True)
class IrreducibleReport:
    """A nonempty graph with no reducible configuration, plus its discharging audit."""

    graph: Graph
    params: Params
    audit: object  # discharge.AuditReport

    def to_json(self) -> dict:
        return {
            "n": self.graph.n,
            "edges": [list(e) for e in self.graph.edges()],
            "params": self.params.to_json(),
            "audit": self.audit.to_json(),
        }


@dataclass(frozen=True)
class ReductionTrace:
    steps: tuple[ReductionStep, ...]
    irreducible: IrreducibleReport | None = field(default=None)

    @property
    def complete(self) -> bool:
        return self.irreducible is None

    def to_json(self) -> dict:
        return {
            "steps": [s.to_json() for s in self.steps],
            "complete": self.complete,
            "irreducible": None if self.irreducible is None else self.irreducible.to_json(),
        }


def find_reducible(g: Graph, p: Params) -> ReducibleConfig | None:
    """First configuration in the fixed priority order, scanning ids ascending."""
    cl = classify(g, p)
    degs = g.degrees()
    for v in g.vertices():
        if degs[v] <= 1:
            return LowDegree(v)
    for x in g.vertices():
        if degs[x] == 2:
            for y in g.neighbors(x):
                if y > x and degs[y] == 2:
                    return TwoByTwo(x, y)
    for u in g.vertices():
        cfg = _small_type_two(g, cl, p, u)
        if cfg is not None:
            return cfg
    for u in g.vertices():
        cfg = _pendant_pair(g, cl, u)
        if cfg is not None:
            return cfg
    for u in g.vertices():
        cfg = _small_meets_small(g, p, u)
        if cfg is not None:
            return cfg
    return None


def _small_type_two(g: Graph, cl: Classification, p: Params, u: int) -> SmallTypeTwo | None:
    if cl.is_type_two(u) and 3 <= g.degree(u) <= p.c - 1:
        return SmallTypeTwo(u, tuple(w for w in g.neighbors(u) if cl.is_type_one(w)))
    return None


def _pendant_pair(g: Graph, cl: Classification, u: int) -> PendantPair | None:
    if g.degree(u) != 2:
        return None
    a, b = g.neighbors(u)
    for x, y in ((a, b), (b, a)):
        if cl.is_type_two(x) and not cl.is_massive(y):
            return PendantPair(u, x, y)
    return None


def _small_meets_small(g: Graph, p: Params, u: int) -> SmallMeetsSmall | None:
    m = g.degree(u)
    if not 3 <= m <= p.c - 1:
        return None
    nbrs = g.neighbors(u)
    heavy = [w for w in nbrs if g.degree(w) != 2]
    if len(heavy) > 2:
        return None
    twos = [w for w in nbrs if g.degree(w) == 2]
    # x and y take the non-degree-2 neighbors (topped up with degree-2 ones);
    # x gets the smaller degree, which is the labeling most likely to qualify
    x, y = sorted(heavy + twos[: 2 - len(heavy)], key=lambda w: (g.degree(w), w))
    if m + g.degree(x) > p.c + 1:
        return None
    z = tuple(w for w in nbrs if w not in (x, y))
    v = tuple(next(t for t in g.neighbors(w) if t != u) for w in z)
    return SmallMeetsSmall(u, x, y, z, v)


def config_holds(g: Graph, cfg: ReducibleConfig, p: Params) -> bool:
    """Re-check a configuration's defining predicate in ``g``."""
    try:
        if isinstance(cfg, LowDegree):
            return g.degree(cfg.v) <= 1
        if isinstance(cfg, TwoByTwo):
            return g.has_edge(cfg.x, cfg.y) and g.degree(cfg.x) == 2 == g.degree(cfg.y)
        cl = classify(g, p)
        if isinstance(cfg, SmallTypeTwo):
            return _small_type_two(g, cl, p, cfg.u) == cfg
        if isinstance(cfg, PendantPair):
            return (
                g.degree(cfg.u) == 2
                and g.neighbor_set(cfg.u) == {cfg.x, cfg.y}
                and cl.is_type_two(cfg.x)
                and not cl.is_massive(cfg.y)
            )
        if isinstance(cfg, SmallMeetsSmall):
            m = g.degree(cfg.u)
            return (
                3 <= m <= p.c - 1
                and g.neighbor_set(cfg.u) == {cfg.x, cfg.y, *cfg.z}
                and len(cfg.z) == m - 2
                and all(g.degree(w) == 2 for w in cfg.z)
                and all(g.neighbor_set(w) == {cfg.u, t} for w, t in zip(cfg.z, cfg.v))
                and m + g.degree(cfg.x) <= p.c + 1
            )
    except KeyError:
        return False
    raise TypeError(f"not a reducible configuration: {cfg!r}")


def apply_reduction(g: Graph, cfg: ReducibleConfig, p: Params) -> ReductionStep:
    """Delete the configuration's vertices; for SmallTypeTwo also add surrogates.

    Surrogates replace ``u`` by one new degree-2 vertex per pair of ``Y``, so
    every two type-one neighbors of ``u`` keep a common neighbor.
    """
    if not config_holds(g, cfg, p):
        raise StaleConfigError(f"{cfg!r} does not hold in {g!r}")
    gone = set(cfg.deleted())
    keep = [v for v in g.vertices() if v not in gone]
    index = {old: new for new, old in enumerate(keep)}
    edges = [(index[a], index[b]) for a, b in g.edges() if a in index and b in index]
    new_to_old: list[int | None] = list(keep)
    surrogates = []
    if isinstance(cfg, SmallTypeTwo):
        for y1, y2 in combinations(cfg.Y, 2):
            s = len(new_to_old)
            new_to_old.append(None)
            surrogates.append((s, y1, y2))
            edges.append((s, index[y1]))
            edges.append((s, index[y2]))
    produced = Graph(len(new_to_old), edges)
    edit = EditScript(tuple(sorted(gone)), tuple(new_to_old), tuple(surrogates))
    return ReductionStep(cfg, g, produced, edit, p)


def descent_key(g: Graph, p: Params) -> tuple[int, int, int]:
    """``l_measure`` refined by vertex count, so deleting an isolated vertex also descends."""
    return (*l_measure(g, p), g.n)


def reduction_sequence(g: Graph, p: Params) -> ReductionTrace:
    """Reduce until the graph is empty or no configuration applies.

    ``K`` is recomputed on every intermediate graph from ``p.c`` and ``p.eps``.
    """
    from .discharge import audit

    steps = []
    current = g
    while current.n:
        level = params_for_degree(current.max_degree(), p.c, p.eps)
        cfg = find_reducible(current, level)
        if cfg is None:
            report = IrreducibleReport(current, level, audit(current, level, certifying=True))
            return ReductionTrace(tuple(steps), report)
        step = apply_reduction(current, cfg, level)
        steps.append(step)
        current = step.produced
    return ReductionTrace(tuple(steps))
