"""List assignments, greedy extension and the constructive 2-distance list coloring.

:func:`color_theorem1` reduces the graph to nothing, then walks the reduction
steps backwards, extending (and locally repairing) the coloring at each step
as each configuration requires.  Every greedy choice picks the smallest
admissible color, so runs are deterministic.
"""
from __future__ import annotations

import bisect
import random
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from typing import NamedTuple

from .classify import Params, compute_params
from .density import check_mad_bound
from .errors import IrreducibleGraph, ListTooSmall, PreconditionViolated, SafetyBoundViolated
from .graph import Graph, conflicts
from .rational import validate_c_eps
from .reducer import (
    LowDegree,
    PendantPair,
    ReductionStep,
    SmallMeetsSmall,
    SmallTypeTwo,
    TwoByTwo,
    reduction_sequence,
)

Coloring = dict[int, int]


class SampledList:
    """A uniformly random ``size``-subset of ``range(universe)``, listed in increasing order.

    Elements are drawn lazily by sequential selection sampling, so a greedy
    pass that only needs the first few admissible colors never materializes
    the whole list.  Deterministic for a given seed.
    """

    __slots__ = ("universe", "size", "_rng", "_items", "_cursor")

    def __init__(self, universe: int, size: int, seed):
        if not 0 <= size <= universe:
            raise ValueError(f"cannot sample {size} colors from a universe of {universe}")
        self.universe = universe
        self.size = size
        self._rng = random.Random(seed)
        self._items: list[int] = []
        self._cursor = 0

    def _grow(self) -> bool:
        need = self.size - len(self._items)
        if need == 0:
            return False
        while True:
            t = self._cursor
            self._cursor += 1
            if self._rng.randrange(self.universe - t) < need:
                self._items.append(t)
                return True

    def __len__(self) -> int:
        return self.size

    def __iter__(self):
        i = 0
        while i < len(self._items) or self._grow():
            yield self._items[i]
            i += 1

    def __contains__(self, color) -> bool:
        while (not self._items or self._items[-1] < color) and self._grow():
            pass
        i = bisect.bisect_left(self._items, color)
        return i < len(self._items) and self._items[i] == color

    def materialize(self) -> tuple[int, ...]:
        while self._grow():
            pass
        return tuple(self._items)

    def __repr__(self) -> str:
        return f"SampledList(universe={self.universe}, size={self.size})"


class ListAssignment:
    """Per-vertex color lists, each iterated in increasing color order.

    A list may be any sized, iterable container supporting ``in``: a tuple,
    a ``range`` or a :class:`SampledList`.
    """

    def __init__(self, lists: Sequence | Mapping[int, Iterable[int]]):
        if isinstance(lists, Mapping):
            n = max(lists, default=-1) + 1
            missing = [v for v in range(n) if v not in lists]
            if missing:
                raise ValueError(f"no list given for vertices {missing}")
            lists = [lists[v] for v in range(n)]
        self._lists = [self._normalize(v, lst) for v, lst in enumerate(lists)]

    @staticmethod
    def _normalize(v, lst):
        if isinstance(lst, (range, SampledList)):
            if isinstance(lst, range) and lst.step < 0:
                return lst[::-1]
            return lst
        items = tuple(sorted(lst))
        if any(a == b for a, b in zip(items, items[1:])):
            raise ValueError(f"list of vertex {v} repeats a color")
        return items

    @classmethod
    def uniform(cls, n: int, colors: Iterable[int]) -> ListAssignment:
        lst = colors if isinstance(colors, range) else tuple(sorted(set(colors)))
        return cls([lst] * n)

    @classmethod
    def sampled(cls, n: int, size: int, universe: int, seed: int) -> ListAssignment:
        """Independent uniform ``size``-subsets of ``range(universe)``, one per vertex."""
        return cls([SampledList(universe, size, f"{seed}:{v}") for v in range(n)])

    @classmethod
    def from_json(cls, obj) -> ListAssignment:
        if isinstance(obj, Mapping) and "lists" in obj:
            obj = obj["lists"]
        if isinstance(obj, Mapping):
            return cls({int(k): v for k, v in obj.items()})
        return cls(list(obj))

    def to_json(self) -> dict:
        return {"lists": [list(lst) for lst in self._lists]}

    def __len__(self) -> int:
        return len(self._lists)

    def __getitem__(self, v: int):
        return self._lists[v]

    def size(self, v: int) -> int:
        return len(self._lists[v])

    def min_size(self) -> int:
        return min((len(lst) for lst in self._lists), default=0)

    def reindexed(self, origin: Sequence[int]) -> ListAssignment:
        """Vertex ``i`` gets the list of ``origin[i]``."""
        out = ListAssignment.__new__(ListAssignment)
        out._lists = [self._lists[o] for o in origin]
        return out


@dataclass(frozen=True)
class Violation:
    kind: str  # "conflict", "not_in_list" or "uncolored"
    vertices: tuple[int, ...]


class Verdict(NamedTuple):
    valid: bool
    violations: list[Violation]


def verify_coloring(g: Graph, la: ListAssignment, col: Mapping[int, int]) -> Verdict:
    """Check ``col`` is a proper coloring of the square that respects the lists."""
    violations = []
    for v in g.vertices():
        if v not in col:
            violations.append(Violation("uncolored", (v,)))
        elif col[v] not in la[v]:
            violations.append(Violation("not_in_list", (v,)))
    for v in g.vertices():
        if v not in col:
            continue
        for w in sorted(conflicts(g, v)):
            if v < w and w in col and col[v] == col[w]:
                violations.append(Violation("conflict", (v, w)))
    return Verdict(not violations, violations)


def _pick(lst, forbidden: set[int], v: int) -> int:
    for color in lst:
        if color not in forbidden:
            return color
    raise ListTooSmall(
        f"vertex {v}: list of {len(lst)} colors exhausted by {len(forbidden)} forbidden colors"
    )


def _forbidden(col: Mapping[int, int], vertices: Iterable[int]) -> set[int]:
    return {col[w] for w in vertices if w in col}


def greedy_extend(
    g: Graph,
    la: ListAssignment,
    col: Mapping[int, int],
    v: int,
    forbidden_extra: Iterable[int] = (),
) -> Coloring:
    """Color ``v`` with its smallest list color unused on its conflicts and on ``forbidden_extra``."""
    forbidden = _forbidden(col, conflicts(g, v) | set(forbidden_extra))
    out = dict(col)
    out[v] = _pick(la[v], forbidden, v)
    return out


@dataclass(frozen=True)
class GreedyRecord:
    """One bounded greedy choice during replay: ``forbidden`` colors against the allowed ``bound``."""

    step: str
    vertex: int
    forbidden: int
    bound: int | None


def _replay(step: ReductionStep, produced_col: Coloring, la: ListAssignment, log) -> Coloring:
    g, p, cfg = step.graph, step.params, step.config
    col = {old: produced_col[new] for new, old in enumerate(step.edit.new_to_old) if old is not None}

    def extend(v: int) -> int:
        forbidden = _forbidden(col, conflicts(g, v))
        col[v] = _pick(la[v], forbidden, v)
        return len(forbidden)

    if isinstance(cfg, LowDegree):
        extend(cfg.v)
    elif isinstance(cfg, TwoByTwo):
        extend(cfg.x)
        extend(cfg.y)
    elif isinstance(cfg, PendantPair):
        del col[cfg.x]
        extend(cfg.x)
        f = extend(cfg.u)
        # at most 2*sqrt(K) conflicts, compared squared
        if f * f > 4 * p.K:
            raise SafetyBoundViolated(f"PendantPair {cfg}: {f} forbidden colors exceed 2*sqrt({p.K})")
        if log is not None:
            log.append(GreedyRecord(cfg.kind, cfg.u, f, None))
    elif isinstance(cfg, SmallMeetsSmall):
        del col[cfg.u]
        around = (g.closed_neighborhood(cfg.x) | g.closed_neighborhood(cfg.y) | set(cfg.v)) - {cfg.u}
        forbidden = _forbidden(col, around)
        bound = g.max_degree() + g.degree(cfg.x) + g.degree(cfg.u) - 2
        if len(forbidden) > bound or len(forbidden) >= p.K:
            raise SafetyBoundViolated(
                f"SmallMeetsSmall {cfg}: {len(forbidden)} forbidden colors, bound {bound}, K={p.K}"
            )
        col[cfg.u] = _pick(la[cfg.u], forbidden, cfg.u)
        if log is not None:
            log.append(GreedyRecord(cfg.kind, cfg.u, len(forbidden), bound))
        for z in cfg.z[1:]:
            if col[z] == col[cfg.u]:
                del col[z]
                extend(z)
        extend(cfg.z[0])
    elif isinstance(cfg, SmallTypeTwo):
        redo = sorted({cfg.u} | (g.neighbor_set(cfg.u) - set(cfg.Y)))
        for w in redo:
            col.pop(w, None)
        for w in redo:
            f = extend(w)
            if log is not None:
                log.append(GreedyRecord(cfg.kind, w, f, p.K - 1))
    else:  # pragma: no cover
        raise TypeError(f"unknown configuration {cfg!r}")
    return col


def color_theorem1(
    g: Graph, c: int, eps, la: ListAssignment, *, log: list | None = None
) -> Coloring:
    """2-distance list coloring from lists of at least ``K`` colors.

    Requires ``mad(g) < 4 - 4/(c+1) - eps``.  Pass a list as ``log`` to
    collect a :class:`GreedyRecord` for every bounded greedy choice.
    """
    c, eps = validate_c_eps(c, eps)
    if len(la) != g.n:
        raise ValueError(f"list assignment covers {len(la)} vertices, graph has {g.n}")
    if not check_mad_bound(g, c, eps):
        raise PreconditionViolated(f"mad bound 4 - 4/{c + 1} - {eps} not satisfied")
    p0: Params = compute_params(g, c, eps)
    short = [v for v in g.vertices() if la.size(v) < p0.K]
    if short:
        raise ListTooSmall(f"vertices {short[:10]} have lists below K={p0.K}")
    trace = reduction_sequence(g, p0)
    if not trace.complete:
        raise IrreducibleGraph("no reducible configuration in a nonempty graph", trace.irreducible)

    # origins[i][v]: the input vertex whose list level-i vertex v uses
    origins = [list(g.vertices())]
    for step in trace.steps:
        prev = origins[-1]
        fallback = prev[step.config.deleted()[0]]  # surrogates borrow u's list
        origins.append([fallback if old is None else prev[old] for old in step.edit.new_to_old])

    col: Coloring = {}
    for i in range(len(trace.steps) - 1, -1, -1):
        col = _replay(trace.steps[i], col, la.reindexed(origins[i]), log)
    return col
