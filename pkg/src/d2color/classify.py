"""Color budget ``K`` and the massive / type-one / type-two vertex partition."""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from .graph import Graph
from .rational import mad_threshold, potential_slope, validate_c_eps


@dataclass(frozen=True)
class Params:
    """``c``, ``eps`` and the color budget ``K = max(Delta + c, ceil(16 c^2 / eps^2))``."""

    c: int
    eps: Fraction
    K: int

    @property
    def threshold(self) -> Fraction:
        return mad_threshold(self.c, self.eps)

    @property
    def alpha(self) -> Fraction:
        return potential_slope(self.c, self.eps)

    @property
    def min_massive_degree(self) -> int:
        return ceil_sqrt(self.K)

    def is_massive_degree(self, d: int) -> bool:
        return d * d >= self.K

    def to_json(self) -> dict:
        return {"c": self.c, "eps": {"num": self.eps.numerator, "den": self.eps.denominator}, "K": self.K}


def ceil_sqrt(k: int) -> int:
    """Smallest integer ``d`` with ``d*d >= k``."""
    return math.isqrt(k - 1) + 1 if k > 0 else 0


def base_budget(c: int, eps: Fraction) -> int:
    """``ceil(16 c^2 / eps^2)``, the part of ``K`` that does not depend on the graph."""
    return math.ceil(Fraction(16 * c * c) / (eps * eps))


def compute_params(g: Graph, c: int, eps, *, closed: bool = False) -> Params:
    return params_for_degree(g.max_degree(), c, eps, closed=closed)


def params_for_degree(max_degree: int, c: int, eps, *, closed: bool = False) -> Params:
    c, eps = validate_c_eps(c, eps, closed=closed)
    return Params(c, eps, max(max_degree + c, base_budget(c, eps)))


class VertexClass(enum.Enum):
    MASSIVE = "massive"
    TYPE_ONE = "type_one"
    TYPE_TWO = "type_two"
    SMALL = "small"


@dataclass(frozen=True)
class Classification:
    """One tag per vertex.

    ``TYPE_ONE`` here excludes massive vertices; :meth:`is_type_one` gives the
    wider predicate (massive, or degree at least 3 next to a massive vertex).
    """

    tags: tuple[VertexClass, ...]
    K: int

    @property
    def massive_threshold(self) -> int:
        return ceil_sqrt(self.K)

    def __getitem__(self, v: int) -> VertexClass:
        return self.tags[v]

    def is_massive(self, v: int) -> bool:
        return self.tags[v] is VertexClass.MASSIVE

    def is_type_one(self, v: int) -> bool:
        return self.tags[v] in (VertexClass.MASSIVE, VertexClass.TYPE_ONE)

    def is_type_two(self, v: int) -> bool:
        return self.tags[v] is VertexClass.TYPE_TWO

    def is_small(self, v: int) -> bool:
        return self.tags[v] is VertexClass.SMALL

    def members(self, tag: VertexClass) -> list[int]:
        return [v for v, t in enumerate(self.tags) if t is tag]

    @property
    def n1(self) -> int:
        return sum(1 for t in self.tags if t in (VertexClass.MASSIVE, VertexClass.TYPE_ONE))

    @property
    def n2(self) -> int:
        return sum(1 for t in self.tags if t is VertexClass.TYPE_TWO)

    def to_json(self) -> dict:
        return {
            "K": self.K,
            "massive_threshold": self.massive_threshold,
            "tags": [t.value for t in self.tags],
            "n1": self.n1,
            "n2": self.n2,
        }


def classify(g: Graph, p: Params) -> Classification:
    degs = g.degrees()
    massive = [d * d >= p.K for d in degs]
    tags = []
    for v, d in enumerate(degs):
        if massive[v]:
            # sqrt(K) >= 2c >= 6, so a massive vertex never has degree <= 2
            tags.append(VertexClass.MASSIVE)
        elif d <= 2:
            tags.append(VertexClass.SMALL)
        elif any(massive[w] for w in g.neighbors(v)):
            tags.append(VertexClass.TYPE_ONE)
        else:
            tags.append(VertexClass.TYPE_TWO)
    return Classification(tuple(tags), p.K)


def l_measure(g: Graph, p: Params) -> tuple[int, int]:
    """``(n1 + n2, e)``: the well-founded order the reductions descend in."""
    cl = classify(g, p)
    return cl.n1 + cl.n2, g.m
