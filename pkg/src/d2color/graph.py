"""Immutable simple undirected graphs and distance-2 queries."""
from __future__ import annotations

from collections import deque
from collections.abc import Iterable
from typing import NamedTuple

from .errors import UnknownVertexError


class Graph:
    """Simple undirected graph on the dense vertex ids ``0..n-1``.

    Instances are immutable; every operation that changes structure builds a
    new graph.  Neighbor tuples are kept sorted so iteration order (and hence
    every search built on it) is deterministic.
    """

    __slots__ = ("_adj", "_sets", "_m")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        sets: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            sets[u].add(v)
            sets[v].add(u)
        self._adj = tuple(tuple(sorted(s)) for s in sets)
        self._sets = tuple(frozenset(s) for s in sets)
        self._m = sum(len(s) for s in sets) // 2

    @classmethod
    def empty(cls, n: int = 0) -> Graph:
        return cls(n)

    @property
    def n(self) -> int:
        return len(self._adj)

    vertex_count = n

    @property
    def m(self) -> int:
        return self._m

    edge_count = m

    def vertices(self) -> range:
        return range(len(self._adj))

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check(v)
        return self._adj[v]

    def neighbor_set(self, v: int) -> frozenset[int]:
        self._check(v)
        return self._sets[v]

    def closed_neighborhood(self, v: int) -> frozenset[int]:
        return self.neighbor_set(v) | {v}

    def degree(self, v: int) -> int:
        self._check(v)
        return len(self._adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self._adj]

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        return v in self._sets[u]

    def edges(self) -> list[tuple[int, int]]:
        """All edges as ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u, nb in enumerate(self._adj) for v in nb if u < v]

    def max_degree(self) -> int:
        return max((len(a) for a in self._adj), default=0)

    def min_degree(self) -> int:
        return min((len(a) for a in self._adj), default=0)

    def induced_edge_count(self, vertices: Iterable[int]) -> int:
        s = set(vertices)
        return sum(1 for u in s for v in self._adj[u] if v in s) // 2

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
        """Induced subgraph relabelled densely; also returns new-id -> old-id."""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        edges = [(index[u], index[v]) for u, v in self.edges() if u in index and v in index]
        return Graph(len(keep), edges), keep

    def _check(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < len(self._adj)):
            raise UnknownVertexError(f"unknown vertex {v!r} (n={len(self._adj)})")

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self._adj == other._adj

    def __hash__(self) -> int:
        return hash(self._adj)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def conflicts(g: Graph, v: int) -> frozenset[int]:
    """Vertices within distance two of ``v`` (its neighborhood in the square)."""
    out = set(g.neighbor_set(v))
    for w in g.neighbors(v):
        out.update(g.neighbors(w))
    out.discard(v)
    return frozenset(out)


def square(g: Graph) -> Graph:
    """The square of ``g``: distinct vertices at distance at most two are adjacent."""
    edges = []
    for v in g.vertices():
        edges.extend((v, w) for w in conflicts(g, v) if v < w)
    return Graph(g.n, edges)


ACYCLIC = "acyclic"


def girth(g: Graph) -> int | str:
    """Length of a shortest cycle, or :data:`ACYCLIC` for a forest.

    A BFS from every root; a non-tree edge ``(u, w)`` closes a closed walk of
    length ``dist[u] + dist[w] + 1`` which contains a cycle no longer than
    that, and the minimum over all roots is attained by a shortest cycle.
    """
    best: int | None = None
    for root in g.vertices():
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if best is not None and 2 * dist[u] + 1 >= best:
                break
            for w in g.neighbors(u):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    length = dist[u] + dist[w] + 1
                    if best is None or length < best:
                        best = length
    return ACYCLIC if best is None else best


class DegreeStats(NamedTuple):
    max_degree: int
    min_degree: int
    degrees: dict[int, int]


def degree_stats(g: Graph) -> DegreeStats:
    return DegreeStats(g.max_degree(), g.min_degree(), dict(enumerate(g.degrees())))
