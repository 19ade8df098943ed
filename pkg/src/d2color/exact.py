"""Exact (exponential-time) oracles on the square of small graphs.

Everything here works on bitmask adjacency of the square, which is built by
its own breadth-first search rather than :func:`d2color.graph.square`, so the
checks stay independent of the code they validate.
"""
from __future__ import annotations

import os
from collections import deque
from collections.abc import Mapping
from functools import lru_cache

from .errors import TooLargeError
from .graph import Graph

EXACT_MAX_N = int(os.environ.get("D2COLOR_EXACT_MAX_N", "24"))
CHOOSABILITY_MAX_N = int(os.environ.get("D2COLOR_CHOOSABILITY_MAX_N", "6"))
CHOOSABILITY_MAX_K = int(os.environ.get("D2COLOR_CHOOSABILITY_MAX_K", "6"))


def square_masks(g: Graph) -> list[int]:
    """Bitmask rows of the square, via BFS truncated at depth 2."""
    rows = []
    for s in g.vertices():
        dist = {s: 0}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            if dist[u] == 2:
                continue
            for w in g.neighbors(u):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        rows.append(sum(1 << w for w in dist if w != s))
    return rows


def _guard(g: Graph, limit: int, what: str) -> None:
    if g.n > limit:
        raise TooLargeError(f"{what} is limited to n <= {limit}, got n={g.n}")


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _max_clique(adj: list[int], cand: int) -> int:
    """Size of a maximum clique inside ``cand`` (Bron-Kerbosch with pivoting)."""
    best = 0

    def expand(size: int, p: int, x: int) -> None:
        nonlocal best
        if not p and not x:
            best = max(best, size)
            return
        if size + bin(p).count("1") <= best:
            return
        pivot = max(_bits(p | x), key=lambda u: bin(p & adj[u]).count("1"))
        for v in list(_bits(p & ~adj[pivot])):
            expand(size + 1, p & adj[v], x & adj[v])
            p &= ~(1 << v)
            x |= 1 << v

    expand(0, cand, 0)
    return best


def _dsatur_greedy(adj: list[int], n: int) -> int:
    colors = [-1] * n
    sat = [0] * n  # bitmask of neighbor colors
    for _ in range(n):
        v = max(
            (u for u in range(n) if colors[u] < 0),
            key=lambda u: (bin(sat[u]).count("1"), bin(adj[u]).count("1"), -u),
        )
        c = 0
        while sat[v] >> c & 1:
            c += 1
        colors[v] = c
        for w in _bits(adj[v]):
            sat[w] |= 1 << c
    return max(colors, default=-1) + 1


def _k_colorable(adj: list[int], n: int, k: int) -> bool:
    colors = [-1] * n
    sat = [0] * n

    def solve(done: int, used: int) -> bool:
        if done == n:
            return True
        v = max(
            (u for u in range(n) if colors[u] < 0),
            key=lambda u: (bin(sat[u]).count("1"), bin(adj[u]).count("1")),
        )
        # colors beyond `used` are interchangeable: try only the first new one
        for c in range(min(used + 1, k)):
            if sat[v] >> c & 1:
                continue
            colors[v] = c
            saved = [(w, sat[w]) for w in _bits(adj[v])]
            for w, _ in saved:
                sat[w] |= 1 << c
            if solve(done + 1, max(used, c + 1)):
                return True
            for w, s in saved:
                sat[w] = s
            colors[v] = -1
        return False

    return solve(0, 0)


def chi2_exact(g: Graph) -> int:
    """Chromatic number of the square by clique lower bound, DSATUR upper bound and search."""
    _guard(g, EXACT_MAX_N, "chi2_exact")
    n = g.n
    if n == 0:
        return 0
    adj = square_masks(g)
    lower = _max_clique(adj, (1 << n) - 1)
    upper = _dsatur_greedy(adj, n)
    for k in range(lower, upper):
        if _k_colorable(adj, n, k):
            return k
    return upper


def _list_color(adj: list[int], lists: Mapping[int, tuple[int, ...]], vertices: list[int]) -> dict | None:
    """Backtracking list coloring of the square restricted to ``vertices``; most constrained first."""
    col: dict[int, int] = {}
    todo = set(vertices)

    def available(v: int) -> list[int]:
        taken = {col[w] for w in _bits(adj[v]) if w in col}
        return [c for c in lists[v] if c not in taken]

    def solve() -> bool:
        if not todo:
            return True
        best, best_opts = None, None
        for v in sorted(todo):
            opts = available(v)
            if best_opts is None or len(opts) < len(best_opts):
                best, best_opts = v, opts
                if not opts:
                    return False
        todo.remove(best)
        for c in best_opts:
            col[best] = c
            if solve():
                return True
            del col[best]
        todo.add(best)
        return False

    return dict(col) if solve() else None


def find_list_coloring(g: Graph, la) -> dict[int, int] | None:
    """A proper list coloring of the square from ``la``, or ``None`` when none exists.

    Vertices whose list is longer than their remaining degree in the square
    are peeled off first and colored greedily at the end, so huge lists are
    never materialized.
    """
    _guard(g, EXACT_MAX_N, "list_colorable_exact")
    n = g.n
    adj = square_masks(g)
    alive = (1 << n) - 1
    peeled = []
    changed = True
    while changed:
        changed = False
        for v in _bits(alive):
            if len(la[v]) > bin(adj[v] & alive).count("1"):
                alive &= ~(1 << v)
                peeled.append(v)
                changed = True
    core = list(_bits(alive))
    lists = {v: tuple(la[v]) for v in core}
    col = _list_color(adj, lists, core)
    if col is None:
        return None
    for v in reversed(peeled):
        taken = {col[w] for w in _bits(adj[v]) if w in col}
        col[v] = next(c for c in la[v] if c not in taken)
    return col


def list_colorable_exact(g: Graph, la) -> bool:
    return find_list_coloring(g, la) is not None


def accepts_coloring(g: Graph, la, col: Mapping[int, int]) -> bool:
    """Independent checker: total, list-respecting and proper on the square."""
    if any(v not in col or col[v] not in la[v] for v in g.vertices()):
        return False
    adj = square_masks(g)
    return all(col[v] != col[w] for v in g.vertices() for w in _bits(adj[v]))


# --- choosability -----------------------------------------------------------


def _degeneracy(adj: list[int], mask: int) -> int:
    best = 0
    while mask:
        v = min(_bits(mask), key=lambda u: bin(adj[u] & mask).count("1"))
        best = max(best, bin(adj[v] & mask).count("1"))
        mask &= ~(1 << v)
    return best


def _chromatic(adj: list[int], mask: int) -> int:
    verts = list(_bits(mask))
    index = {v: i for i, v in enumerate(verts)}
    sub = [sum(1 << index[w] for w in _bits(adj[v] & mask)) for v in verts]
    n = len(verts)
    if n == 0:
        return 0
    for k in range(1, n + 1):
        if _k_colorable(sub, n, k):
            return k
    return n  # pragma: no cover


def _has_private_free_bad_assignment(adj: list[int], mask: int, k: int) -> bool:
    """Search k-list assignments on the square induced by ``mask``, up to renaming colors.

    Colors that so far lie in exactly the same lists are interchangeable, so
    they are kept in classes and a vertex only chooses how many colors to take
    from each class (plus how many fresh ones).  Only assignments where every
    color lies in at least two lists are completed; any other bad assignment
    restricts to a bad one on a smaller induced subgraph, which the caller
    checks separately.
    """
    order = sorted(_bits(mask), key=lambda v: (-bin(adj[v] & mask).count("1"), v))
    n = len(order)
    earlier = [[w for w in order[:i] if adj[v] >> w & 1] for i, v in enumerate(order)]
    lists: dict[int, tuple[int, ...]] = {}
    witness: list[dict[int, int]] = [{}] * (n + 1)  # witness[i] colors order[:i]

    def colorable(upto: int) -> bool:
        # cheap first: extend the previous prefix's coloring by one vertex
        v = order[upto - 1]
        prev = witness[upto - 1]
        taken = {prev[w] for w in earlier[upto - 1]}
        for c in lists[v]:
            if c not in taken:
                witness[upto] = {**prev, v: c}
                return True
        col = _list_color(adj, lists, order[:upto])
        if col is None:
            return False
        witness[upto] = col
        return True

    def takes(sizes: list[int], budget: int):
        # every way to take j_i <= sizes[i] colors from each class, sum <= budget
        if not sizes:
            yield ()
            return
        for j in range(min(sizes[0], budget), -1, -1):
            for rest in takes(sizes[1:], budget - j):
                yield (j, *rest)

    def assign(i: int, classes: list[tuple[list[int], int]], next_color: int) -> bool:
        # classes: (colors, how many lists contain them)
        if i == n:
            return False  # every prefix, the whole set included, was colorable
        room = k * (n - i - 1)
        for take in takes([len(cs) for cs, _ in classes], k):
            fresh = k - sum(take)
            singles = fresh + sum(
                len(cs) - j for (cs, cnt), j in zip(classes, take) if cnt == 1
            )
            if singles > room:
                continue
            chosen = []
            split = []
            for (cs, cnt), j in zip(classes, take):
                chosen += cs[:j]
                if j:
                    split.append((cs[:j], cnt + 1))
                if j < len(cs):
                    split.append((cs[j:], cnt))
            new = list(range(next_color, next_color + fresh))
            if new:
                split.append((new, 1))
            lists[order[i]] = tuple(chosen + new)
            if not colorable(i + 1) or assign(i + 1, split, next_color + fresh):
                return True
            del lists[order[i]]
        return False

    return assign(0, [], 0)


def is_choosable(adj: list[int], k: int, *, shortcuts: bool = True) -> bool:
    """Whether the graph with bitmask rows ``adj`` is ``k``-choosable.

    Exact: a graph is ``k``-choosable iff no induced subgraph has a bad
    ``k``-list assignment in which every color appears in at least two lists.
    With ``shortcuts`` a subgraph is settled early by degeneracy (``< k``
    means choosable) or chromatic number (``> k`` means not); otherwise every
    subgraph goes through the canonical enumeration.
    """
    if k < 0:
        raise ValueError("k must be non-negative")

    @lru_cache(maxsize=None)
    def choosable(mask: int) -> bool:
        if mask == 0:
            return True
        if k == 0:
            return False
        if shortcuts:
            if _degeneracy(adj, mask) < k:
                return True
            if _chromatic(adj, mask) > k:
                return False
        if not all(choosable(mask & ~(1 << v)) for v in _bits(mask)):
            return False
        return not _has_private_free_bad_assignment(adj, mask, k)

    return choosable((1 << len(adj)) - 1)


def chi2_list_exact(g: Graph, k: int) -> bool:
    """Whether the square of ``g`` is ``k``-choosable (see :func:`is_choosable`)."""
    _guard(g, CHOOSABILITY_MAX_N, "chi2_list_exact")
    if k > CHOOSABILITY_MAX_K:
        raise TooLargeError(f"chi2_list_exact is limited to k <= {CHOOSABILITY_MAX_K}, got k={k}")
    return is_choosable(square_masks(g), k)
