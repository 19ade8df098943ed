"""Catalog graphs and seeded random families."""
from __future__ import annotations

import random

from .density import mad
from .errors import D2ColorError
from .graph import Graph
from .rational import as_fraction


class RejectionBudgetExceeded(D2ColorError):
    code = "rejection_budget_exceeded"


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    """Path on ``n`` vertices."""
    if n < 1:
        raise ValueError("a path needs at least 1 vertex")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def star(n: int) -> Graph:
    """``K_{1,n}``: center 0 and leaves ``1..n``."""
    if n < 0:
        raise ValueError("negative leaf count")
    return Graph(n + 1, [(0, i) for i in range(1, n + 1)])


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs at least 1 vertex")
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def cube() -> Graph:
    """The 3-cube; vertices are bit vectors, adjacent when they differ in one bit."""
    return Graph(8, [(v, v ^ (1 << b)) for v in range(8) for b in range(3) if v < v ^ (1 << b)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def lcf(n: int, jumps: list[int]) -> Graph:
    """Cubic Hamiltonian graph from LCF notation ``jumps`` repeated around an ``n``-cycle."""
    edges = {tuple(sorted((i, (i + 1) % n))) for i in range(n)}
    for i in range(n):
        j = (i + jumps[i % len(jumps)]) % n
        edges.add(tuple(sorted((i, j))))
    return Graph(n, edges)


def dodecahedron() -> Graph:
    """Planar, cubic, girth 5, 20 vertices."""
    return lcf(20, [10, 7, 4, -4, -7, 10, -4, 7, -7, 4])


def double_star(t: int, k: int | None = None) -> Graph:
    """Two centers of degree ``t`` sharing ``k`` degree-2 middle vertices.

    Centers are 0 and 1, middles ``2..k+1``; when ``k < t`` each center also
    gets ``t - k`` private leaves so its degree is still ``t``.
    """
    k = t if k is None else k
    if not 0 <= k <= t:
        raise ValueError("need 0 <= k <= t")
    edges = [(0, i) for i in range(2, k + 2)] + [(1, i) for i in range(2, k + 2)]
    nxt = k + 2
    for center in (0, 1):
        for _ in range(t - k):
            edges.append((center, nxt))
            nxt += 1
    return Graph(nxt, edges)


def random_tree(n: int, seed: int) -> Graph:
    """Uniform labelled tree via a random Pruefer sequence."""
    if n <= 2:
        return path(max(n, 1)) if n else Graph(0)
    rng = random.Random(seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = min(i for i in range(n) if degree[i] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, w = (i for i in range(n) if degree[i] == 1)
    edges.append((u, w))
    return Graph(n, edges)


def erdos_renyi(n: int, p: float, seed: int) -> Graph:
    rng = random.Random(seed)
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


def random_bounded_mad(
    n: int, bound, seed: int, *, p: float | None = None, max_tries: int = 1000
) -> Graph:
    """Erdos-Renyi graph rejection-sampled until ``mad < bound``.

    The default edge probability targets an average degree of ``0.6 * bound``.
    """
    bound = as_fraction(bound)
    if n < 1:
        raise ValueError("need at least one vertex")
    if p is None:
        p = min(1.0, 0.6 * float(bound) / max(n - 1, 1))
    rng = random.Random(seed)
    for _ in range(max_tries):
        g = erdos_renyi(n, p, rng.randrange(2**63))
        if mad(g) < bound:
            return g
    raise RejectionBudgetExceeded(f"no graph with mad < {bound} in {max_tries} tries (n={n}, p={p})")


def hub_graph(
    n_hubs: int,
    hub_degree: int,
    pool: int,
    links: int,
    bound,
    seed: int,
    *,
    subdivide: float = 0.8,
    max_tries: int = 200,
) -> Graph:
    """High-degree hubs over a sparse pool, rejection-sampled until ``mad < bound``.

    Hubs ``0..n_hubs-1`` each pick ``hub_degree`` neighbors in a private pool
    of ``pool`` vertices.  Then ``links`` random pairs from the union of the
    pools are joined, each
    through a fresh degree-2 vertex with probability ``subdivide`` and
    directly otherwise.  This yields massive, type-one and degree-2 vertices
    in the same small graph.
    """
    bound = as_fraction(bound)
    if hub_degree > pool:
        raise ValueError("hub_degree exceeds pool size")
    rng = random.Random(seed)
    for _ in range(max_tries):
        n = n_hubs * (1 + pool)
        edges = set()
        for h in range(n_hubs):
            lo = n_hubs + h * pool
            edges.update((h, w) for w in rng.sample(range(lo, lo + pool), hub_degree))
        for _ in range(links):
            a, b = sorted(rng.sample(range(n_hubs, n_hubs * (1 + pool)), 2))
            if rng.random() < subdivide:
                edges.update(((a, n), (b, n)))
                n += 1
            else:
                edges.add((a, b))
        g = Graph(n, edges)
        if mad(g) < bound:
            return g
    raise RejectionBudgetExceeded(f"no hub graph with mad < {bound} in {max_tries} tries")


def subdivide(g: Graph, edges=None) -> Graph:
    """Replace each listed edge (all edges by default) by a path through a new vertex."""
    chosen = set(g.edges() if edges is None else (tuple(sorted(e)) for e in edges))
    out = [e for e in g.edges() if e not in chosen]
    n = g.n
    for a, b in sorted(chosen):
        out += [(a, n), (b, n)]
        n += 1
    return Graph(n, out)


def subdivided_wheel(t: int) -> Graph:
    """Hub 0 joined to rim vertices ``1..t``; consecutive rim vertices meet through a degree-2 vertex."""
    if t < 3:
        raise ValueError("rim needs at least 3 vertices")
    rim = [(i, i % t + 1) for i in range(1, t + 1)]
    return subdivide(Graph(t + 1, [(0, i) for i in range(1, t + 1)] + rim), rim)


def surgery_gadget(c: int, eps, d_u: int, n_y: int, seed: int, *, copies: int = 1, max_tries: int = 50) -> Graph:
    """A graph whose first reducible configuration is a type-two vertex with ``|Y| = n_y``.

    Hub 0 has degree ``ceil(sqrt(K))`` for ``K = ceil(16 c^2 / eps^2)``, so it
    is massive; its pool neighbors ``1..D`` get degree 3 through random
    subdivided links, which makes them type one.  Each of the ``copies``
    vertices ``u`` (ids right after the pool) has ``n_y`` pool neighbors and
    ``d_u - n_y`` further neighbors of degree 2 leading back into the pool.
    Rejection-sampled until the mad bound for ``(c, eps)`` holds.
    """
    from .classify import base_budget, ceil_sqrt
    from .density import check_mad_bound
    from .rational import validate_c_eps

    c, eps = validate_c_eps(c, eps)
    if not 3 <= d_u <= c - 1 or not 0 <= n_y <= d_u:
        raise ValueError("need 3 <= d_u <= c-1 and 0 <= n_y <= d_u")
    D = ceil_sqrt(base_budget(c, eps))
    rng = random.Random(seed)
    for _ in range(max_tries):
        edges = {(0, p) for p in range(1, D + 1)}
        n = D + 1 + copies
        stubs = [p for p in range(1, D + 1) for _ in range(2)]
        rng.shuffle(stubs)
        while len(stubs) >= 2:
            a = stubs.pop()
            j = next((i for i, b in enumerate(stubs) if b != a), None)
            if j is None:
                break
            b = stubs.pop(j)
            edges.update(((a, n), (b, n)))
            n += 1
        for k in range(copies):
            u = D + 1 + k
            for p in rng.sample(range(1, D + 1), n_y):
                edges.add((p, u))
            for p in rng.sample(range(1, D + 1), d_u - n_y):
                edges.update(((u, n), (p, n)))
                n += 1
        g = Graph(n, edges)
        if check_mad_bound(g, c, eps):
            return g
    raise RejectionBudgetExceeded(f"no surgery gadget under the mad bound in {max_tries} tries")


CATALOG = {
    "cycle": cycle,
    "path": path,
    "star": star,
    "complete": complete,
    "cube": cube,
    "dodecahedron": dodecahedron,
    "petersen": petersen,
    "double_star": double_star,
}

