"""Pure-Python kernels: Dinic max-flow and exhaustive subset scans.

Reference implementations for ``_ckernels.pyx``; the two modules expose the
same functions with the same tie-breaking so results are interchangeable.
Capacities here are unbounded Python ints.
"""
from collections import deque


def max_flow(n_nodes, tails, heads, caps, rcaps, source, sink):
    """Maximum ``source``-``sink`` flow.

    Arc pair ``i`` joins ``tails[i]`` to ``heads[i]`` with capacity ``caps[i]``
    forward and ``rcaps[i]`` backward (use 0 for a directed arc).  Returns the
    flow value and a list of booleans marking the vertices reachable from the
    source in the final residual network, i.e. the source side of a minimum
    cut that is minimal by inclusion.
    """
    n_arcs = 2 * len(tails)
    to = [0] * n_arcs
    cap = [0] * n_arcs
    adj = [[] for _ in range(n_nodes)]
    for i, (u, v) in enumerate(zip(tails, heads)):
        to[2 * i] = v
        cap[2 * i] = caps[i]
        to[2 * i + 1] = u
        cap[2 * i + 1] = rcaps[i]
        adj[u].append(2 * i)
        adj[v].append(2 * i + 1)

    flow = 0
    while True:
        level = _bfs_levels(n_nodes, adj, to, cap, source)
        if level[sink] < 0:
            break
        ptr = [0] * n_nodes
        while True:
            pushed = _augment(adj, to, cap, level, ptr, source, sink)
            if not pushed:
                break
            flow += pushed

    level = _bfs_levels(n_nodes, adj, to, cap, source)
    return flow, [lv >= 0 for lv in level]


def _bfs_levels(n_nodes, adj, to, cap, source):
    level = [-1] * n_nodes
    level[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for a in adj[u]:
            v = to[a]
            if cap[a] > 0 and level[v] < 0:
                level[v] = level[u] + 1
                queue.append(v)
    return level


def _augment(adj, to, cap, level, ptr, source, sink):
    # one augmenting path in the level graph, iterative DFS with current-arc pointers
    path = []
    u = source
    while True:
        if u == sink:
            pushed = min(cap[a] for a in path)
            for a in path:
                cap[a] -= pushed
                cap[a ^ 1] += pushed
            return pushed
        arcs = adj[u]
        advanced = False
        while ptr[u] < len(arcs):
            a = arcs[ptr[u]]
            v = to[a]
            if cap[a] > 0 and level[v] == level[u] + 1:
                path.append(a)
                u = v
                advanced = True
                break
            ptr[u] += 1
        if advanced:
            continue
        # dead end: retreat
        level[u] = -1
        if not path:
            return 0
        a = path.pop()
        u = to[a ^ 1]
        ptr[u] += 1


def _subset_edge_counts(n, adjmask):
    counts = [0] * (1 << n)
    for mask in range(1, 1 << n):
        low = mask & -mask
        v = low.bit_length() - 1
        rest = mask ^ low
        counts[mask] = counts[rest] + bin(adjmask[v] & rest).count("1")
    return counts


def densest_subset(n, adjmask):
    """Nonempty vertex mask maximizing ``e(S)/|S|``; first maximizer in mask order.

    Returns ``(edges, size, mask)``.
    """
    counts = _subset_edge_counts(n, adjmask)
    best_e, best_s, best_mask = 0, 1, 1
    for mask in range(1, 1 << n):
        e = counts[mask]
        s = bin(mask).count("1")
        if e * best_s > best_e * s:
            best_e, best_s, best_mask = e, s, mask
    return best_e, best_s, best_mask


def min_linear_subset(n, adjmask, a, b):
    """Nonempty vertex mask minimizing ``a*|S| - b*e(S)``; returns ``(value, mask)``."""
    counts = _subset_edge_counts(n, adjmask)
    best, best_mask = None, 0
    for mask in range(1, 1 << n):
        val = a * bin(mask).count("1") - b * counts[mask]
        if best is None or val < best:
            best, best_mask = val, mask
    return best, best_mask
