# cython: language_level=3
"""Compiled kernels mirroring ``_pykernels`` on 64-bit integers.

Callers must keep capacities and subset objective values inside int64; the
dispatch layer in ``kernels.py`` checks this before choosing this backend.
"""
from libc.stdlib cimport malloc, free
from libc.stdint cimport int64_t, uint64_t


cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil


cdef inline int _popcount(uint64_t x) nogil:
    return __builtin_popcountll(x)


def max_flow(int n_nodes, tails, heads, caps, rcaps, int source, int sink):
    cdef Py_ssize_t n_pairs = len(tails)
    cdef Py_ssize_t n_arcs = 2 * n_pairs
    cdef int *to = <int *> malloc(max(n_arcs, 1) * sizeof(int))
    cdef int64_t *cap = <int64_t *> malloc(max(n_arcs, 1) * sizeof(int64_t))
    cdef int *start = <int *> malloc((n_nodes + 1) * sizeof(int))
    cdef int *arcs = <int *> malloc(max(n_arcs, 1) * sizeof(int))
    cdef int *fill = <int *> malloc((n_nodes + 1) * sizeof(int))
    cdef int *level = <int *> malloc(n_nodes * sizeof(int))
    cdef int *ptr = <int *> malloc(n_nodes * sizeof(int))
    cdef int *queue = <int *> malloc(n_nodes * sizeof(int))
    cdef int *path = <int *> malloc((n_nodes + 1) * sizeof(int))
    cdef Py_ssize_t i
    cdef int u, v, a, head, tail, depth
    cdef int64_t flow = 0, pushed
    cdef bint advanced
    try:
        for i in range(n_nodes + 1):
            start[i] = 0
        for i in range(n_pairs):
            u = tails[i]
            v = heads[i]
            to[2 * i] = v
            cap[2 * i] = caps[i]
            to[2 * i + 1] = u
            cap[2 * i + 1] = rcaps[i]
            start[u + 1] += 1
            start[v + 1] += 1
        for i in range(n_nodes):
            start[i + 1] += start[i]
        for i in range(n_nodes + 1):
            fill[i] = start[i]
        # same per-node arc order as the Python kernel: pair index ascending
        for i in range(n_pairs):
            u = to[2 * i + 1]
            v = to[2 * i]
            arcs[fill[u]] = 2 * i
            fill[u] += 1
            arcs[fill[v]] = 2 * i + 1
            fill[v] += 1

        while True:
            _bfs(n_nodes, start, arcs, to, cap, level, queue, source)
            if level[sink] < 0:
                break
            for i in range(n_nodes):
                ptr[i] = start[i]
            while True:
                depth = 0
                u = source
                pushed = 0
                while True:
                    if u == sink:
                        pushed = cap[path[0]]
                        for i in range(1, depth):
                            if cap[path[i]] < pushed:
                                pushed = cap[path[i]]
                        for i in range(depth):
                            cap[path[i]] -= pushed
                            cap[path[i] ^ 1] += pushed
                        break
                    advanced = False
                    while ptr[u] < start[u + 1]:
                        a = arcs[ptr[u]]
                        v = to[a]
                        if cap[a] > 0 and level[v] == level[u] + 1:
                            path[depth] = a
                            depth += 1
                            u = v
                            advanced = True
                            break
                        ptr[u] += 1
                    if advanced:
                        continue
                    level[u] = -1
                    if depth == 0:
                        break
                    depth -= 1
                    u = to[path[depth] ^ 1]
                    ptr[u] += 1
                if pushed == 0:
                    break
                flow += pushed

        _bfs(n_nodes, start, arcs, to, cap, level, queue, source)
        side = [level[i] >= 0 for i in range(n_nodes)]
        return flow, side
    finally:
        free(to)
        free(cap)
        free(start)
        free(arcs)
        free(fill)
        free(level)
        free(ptr)
        free(queue)
        free(path)


cdef void _bfs(int n_nodes, int *start, int *arcs, int *to, int64_t *cap,
               int *level, int *queue, int source) nogil:
    cdef int i, u, v, a, head = 0, tail = 0
    for i in range(n_nodes):
        level[i] = -1
    level[source] = 0
    queue[tail] = source
    tail += 1
    while head < tail:
        u = queue[head]
        head += 1
        for i in range(start[u], start[u + 1]):
            a = arcs[i]
            v = to[a]
            if cap[a] > 0 and level[v] < 0:
                level[v] = level[u] + 1
                queue[tail] = v
                tail += 1


cdef int64_t *_edge_counts(int n, list adjmask) except NULL:
    cdef Py_ssize_t total = (<Py_ssize_t> 1) << n
    cdef int64_t *counts = <int64_t *> malloc(total * sizeof(int64_t))
    cdef uint64_t *adj = <uint64_t *> malloc(max(n, 1) * sizeof(uint64_t))
    cdef Py_ssize_t mask, low, rest
    cdef int v
    if counts == NULL or adj == NULL:
        free(counts)
        free(adj)
        raise MemoryError()
    for v in range(n):
        adj[v] = adjmask[v]
    counts[0] = 0
    for mask in range(1, total):
        low = mask & -mask
        v = _popcount(<uint64_t> (low - 1))
        rest = mask ^ low
        counts[mask] = counts[rest] + _popcount(adj[v] & <uint64_t> rest)
    free(adj)
    return counts


def densest_subset(int n, adjmask):
    cdef int64_t *counts = _edge_counts(n, list(adjmask))
    cdef Py_ssize_t total = (<Py_ssize_t> 1) << n
    cdef Py_ssize_t mask, best_mask = 1
    cdef int64_t e, s, best_e = 0, best_s = 1
    try:
        for mask in range(1, total):
            e = counts[mask]
            s = _popcount(<uint64_t> mask)
            if e * best_s > best_e * s:
                best_e = e
                best_s = s
                best_mask = mask
        return int(best_e), int(best_s), int(best_mask)
    finally:
        free(counts)


def min_linear_subset(int n, adjmask, int64_t a, int64_t b):
    cdef int64_t *counts = _edge_counts(n, list(adjmask))
    cdef Py_ssize_t total = (<Py_ssize_t> 1) << n
    cdef Py_ssize_t mask, best_mask = 1
    cdef int64_t val, best
    try:
        best = a - b * counts[1]
        for mask in range(2, total):
            val = a * _popcount(<uint64_t> mask) - b * counts[mask]
            if val < best:
                best = val
                best_mask = mask
        return int(best), int(best_mask)
    finally:
        free(counts)
