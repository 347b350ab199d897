"""Compiled Dinic max-flow for unit-capacity networks."""

import numpy as np
from numba import njit


@njit(cache=True)
def dinic_unit(num_nodes, tails, heads, source, sink):
    """Maximum flow where every edge has capacity 1.

    Returns ``(value, used)`` with ``used[k] = 1`` when edge ``k`` carries flow.
    Adjacency is scanned in edge order, so the flow found is reproducible.
    """
    m = tails.shape[0]
    na = 2 * m
    atail = np.empty(na, dtype=np.int64)
    ahead = np.empty(na, dtype=np.int64)
    cap = np.zeros(na, dtype=np.int64)
    for k in range(m):
        atail[2 * k] = tails[k]
        ahead[2 * k] = heads[k]
        cap[2 * k] = 1
        atail[2 * k + 1] = heads[k]
        ahead[2 * k + 1] = tails[k]
    ptr = np.zeros(num_nodes + 1, dtype=np.int64)
    for a in range(na):
        ptr[atail[a] + 1] += 1
    for v in range(num_nodes):
        ptr[v + 1] += ptr[v]
    fill = ptr[:-1].copy()
    adj = np.empty(na, dtype=np.int64)
    for a in range(na):
        adj[fill[atail[a]]] = a
        fill[atail[a]] += 1

    level = np.empty(num_nodes, dtype=np.int64)
    it = np.empty(num_nodes, dtype=np.int64)
    queue = np.empty(num_nodes, dtype=np.int64)
    path = np.empty(num_nodes + 1, dtype=np.int64)
    value = 0
    while True:
        level[:] = -1
        level[source] = 0
        qh = 0
        qt = 1
        queue[0] = source
        while qh < qt:
            u = queue[qh]
            qh += 1
            for p in range(ptr[u], ptr[u + 1]):
                a = adj[p]
                v = ahead[a]
                if cap[a] > 0 and level[v] < 0:
                    level[v] = level[u] + 1
                    queue[qt] = v
                    qt += 1
        if level[sink] < 0:
            break
        for v in range(num_nodes):
            it[v] = ptr[v]
        depth = 0
        u = source
        while True:
            if u == sink:
                for i in range(depth):
                    a = path[i]
                    cap[a] -= 1
                    cap[a ^ 1] += 1
                value += 1
                depth = 0
                u = source
                continue
            advanced = False
            while it[u] < ptr[u + 1]:
                a = adj[it[u]]
                v = ahead[a]
                if cap[a] > 0 and level[v] == level[u] + 1:
                    path[depth] = a
                    depth += 1
                    u = v
                    advanced = True
                    break
                it[u] += 1
            if not advanced:
                if u == source:
                    break
                level[u] = -1
                depth -= 1
                u = atail[path[depth]]
                it[u] += 1
    used = np.empty(m, dtype=np.int8)
    for k in range(m):
        used[k] = 1 - cap[2 * k]
    return value, used
