"""Compiled inner loops for perfect-matching counting on sparse graphs.

Vertices are ``0..nv-1``; the graph is given as CSR (``indptr``/``indices``).
"""

import numpy as np
from numba import njit

CYCLES_OK = 0
CYCLES_ODD = 1
CYCLES_NOT_A_CYCLE = 2


@njit(cache=True)
def build_csr(nv, eu, ev):
    deg = np.zeros(nv, dtype=np.int64)
    for k in range(eu.shape[0]):
        deg[eu[k]] += 1
        deg[ev[k]] += 1
    indptr = np.zeros(nv + 1, dtype=np.int64)
    for v in range(nv):
        indptr[v + 1] = indptr[v] + deg[v]
    fill = indptr[:-1].copy()
    indices = np.empty(indptr[nv], dtype=np.int64)
    for k in range(eu.shape[0]):
        a = eu[k]
        b = ev[k]
        indices[fill[a]] = b
        fill[a] += 1
        indices[fill[b]] = a
        fill[b] += 1
    return indptr, indices


@njit(cache=True)
def eliminate_leaves(indptr, indices, order, stop_on_isolated):
    """Repeatedly match a degree-1 vertex to its only neighbour and delete both.

    Leaves are processed FIFO, seeded in ``order``. Returns
    ``(forced_leaf, forced_partner, alive, n_isolated)``; ``alive`` marks the
    residual graph. A vertex whose degree drops to 0 counts as isolated; with
    ``stop_on_isolated`` the loop exits at the first one.
    """
    nv = indptr.shape[0] - 1
    deg = np.empty(nv, dtype=np.int64)
    for v in range(nv):
        deg[v] = indptr[v + 1] - indptr[v]
    alive = np.ones(nv, dtype=np.bool_)
    queue = np.empty(nv, dtype=np.int64)
    head = 0
    tail = 0
    n_isolated = 0
    forced_leaf = np.empty(nv // 2 + 1, dtype=np.int64)
    forced_partner = np.empty(nv // 2 + 1, dtype=np.int64)
    nf = 0
    for k in range(nv):
        v = order[k]
        if deg[v] == 0:
            n_isolated += 1
            if stop_on_isolated:
                return forced_leaf[:0], forced_partner[:0], alive, n_isolated
        elif deg[v] == 1:
            queue[tail] = v
            tail += 1
    while head < tail:
        v = queue[head]
        head += 1
        if not alive[v] or deg[v] != 1:
            continue
        w = -1
        for p in range(indptr[v], indptr[v + 1]):
            if alive[indices[p]]:
                w = indices[p]
                break
        forced_leaf[nf] = v
        forced_partner[nf] = w
        nf += 1
        alive[v] = False
        alive[w] = False
        for p in range(indptr[w], indptr[w + 1]):
            x = indices[p]
            if alive[x]:
                deg[x] -= 1
                if deg[x] == 0:
                    n_isolated += 1
                    if stop_on_isolated:
                        return forced_leaf[:nf], forced_partner[:nf], alive, n_isolated
                elif deg[x] == 1:
                    queue[tail] = x
                    tail += 1
    return forced_leaf[:nf], forced_partner[:nf], alive, n_isolated


@njit(cache=True)
def residual_cycles(indptr, indices, alive, rank, order):
    """Walk the components of the residual graph, expecting each to be a cycle.

    Components are visited in ``order``, so each cycle starts at its
    lowest-ranked vertex and first steps to that vertex's lower-ranked cycle
    neighbour. Returns ``(status, flat, offsets)`` with cycle ``i`` stored in
    ``flat[offsets[i]:offsets[i+1]]``.
    """
    nv = indptr.shape[0] - 1
    seen = np.zeros(nv, dtype=np.bool_)
    flat = np.empty(nv, dtype=np.int64)
    offsets = np.zeros(nv + 1, dtype=np.int64)
    nflat = 0
    ncyc = 0
    status = CYCLES_OK
    for k in range(nv):
        start = order[k]
        if not alive[start] or seen[start]:
            continue
        nb0 = -1
        nb1 = -1
        cnt = 0
        for p in range(indptr[start], indptr[start + 1]):
            x = indices[p]
            if alive[x]:
                if cnt == 0:
                    nb0 = x
                elif cnt == 1:
                    nb1 = x
                cnt += 1
        if cnt != 2:
            return CYCLES_NOT_A_CYCLE, flat[:0], offsets[:1]
        if rank[nb1] < rank[nb0]:
            nb0 = nb1
        prev = start
        cur = nb0
        seen[start] = True
        flat[nflat] = start
        nflat += 1
        length = 1
        while cur != start:
            if seen[cur]:
                return CYCLES_NOT_A_CYCLE, flat[:0], offsets[:1]
            seen[cur] = True
            flat[nflat] = cur
            nflat += 1
            length += 1
            nxt = -1
            cnt = 0
            for p in range(indptr[cur], indptr[cur + 1]):
                x = indices[p]
                if alive[x]:
                    cnt += 1
                    if x != prev:
                        nxt = x
            if cnt != 2:
                return CYCLES_NOT_A_CYCLE, flat[:0], offsets[:1]
            prev = cur
            cur = nxt
        if length % 2 == 1:
            status = CYCLES_ODD
        ncyc += 1
        offsets[ncyc] = nflat
    return status, flat[:nflat], offsets[: ncyc + 1]
