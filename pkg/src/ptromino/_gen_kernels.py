"""Compiled region growth and the SplitMix64 generator used by it."""

import numpy as np
from numba import njit

GOLDEN = np.uint64(0x9E3779B97F4A7C15)
MIX1 = np.uint64(0xBF58476D1CE4E5B9)
MIX2 = np.uint64(0x94D049BB133111EB)

OK = 0
STALLED = 1


@njit(cache=True)
def sm_next(state):
    state[0] += GOLDEN
    z = state[0]
    z = (z ^ (z >> np.uint64(30))) * MIX1
    z = (z ^ (z >> np.uint64(27))) * MIX2
    return z ^ (z >> np.uint64(31))


@njit(cache=True)
def sm_below(state, m):
    return np.int64(sm_next(state) % np.uint64(m))


@njit(cache=True)
def _push_neighbors(x, rows, cols, occ, in_front, front, nfront):
    r = x // cols
    c = x % cols
    if r > 0 and occ[x - cols] == 0 and not in_front[x - cols]:
        in_front[x - cols] = True
        front[nfront] = x - cols
        nfront += 1
    if c > 0 and occ[x - 1] == 0 and not in_front[x - 1]:
        in_front[x - 1] = True
        front[nfront] = x - 1
        nfront += 1
    if c < cols - 1 and occ[x + 1] == 0 and not in_front[x + 1]:
        in_front[x + 1] = True
        front[nfront] = x + 1
        nfront += 1
    if r < rows - 1 and occ[x + cols] == 0 and not in_front[x + cols]:
        in_front[x + cols] = True
        front[nfront] = x + cols
        nfront += 1
    return nfront


@njit(cache=True)
def _fits(br, bc, missing, rows, cols, occ):
    if br < 0 or bc < 0 or br + 1 >= rows or bc + 1 >= cols:
        return False
    for q in range(4):
        if q != missing and occ[(br + (q >> 1)) * cols + bc + (q & 1)] != 0:
            return False
    return True


@njit(cache=True)
def grow_tileable(target, rows, cols, seed, max_retries):
    """Grow a region by attaching L-trominoes with a peg under each corner.

    A tromino is the 2x2 box at ``(br, bc)`` minus its ``missing`` cell; its
    corner is the box cell diagonal to the missing one. Each step picks a
    random frontier cell and tries the 12 trominoes covering it from a random
    starting point; a frontier cell that fits none is discarded, which counts
    as one retry. Returns ``(status, occ)`` with ``occ`` 0/1/2 for
    empty/cell/peg over the row-major grid.
    """
    state = np.empty(1, dtype=np.uint64)
    state[0] = np.uint64(seed)
    size = rows * cols
    occ = np.zeros(size, dtype=np.int8)
    in_front = np.zeros(size, dtype=np.bool_)
    front = np.empty(size, dtype=np.int64)
    nfront = 0
    if target == 0:
        return OK, occ
    # first tromino: random orientation, box at the middle of the bounds
    missing = sm_below(state, 4)
    br = (rows - 2) // 2
    bc = (cols - 2) // 2
    placed = 0
    first = True
    while placed < target:
        if first:
            first = False
        else:
            retries = 0
            found = False
            while not found:
                if nfront == 0 or retries > max_retries:
                    return STALLED, occ
                j = sm_below(state, nfront)
                x = front[j]
                if occ[x] != 0:
                    nfront -= 1
                    front[j] = front[nfront]
                    in_front[x] = False
                    continue
                xr = x // cols
                xc = x % cols
                s0 = sm_below(state, 12)
                for t in range(12):
                    p = (s0 + t) % 12
                    missing = p // 3
                    pos = p % 3
                    q = pos if pos < missing else pos + 1
                    br = xr - (q >> 1)
                    bc = xc - (q & 1)
                    if _fits(br, bc, missing, rows, cols, occ):
                        found = True
                        break
                if not found:
                    nfront -= 1
                    front[j] = front[nfront]
                    in_front[x] = False
                    retries += 1
        corner = 3 - missing
        for q in range(4):
            if q != missing:
                y = (br + (q >> 1)) * cols + bc + (q & 1)
                occ[y] = 2 if q == corner else 1
        for q in range(4):
            if q != missing:
                y = (br + (q >> 1)) * cols + bc + (q & 1)
                nfront = _push_neighbors(y, rows, cols, occ, in_front, front, nfront)
        placed += 3
    return OK, occ


@njit(cache=True)
def grow_random(target, num_pegs, rows, cols, seed):
    """Grow a random polyomino cell by cell, then scatter ``num_pegs`` pegs on it.

    Pegs are chosen by a partial Fisher-Yates shuffle of the cells in
    row-major order.
    """
    state = np.empty(1, dtype=np.uint64)
    state[0] = np.uint64(seed)
    size = rows * cols
    occ = np.zeros(size, dtype=np.int8)
    in_front = np.zeros(size, dtype=np.bool_)
    front = np.empty(size, dtype=np.int64)
    if target == 0:
        return OK, occ
    x = (rows // 2) * cols + cols // 2
    occ[x] = 1
    nfront = _push_neighbors(x, rows, cols, occ, in_front, front, 0)
    placed = 1
    while placed < target:
        if nfront == 0:
            return STALLED, occ
        j = sm_below(state, nfront)
        x = front[j]
        nfront -= 1
        front[j] = front[nfront]
        in_front[x] = False
        occ[x] = 1
        placed += 1
        nfront = _push_neighbors(x, rows, cols, occ, in_front, front, nfront)
    cells = np.flatnonzero(occ)
    for i in range(num_pegs):
        j = i + sm_below(state, target - i)
        tmp = cells[i]
        cells[i] = cells[j]
        cells[j] = tmp
        occ[cells[i]] = 2
    return OK, occ
