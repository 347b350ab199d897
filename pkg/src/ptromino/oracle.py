"""Brute-force reference for tilings, used to cross-check the fast paths.

Plain backtracking over cell sets: take the lowest uncovered cell in
row-major order and try every tromino covering it whose corner sits on a
peg and whose tips avoid pegs. Deliberately shares no code with the network,
flow or matching modules.
"""

from __future__ import annotations

from typing import Iterator, List

from .placement import Placement, Tiling
from .region import Region

MAX_CELLS = 30

# (corner offset, tip offset, tip offset) relative to the covered cell, for
# every L-tromino containing it: the cell may be the corner or either tip.
_CORNER_TIPS = [((0, 0), (dr, 0), (0, dc)) for dr in (-1, 1) for dc in (-1, 1)]


def _shapes_covering():
    shapes = set()
    for corner, a, b in _CORNER_TIPS:
        cells = (corner, a, b)
        for anchor in cells:
            shift = lambda c: (c[0] - anchor[0], c[1] - anchor[1])
            shapes.add((shift(corner), shift(a), shift(b)))
    return sorted(shapes)


_SHAPES = _shapes_covering()


class TooLarge(ValueError):
    pass


def _search(r: Region) -> Iterator[List[Placement]]:
    if r.n > MAX_CELLS:
        raise TooLarge(f"{r.n} cells; the brute-force oracle handles at most {MAX_CELLS}")
    cells, pegs = r.cells, r.pegs
    order = sorted(cells)
    covered = set()
    chosen: List[Placement] = []

    def options(x):
        for corner, a, b in _SHAPES:
            c = (x[0] + corner[0], x[1] + corner[1])
            ta = (x[0] + a[0], x[1] + a[1])
            tb = (x[0] + b[0], x[1] + b[1])
            if c not in pegs or ta in pegs or tb in pegs:
                continue
            if ta not in cells or tb not in cells:
                continue
            if c in covered or ta in covered or tb in covered:
                continue
            yield Placement.from_cells(c, ta, tb)

    def rec(i):
        while i < len(order) and order[i] in covered:
            i += 1
        if i == len(order):
            yield list(chosen)
            return
        for p in options(order[i]):
            covered.update(p.cells)
            chosen.append(p)
            yield from rec(i + 1)
            chosen.pop()
            covered.difference_update(p.cells)

    yield from rec(0)


def brute_force_enumerate(r: Region) -> List[Tiling]:
    """All tilings of ``r`` (at most 30 cells), sorted."""
    return sorted((Tiling(ps) for ps in _search(r)), key=lambda t: t.placements)


def brute_force_count(r: Region) -> int:
    return sum(1 for _ in _search(r))
