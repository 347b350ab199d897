"""Shared instance builders and independent reference checks for the tests."""

import itertools
from collections import Counter

from ptromino.region import Region


def rect(rows, cols, pegs=(), r0=0, c0=0):
    cells = [(r0 + r, c0 + c) for r in range(rows) for c in range(cols)]
    return Region(cells, pegs)


def connected(cells):
    cells = set(cells)
    if not cells:
        return True
    start = next(iter(cells))
    seen = {start}
    stack = [start]
    while stack:
        r, c = stack.pop()
        for d in ((1, 0), (-1, 0), (0, 1), (0, -1)):
            x = (r + d[0], c + d[1])
            if x in cells and x not in seen:
                seen.add(x)
                stack.append(x)
    return len(seen) == len(cells)


def connected_subsets(rows, cols, sizes):
    """All 4-connected cell sets of the given sizes inside a rows x cols box at the origin."""
    box = [(r, c) for r in range(rows) for c in range(cols)]
    for k in sizes:
        for cells in itertools.combinations(box, k):
            if connected(cells):
                yield cells


def box_corpus(rows=3, cols=4, sizes=(3, 6, 9, 12)):
    """Every connected region in the box with every placement of n/3 pegs."""
    for cells in connected_subsets(rows, cols, sizes):
        for pegs in itertools.combinations(cells, len(cells) // 3):
            yield Region(cells, pegs)


def count_perfect_matchings_brute(left, right, edges):
    """Perfect matchings of a bipartite graph by trying every bijection."""
    left, right = list(left), list(right)
    if len(left) != len(right):
        return 0
    es = set(edges)
    return sum(all((a, b) in es for a, b in zip(left, perm))
               for perm in itertools.permutations(right))


def perfect_matchings_brute(left, right, edges):
    left, right = list(left), list(right)
    if len(left) != len(right):
        return []
    es = set(edges)
    return [frozenset(zip(left, perm)) for perm in itertools.permutations(right)
            if all((a, b) in es for a, b in zip(left, perm))]
