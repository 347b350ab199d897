"""Exact tiling counts via perfect matchings of the split match graphs.

A tiling picks, for every peg, one black neighbour and one white neighbour.
Those choices are independent perfect matchings of H (black/peg) and H''
(peg/white), so the number of tilings is PM(H) * PM(H'').

Each factor is counted by leaf elimination: a degree-1 vertex must be
matched to its only neighbour, so both are removed and the edge recorded as
forced. Because pegs have degree at most 2 and both sides stay equally
large, what survives is either blocked (some vertex lost all its neighbours)
or a disjoint union of cycles, each contributing a factor of 2 when even and
0 when odd. Everything runs in time linear in the graph size.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple

import numpy as np

from . import _match_kernels as mk
from .network import MatchGraph, build_region_network, match_graph, split_networks
from .region import Region, feasibility_precheck
from .placement import Placement, Tiling


class InvariantViolation(RuntimeError):
    """The residual graph after leaf elimination is neither blocked nor a union of cycles."""


class _Labels(Sequence):
    def __init__(self, left: Sequence, right: Sequence):
        self.left, self.right = left, right

    def __len__(self):
        return len(self.left) + len(self.right)

    def __getitem__(self, i):
        nl = len(self.left)
        return self.left[i] if i < nl else self.right[i - nl]


@dataclass(frozen=True, eq=False)
class CountStructure:
    """Forced edges plus residual even cycles; encodes ``2**num_cycles`` matchings.

    Vertex ids run over ``labels``. For a :class:`MatchGraph` the left side
    comes first, and forced pairs are stored left vertex first. Cycle ``i`` is
    ``cycle_flat[cycle_offsets[i]:cycle_offsets[i+1]]``, starting at its
    lowest-ranked vertex.
    """

    labels: Sequence
    forced_a: np.ndarray
    forced_b: np.ndarray
    cycle_flat: np.ndarray
    cycle_offsets: np.ndarray
    blocked: bool

    @property
    def num_cycles(self) -> int:
        return 0 if self.blocked else len(self.cycle_offsets) - 1

    @property
    def count(self) -> int:
        return 0 if self.blocked else 2 ** self.num_cycles

    @property
    def forced(self) -> frozenset:
        lab = self.labels
        return frozenset((lab[a], lab[b]) for a, b in zip(self.forced_a.tolist(), self.forced_b.tolist()))

    def cycle_ids(self, i: int) -> np.ndarray:
        return self.cycle_flat[self.cycle_offsets[i]:self.cycle_offsets[i + 1]]

    @property
    def cycles(self) -> List[tuple]:
        lab = self.labels
        return [tuple(lab[v] for v in self.cycle_ids(i).tolist()) for i in range(self.num_cycles)]

    def cycle_pairs(self, i: int, bit: int) -> Tuple[np.ndarray, np.ndarray]:
        """Edges of cycle ``i`` in one of its two perfect matchings.

        ``bit`` 0 takes the edge from the cycle's first vertex to its second,
        and every other edge after it; ``bit`` 1 takes the complement.
        """
        cyc = self.cycle_ids(i)
        a = cyc[bit::2]
        b = np.roll(cyc, -1)[bit::2]
        return a, b

    def matching(self, bits: int = 0) -> Tuple[np.ndarray, np.ndarray]:
        """One perfect matching as vertex-id arrays; bit ``i`` of ``bits`` picks cycle ``i``'s half."""
        if self.blocked:
            raise ValueError("graph has no perfect matching")
        parts_a, parts_b = [self.forced_a], [self.forced_b]
        for i in range(self.num_cycles):
            a, b = self.cycle_pairs(i, (bits >> i) & 1)
            parts_a.append(a)
            parts_b.append(b)
        return np.concatenate(parts_a), np.concatenate(parts_b)


def _prepare(h: MatchGraph):
    nl = len(h.left)
    nv = nl + len(h.right)
    eu = h.edge_left.astype(np.int64)
    ev = h.edge_right.astype(np.int64) + nl
    rank = np.concatenate([h.left_rank, h.right_rank]).astype(np.int64)
    order = np.argsort(rank, kind="stable")
    indptr, indices = mk.build_csr(nv, eu, ev)
    return nl, indptr, indices, rank, order


def _structure(labels, indptr, indices, rank, order, nl=None) -> CountStructure:
    fa, fb, alive, n_iso = mk.eliminate_leaves(indptr, indices, order, True)
    if nl is not None:
        # store forced pairs left vertex first
        swap = fa >= nl
        fa, fb = np.where(swap, fb, fa), np.where(swap, fa, fb)
    empty = np.empty(0, dtype=np.int64)
    if n_iso:
        return CountStructure(labels, fa, fb, empty, np.zeros(1, dtype=np.int64), True)
    if nl is not None and __debug__:
        res_left = int(alive[:nl].sum())
        res_right = int(alive[nl:].sum())
        if nl == len(alive) - nl and res_left != res_right:
            raise InvariantViolation(f"residual sides unbalanced: {res_left} vs {res_right}")
    status, flat, offsets = mk.residual_cycles(indptr, indices, alive, rank, order)
    if status == mk.CYCLES_NOT_A_CYCLE:
        raise InvariantViolation("residual component after leaf elimination is not a cycle")
    return CountStructure(labels, fa, fb, flat, offsets, status == mk.CYCLES_ODD)


def count_perfect_matchings(h: MatchGraph) -> CountStructure:
    """Count perfect matchings of a bipartite graph with pegs of degree <= 2."""
    nl, indptr, indices, rank, order = _prepare(h)
    return _structure(_Labels(h.left, h.right), indptr, indices, rank, order, nl)


def count_perfect_matchings_general(labels: Sequence, edges) -> CountStructure:
    """Same procedure on an arbitrary simple graph given by labels and label pairs.

    Raises :class:`InvariantViolation` when the residual graph is not a union of
    cycles, which cannot happen for match graphs of regions but can for
    arbitrary input.
    """
    labels = list(labels)
    index = {v: i for i, v in enumerate(labels)}
    pairs = sorted({tuple(sorted((index[a], index[b]))) for a, b in edges})
    if any(a == b for a, b in pairs):
        raise ValueError("self-loops are not allowed")
    eu = np.array([p[0] for p in pairs], dtype=np.int64)
    ev = np.array([p[1] for p in pairs], dtype=np.int64)
    nv = len(labels)
    indptr, indices = mk.build_csr(nv, eu, ev)
    rank = np.arange(nv, dtype=np.int64)
    return _structure(labels, indptr, indices, rank, rank.copy())


def eliminate_leaves(h: MatchGraph):
    """Run leaf elimination to completion without stopping at isolated vertices.

    Returns ``(forced pairs as labels, residual edges as labels, residual vertices)``.
    Meant for inspecting the residual graph; counting uses
    :func:`count_perfect_matchings`.
    """
    nl, indptr, indices, rank, order = _prepare(h)
    labels = _Labels(h.left, h.right)
    fa, fb, alive, _ = mk.eliminate_leaves(indptr, indices, order, False)
    forced = {(labels[min(a, b)], labels[max(a, b)]) for a, b in zip(fa.tolist(), fb.tolist())}
    eu = h.edge_left
    ev = h.edge_right + nl
    keep = alive[eu] & alive[ev]
    residual_edges = {(labels[a], labels[b]) for a, b in zip(eu[keep].tolist(), ev[keep].tolist())}
    residual_vertices = {labels[v] for v in np.flatnonzero(alive).tolist()}
    return forced, residual_edges, residual_vertices


@dataclass(frozen=True)
class TilingCount:
    """Exact number of tilings; when nonzero it equals ``2 ** (k_h + k_hh)``.

    ``k_h`` and ``k_hh`` are the numbers of free cycles in H and H''.
    """

    value: int
    k_h: int = 0
    k_hh: int = 0

    @property
    def exponent(self) -> Optional[int]:
        return None if self.value == 0 else self.k_h + self.k_hh

    def exponent_str(self) -> str:
        return "0" if self.value == 0 else f"2^{self.exponent}"

    def __str__(self) -> str:
        return str(self.value)

    def __int__(self) -> int:
        return self.value


@dataclass(frozen=True, eq=False)
class _Split:
    region: Region
    h: MatchGraph
    hh: MatchGraph
    cs_h: CountStructure
    cs_hh: CountStructure


def _split_structures(r: Region) -> Optional[_Split]:
    if r.n == 0 or feasibility_precheck(r) is not None:
        return None
    gp, gpp = split_networks(build_region_network(r))
    h, hh = match_graph(gp), match_graph(gpp)
    return _Split(r, h, hh, count_perfect_matchings(h), count_perfect_matchings(hh))


def count_tilings(r: Region) -> TilingCount:
    """Number of tilings of ``r``; 1 for the empty region, 0 when the precheck fails."""
    if r.n == 0:
        return TilingCount(1)
    s = _split_structures(r)
    if s is None:
        return TilingCount(0)
    if s.cs_h.blocked or s.cs_hh.blocked:
        return TilingCount(0, s.cs_h.num_cycles, s.cs_hh.num_cycles)
    return TilingCount(s.cs_h.count * s.cs_hh.count, s.cs_h.num_cycles, s.cs_hh.num_cycles)


def decide_via_counting(r: Region) -> bool:
    return count_tilings(r).value > 0


def _partners(s: _Split, bits_h: int, bits_hh: int):
    """Per-peg black and white partner (cell positions), pegs in row-major order."""
    r = s.region
    n = r.n
    black_of = np.full(n, -1, dtype=np.int64)
    white_of = np.full(n, -1, dtype=np.int64)
    # vertex ids are left side first, so min/max orients a pair; ranks are cell positions
    a, b = s.cs_h.matching(bits_h)
    ids = np.concatenate([s.h.left_rank, s.h.right_rank])
    la, lb = np.minimum(a, b), np.maximum(a, b)
    black_of[ids[lb]] = ids[la]
    a, b = s.cs_hh.matching(bits_hh)
    la, lb = np.minimum(a, b), np.maximum(a, b)
    ids = np.concatenate([s.hh.left_rank, s.hh.right_rank])
    white_of[ids[la]] = ids[lb]
    pegs = np.flatnonzero(r.peg)
    return pegs, black_of[pegs], white_of[pegs]


def _tiling(s: _Split, bits_h: int, bits_hh: int) -> Tiling:
    r = s.region
    pegs, blacks, whites = _partners(s, bits_h, bits_hh)
    return Tiling(Placement(c, b, w) for c, b, w in zip(r.coords(pegs), r.coords(blacks), r.coords(whites)))


def matching_pairs(r: Region) -> Iterator[Tuple[list, list]]:
    """Every (perfect matching of H, perfect matching of H'') as coordinate pairs.

    Pairs are ``(black, peg)`` and ``(peg, white)``. Yields nothing when the
    region has no tiling; yields one empty pair for the empty region.
    """
    if r.n == 0:
        yield [], []
        return
    s = _split_structures(r)
    if s is None or s.cs_h.blocked or s.cs_hh.blocked:
        return
    for bits_hh in range(2 ** s.cs_hh.num_cycles):
        for bits_h in range(2 ** s.cs_h.num_cycles):
            pegs, blacks, whites = _partners(s, bits_h, bits_hh)
            pc, bc, wc = r.coords(pegs), r.coords(blacks), r.coords(whites)
            yield list(zip(bc, pc)), list(zip(pc, wc))


def enumerate_tilings(r: Region, limit: int) -> List[Tiling]:
    """The first ``min(count, limit)`` tilings in canonical order.

    Free cycles are numbered H's cycles first, then H'''s, each by lowest
    vertex; tiling ``i`` takes bit ``j`` of ``i`` as the choice for cycle ``j``
    (bit 0 keeps the edge from the cycle's lowest vertex to its lower
    neighbour). Tiling 0 is what :func:`solve` returns.
    """
    if limit < 1:
        raise ValueError("limit must be positive")
    if r.n == 0:
        return [Tiling()]
    s = _split_structures(r)
    if s is None or s.cs_h.blocked or s.cs_hh.blocked:
        return []
    kh = s.cs_h.num_cycles
    total = 2 ** (kh + s.cs_hh.num_cycles)
    return [_tiling(s, i & ((1 << kh) - 1), i >> kh) for i in itertools.islice(range(total), limit)]


def solve(r: Region) -> Optional[Tiling]:
    """One tiling of ``r`` in linear time, or None."""
    found = enumerate_tilings(r, 1)
    return found[0] if found else None
