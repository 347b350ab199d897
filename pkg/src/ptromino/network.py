"""Region networks and the bipartite graphs derived from them.

The region network has a source ``s``, a sink ``t`` and one node per cell,
with unit-capacity edges

    s -> black,  black -> peg,  peg -> white,  white -> t

where a black/peg or peg/white edge exists exactly when the two cells are
adjacent. Cell nodes have capacity 1; ``s`` and ``t`` are uncapacitated.
Zero-capacity edges are not stored.

Splitting the network at the pegs gives ``G'`` (source side, pegs drained
into an auxiliary sink ``t'``) and ``G''`` (sink side, pegs fed from an
auxiliary source ``s'``). Dropping terminals and directions from those gives
the match graphs ``H`` (black/peg) and ``H''`` (peg/white).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .region import BLACK, PEG, WHITE, Region, RejectReason, feasibility_precheck


class Terminal(enum.Enum):
    SOURCE = "s"
    SINK = "t"
    AUX_SOURCE = "s'"
    AUX_SINK = "t'"

    def __repr__(self) -> str:
        return self.value


class PrecheckFailed(ValueError):
    def __init__(self, reason: RejectReason):
        super().__init__(f"region fails the shape precheck: {reason.value}")
        self.reason = reason


class Kind(enum.Enum):
    FULL = "G"
    SOURCE_SIDE = "G'"
    SINK_SIDE = "G''"


@dataclass(frozen=True, eq=False)
class RegionNetwork:
    """A flow network over the cells of ``region``.

    Nodes are numbered ``0..n-1`` for cells (row-major, as in the region),
    ``n`` for the source terminal and ``n + 1`` for the sink terminal.
    ``tails``/``heads`` hold the edges in that numbering; every edge has
    capacity 1. ``cell_nodes`` lists the cells that are nodes of this network.
    """

    region: Region
    kind: Kind
    source: Terminal
    sink: Terminal
    cell_nodes: np.ndarray
    tails: np.ndarray
    heads: np.ndarray

    @property
    def source_id(self) -> int:
        return self.region.n

    @property
    def sink_id(self) -> int:
        return self.region.n + 1

    @property
    def num_nodes(self) -> int:
        return len(self.cell_nodes) + 2

    @property
    def num_edges(self) -> int:
        return len(self.tails)

    def label(self, i: int):
        if i == self.source_id:
            return self.source
        if i == self.sink_id:
            return self.sink
        return self.region.coord(i)

    @property
    def nodes(self) -> list:
        return [self.source] + self.region.coords(self.cell_nodes) + [self.sink]

    @property
    def edges(self) -> list:
        return [(self.label(u), self.label(v)) for u, v in zip(self.tails.tolist(), self.heads.tolist())]

    def vertex_capacity(self, node) -> float:
        return math.inf if isinstance(node, Terminal) else 1

    def edge_index(self) -> dict:
        """Map ``(tail, head)`` in node numbering to the edge's position."""
        return {(u, v): k for k, (u, v) in enumerate(zip(self.tails.tolist(), self.heads.tolist()))}

    def dump(self) -> str:
        """Edge list ``u -> v`` one per line, sorted lexicographically."""
        def fmt(x):
            return x.value if isinstance(x, Terminal) else f"({x[0]},{x[1]})"
        lines = sorted(f"{fmt(u)} -> {fmt(v)}" for u, v in self.edges)
        return "".join(line + "\n" for line in lines)


def _adjacent_pairs(nbr: np.ndarray, from_mask: np.ndarray, to_mask: np.ndarray):
    """Edges (u, v) with u in ``from_mask``, v in ``to_mask`` and u, v adjacent.

    Output is sorted by u, then by v (the neighbour table is row-major per row).
    """
    ok = (nbr >= 0) & from_mask[:, None]
    ok[ok] = to_mask[nbr[ok]]
    u, d = np.nonzero(ok)
    return u.astype(np.int64), nbr[u, d]


def build_region_network(r: Region, *, check: bool = True) -> RegionNetwork:
    """Build the region network of ``r``.

    With ``check`` (the default) a region failing :func:`feasibility_precheck`
    raises :class:`PrecheckFailed`. ``check=False`` builds the network anyway,
    which is handy for inspecting unbalanced instances.
    """
    if check:
        reason = feasibility_precheck(r)
        if reason is not None:
            raise PrecheckFailed(reason)
    n = r.n
    cls = r.cell_classes()
    black, white, peg = cls == BLACK, cls == WHITE, cls == PEG
    nbr = r.neighbor_table()
    b_idx = np.flatnonzero(black)
    w_idx = np.flatnonzero(white)
    bp_u, bp_v = _adjacent_pairs(nbr, black, peg)
    pw_u, pw_v = _adjacent_pairs(nbr, peg, white)
    s, t = n, n + 1
    tails = np.concatenate([np.full(len(b_idx), s), bp_u, pw_u, w_idx])
    heads = np.concatenate([b_idx, bp_v, pw_v, np.full(len(w_idx), t)])
    return RegionNetwork(r, Kind.FULL, Terminal.SOURCE, Terminal.SINK,
                         np.arange(n, dtype=np.int64), tails.astype(np.int64), heads.astype(np.int64))


def split_networks(g: RegionNetwork):
    """Return ``(G', G'')`` for a full region network ``g``.

    ``G'`` keeps ``s``, the black and peg nodes and their edges, and adds
    ``peg -> t'`` for every peg. ``G''`` keeps the peg and white nodes and
    ``t``, and adds ``s' -> peg`` for every peg.
    """
    if g.kind is not Kind.FULL:
        raise ValueError("split_networks expects a full region network")
    r = g.region
    n = r.n
    cls = r.cell_classes()
    pegs = np.flatnonzero(cls == PEG)
    tail_cls = np.where(g.tails < n, cls[np.minimum(g.tails, max(n - 1, 0))], -1)
    head_cls = np.where(g.heads < n, cls[np.minimum(g.heads, max(n - 1, 0))], -1)
    # edge kinds are identified by the class of whichever endpoint is a cell
    into_black = head_cls == BLACK
    black_peg = (tail_cls == BLACK) & (head_cls == PEG)
    peg_white = (tail_cls == PEG) & (head_cls == WHITE)
    out_white = tail_cls == WHITE
    src, snk = n, n + 1

    gp_tails = np.concatenate([g.tails[into_black | black_peg], pegs])
    gp_heads = np.concatenate([g.heads[into_black | black_peg], np.full(len(pegs), snk)])
    gp = RegionNetwork(r, Kind.SOURCE_SIDE, Terminal.SOURCE, Terminal.AUX_SINK,
                       np.flatnonzero((cls == BLACK) | (cls == PEG)), gp_tails, gp_heads)

    gpp_tails = np.concatenate([np.full(len(pegs), src), g.tails[peg_white | out_white]])
    gpp_heads = np.concatenate([pegs, g.heads[peg_white | out_white]])
    gpp = RegionNetwork(r, Kind.SINK_SIDE, Terminal.AUX_SOURCE, Terminal.SINK,
                        np.flatnonzero((cls == WHITE) | (cls == PEG)), gpp_tails, gpp_heads)
    return gp, gpp


class CoordView(Sequence):
    """Lazy sequence of cell coordinates selected by an index array."""

    def __init__(self, region: Region, idx: np.ndarray):
        self.region = region
        self.idx = idx

    def __len__(self) -> int:
        return len(self.idx)

    def __getitem__(self, i):
        if isinstance(i, slice):
            return self.region.coords(self.idx[i])
        return self.region.coord(int(self.idx[i]))


@dataclass(frozen=True, eq=False)
class MatchGraph:
    """Undirected bipartite graph with ``left`` and ``right`` vertex labels.

    Edges are stored as parallel arrays of positions into ``left`` and
    ``right``. ``left_rank``/``right_rank`` order all vertices on one scale
    (for region graphs: row-major cell position); they fix the leaf queue
    seeding and the orientation of cycles.
    """

    left: Sequence
    right: Sequence
    edge_left: np.ndarray
    edge_right: np.ndarray
    left_rank: np.ndarray
    right_rank: np.ndarray

    @classmethod
    def from_edges(cls, left, right, edges) -> "MatchGraph":
        """Build from label lists and an iterable of ``(left_label, right_label)`` pairs.

        Duplicate edges are dropped. Vertices are ranked by sorted label when
        labels are comparable, otherwise by list position (left before right).
        """
        left, right = list(left), list(right)
        li = {v: i for i, v in enumerate(left)}
        ri = {v: i for i, v in enumerate(right)}
        pairs = sorted({(li[a], ri[b]) for a, b in edges})
        el = np.array([p[0] for p in pairs], dtype=np.int64)
        er = np.array([p[1] for p in pairs], dtype=np.int64)
        try:
            order = sorted(range(len(left) + len(right)), key=lambda k: left[k] if k < len(left) else right[k - len(left)])
        except TypeError:
            order = list(range(len(left) + len(right)))
        rank = np.empty(len(order), dtype=np.int64)
        rank[np.array(order, dtype=np.int64)] = np.arange(len(order))
        return cls(left, right, el, er, rank[: len(left)], rank[len(left):])

    @property
    def num_edges(self) -> int:
        return len(self.edge_left)

    @property
    def edges(self) -> frozenset:
        return frozenset((self.left[a], self.right[b]) for a, b in zip(self.edge_left.tolist(), self.edge_right.tolist()))

    def degrees(self):
        """(left degrees, right degrees) as arrays."""
        return (np.bincount(self.edge_left, minlength=len(self.left)),
                np.bincount(self.edge_right, minlength=len(self.right)))


def match_graph(g: RegionNetwork) -> MatchGraph:
    """Delete the terminals of ``G'`` (or ``G''``) and forget edge directions.

    For ``G'`` the left side is the black cells and the right side the pegs;
    for ``G''`` the left side is the pegs and the right side the white cells.
    """
    r = g.region
    n = r.n
    cls = r.cell_classes()
    if g.kind is Kind.SOURCE_SIDE:
        lmask, rmask = cls == BLACK, cls == PEG
    elif g.kind is Kind.SINK_SIDE:
        lmask, rmask = cls == PEG, cls == WHITE
    else:
        raise ValueError("match_graph expects a split network (G' or G'')")
    inner = (g.tails < n) & (g.heads < n)
    tails, heads = g.tails[inner], g.heads[inner]
    lidx, ridx = np.flatnonzero(lmask), np.flatnonzero(rmask)
    # position of each cell within its side
    pos = np.full(n, -1, dtype=np.int64)
    pos[lidx] = np.arange(len(lidx))
    pos[ridx] = np.arange(len(ridx))
    return MatchGraph(CoordView(r, lidx), CoordView(r, ridx), pos[tails], pos[heads], lidx, ridx)
