"""Maximum flows on region networks, and their st-path decomposition.

Cell nodes carry capacity 1. The solver enforces that by splitting each cell
node into an in-half and an out-half joined by a unit edge, which turns the
problem into plain unit edge capacities; Dinic's algorithm then runs on the
split graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List

import numpy as np

from ._flow_kernels import dinic_unit
from .network import Kind, RegionNetwork, build_region_network
from .region import Coord, Region, feasibility_precheck


class NotSaturating(ValueError):
    """The flow does not have value n/3, so it does not describe a tiling."""


@dataclass(frozen=True, eq=False)
class Flow:
    """Integral flow on ``network``: ``values[k]`` is the flow on edge ``k``."""

    network: RegionNetwork
    values: np.ndarray
    value: int

    @property
    def assignment(self) -> dict:
        return {e: int(x) for e, x in zip(self.network.edges, self.values.tolist())}

    def __eq__(self, other) -> bool:
        if not isinstance(other, Flow):
            return NotImplemented
        a, b = self.network, other.network
        return (self.value == other.value
                and a.region == b.region and a.kind is b.kind
                and np.array_equal(a.tails, b.tails) and np.array_equal(a.heads, b.heads)
                and np.array_equal(self.values, other.values))

    __hash__ = None


@dataclass(frozen=True, order=True)
class StPath:
    """The path s -> black -> peg -> white -> t."""

    black: Coord
    peg: Coord
    white: Coord


def max_flow(g: RegionNetwork) -> Flow:
    """An integral maximum flow on ``g`` respecting edge and vertex capacities."""
    n = g.region.n
    size = n + 2
    # cell c becomes c (in) and c + size (out); terminals are not split
    out_of = lambda x: np.where(x < n, x + size, x)
    cells = g.cell_nodes
    tails = np.concatenate([out_of(g.tails), cells])
    heads = np.concatenate([g.heads, cells + size])
    value, used = dinic_unit(2 * size, tails, heads, g.source_id, g.sink_id)
    return Flow(g, used[: g.num_edges].copy(), int(value))


def flow_violations(g: RegionNetwork, values) -> List[str]:
    """Check the edge, vertex and conservation constraints of a flow.

    Independent of the solver; returns human-readable violations, empty when
    the assignment is a valid flow.
    """
    values = np.asarray(values, dtype=np.int64)
    problems = []
    if values.shape != (g.num_edges,):
        return [f"expected {g.num_edges} edge values, got shape {values.shape}"]
    bad = np.flatnonzero((values < 0) | (values > 1))
    problems += [f"edge {g.edges[k]} carries {values[k]}" for k in bad[:5]]
    size = g.region.n + 2
    inflow = np.bincount(g.heads, weights=values, minlength=size)
    outflow = np.bincount(g.tails, weights=values, minlength=size)
    cells = g.cell_nodes
    over = cells[inflow[cells] > 1]
    problems += [f"node {g.label(int(v))} receives {int(inflow[v])}" for v in over[:5]]
    unbalanced = cells[inflow[cells] != outflow[cells]]
    problems += [f"node {g.label(int(v))} not conserved ({int(inflow[v])} in, {int(outflow[v])} out)"
                 for v in unbalanced[:5]]
    if inflow[g.source_id] != 0 or outflow[g.sink_id] != 0:
        problems.append("flow enters the source or leaves the sink")
    return problems


def flow_value(g: RegionNetwork, values) -> int:
    values = np.asarray(values, dtype=np.int64)
    return int(values[g.tails == g.source_id].sum())


def decide_via_maxflow(r: Region) -> bool:
    """True iff ``r`` can be tiled, decided by a maximum flow of value n/3."""
    if r.n == 0:
        return True
    if feasibility_precheck(r) is not None:
        return False
    return max_flow(build_region_network(r)).value == r.n // 3


def decompose_paths(g: RegionNetwork, f: Flow) -> List[StPath]:
    """Split a saturating flow on a full region network into its st-paths.

    Every cell lies on exactly one path, so each peg with flow through it
    names its unique black predecessor and white successor. Paths come out
    sorted by peg.
    """
    if g.kind is not Kind.FULL:
        raise ValueError("decompose_paths expects a full region network")
    r = g.region
    n = r.n
    if f.value != n // 3 or n % 3:
        raise NotSaturating(f"flow value {f.value}, need {n // 3}")
    if n == 0:
        return []
    peg = r.peg
    used = f.values.astype(bool)
    inner = (g.tails < n) & (g.heads < n) & used
    tails, heads = g.tails[inner], g.heads[inner]
    into_peg = peg[heads]
    black_of = np.full(n, -1, dtype=np.int64)
    white_of = np.full(n, -1, dtype=np.int64)
    black_of[heads[into_peg]] = tails[into_peg]
    white_of[tails[~into_peg]] = heads[~into_peg]
    pegs = np.flatnonzero(peg)
    if (black_of[pegs] < 0).any() or (white_of[pegs] < 0).any():
        raise NotSaturating("some peg carries no flow")
    blacks = r.coords(black_of[pegs])
    whites = r.coords(white_of[pegs])
    return [StPath(b, p, w) for b, p, w in zip(blacks, r.coords(pegs), whites)]


def flow_from_paths(g: RegionNetwork, paths) -> Flow:
    """Put one unit of flow along each s -> black -> peg -> white -> t path."""
    r = g.region
    index = g.edge_index()
    values = np.zeros(g.num_edges, dtype=np.int8)
    if paths:
        arr = np.array([(p.black, p.peg, p.white) for p in paths], dtype=np.int64)
        b, c, w = (r.index_of(arr[:, i, :]) for i in range(3))
        s, t = g.source_id, g.sink_id
        for hops in zip(b.tolist(), c.tolist(), w.tolist()):
            bi, ci, wi = hops
            for e in ((s, bi), (bi, ci), (ci, wi), (wi, t)):
                k = index.get(e)
                if k is None:
                    raise ValueError(f"edge {g.label(e[0])} -> {g.label(e[1])} is not in the network")
                values[k] += 1
    return Flow(g, values, flow_value(g, values))


def flow_from_matchings(g: RegionNetwork, black_peg, peg_white) -> Flow:
    """Flow induced by a perfect matching of H and one of H''.

    ``black_peg`` and ``peg_white`` are iterables of coordinate pairs. Each
    peg's black partner and white partner become one st-path.
    """
    white_of = {p: w for p, w in peg_white}
    paths = [StPath(b, p, white_of[p]) for b, p in black_peg]
    return flow_from_paths(g, paths)
