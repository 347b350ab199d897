"""Reproducible instance generators.

Randomness comes from SplitMix64 (Steele, Lea and Flood), seeded with the
64-bit ``seed``: the state advances by 0x9E3779B97F4A7C15 per draw and each
output is the state passed through the standard two-multiply finalizer. An
integer below ``m`` is drawn as ``output % m``. The same seed therefore gives
the same region in any implementation that follows these rules.

Default bounds are a square of side ``ceil(sqrt(2 * cells)) + 2`` with the
first piece placed at its middle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import _gen_kernels as gk
from .region import Region

MAX_RETRIES = 1000
MASK64 = (1 << 64) - 1


class GenerationStalled(RuntimeError):
    pass


class SplitMix64:
    """Pure-Python SplitMix64, bit-identical to the generator used by the growers."""

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, m: int) -> int:
        return self.next() % m


@dataclass(frozen=True)
class GenSpec:
    target_cells: int
    rows: Optional[int] = None
    cols: Optional[int] = None
    seed: int = 0
    kind: str = "tileable"

    def __post_init__(self):
        if self.target_cells < 0 or self.target_cells % 3:
            raise ValueError(f"target_cells must be a non-negative multiple of 3, got {self.target_cells}")
        if self.kind not in ("tileable", "random"):
            raise ValueError(f"kind must be 'tileable' or 'random', got {self.kind!r}")

    def bounds(self):
        side = math.isqrt(2 * self.target_cells)
        side = (side if side * side == 2 * self.target_cells else side + 1) + 2
        return (self.rows or side, self.cols or side)


def _to_region(occ: np.ndarray, cols: int) -> Region:
    idx = np.flatnonzero(occ)
    return Region.from_arrays(idx // cols, idx % cols, occ[idx] == 2)


def generate_tileable(spec: GenSpec) -> Region:
    """Region grown from random L-trominoes, each with a peg under its corner.

    The pieces it was grown from form a tiling, so at least one exists.
    """
    rows, cols = spec.bounds()
    if spec.target_cells and (rows < 2 or cols < 2):
        raise GenerationStalled("bounds must be at least 2x2")
    status, occ = gk.grow_tileable(spec.target_cells, rows, cols, np.uint64(spec.seed & MASK64), MAX_RETRIES)
    if status != gk.OK:
        raise GenerationStalled(
            f"could not attach a tromino after {MAX_RETRIES} retries "
            f"({int((occ > 0).sum())} of {spec.target_cells} cells in {rows}x{cols})")
    return _to_region(occ, cols)


def generate_random(spec: GenSpec) -> Region:
    """Random connected polyomino with exactly ``target_cells / 3`` pegs; may not be tileable."""
    rows, cols = spec.bounds()
    if spec.target_cells > rows * cols:
        raise GenerationStalled(f"{spec.target_cells} cells do not fit in {rows}x{cols}")
    status, occ = gk.grow_random(spec.target_cells, spec.target_cells // 3, rows, cols,
                                 np.uint64(spec.seed & MASK64))
    if status != gk.OK:
        raise GenerationStalled(f"ran out of frontier at {int((occ > 0).sum())} cells")
    return _to_region(occ, cols)


def generate(spec: GenSpec) -> Region:
    return generate_tileable(spec) if spec.kind == "tileable" else generate_random(spec)
