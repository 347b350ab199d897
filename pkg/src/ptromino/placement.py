"""Tromino placements and tilings as plain values."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Tuple

from .region import Coord


@dataclass(frozen=True, order=True)
class Placement:
    """One tromino: corner on a peg, tips ordered (black, white)."""

    corner: Coord
    black: Coord
    white: Coord

    @classmethod
    def from_cells(cls, corner: Coord, a: Coord, b: Coord) -> "Placement":
        """Order two tips by color: the tip in an even row is the black one."""
        return cls(corner, a, b) if a[0] % 2 == 0 else cls(corner, b, a)

    @property
    def cells(self) -> Tuple[Coord, Coord, Coord]:
        return (self.corner, self.black, self.white)


@dataclass(frozen=True)
class Tiling:
    placements: Tuple[Placement, ...]

    def __init__(self, placements: Iterable[Placement] = ()):
        object.__setattr__(self, "placements", tuple(sorted(placements)))

    def __len__(self) -> int:
        return len(self.placements)

    def __iter__(self):
        return iter(self.placements)
