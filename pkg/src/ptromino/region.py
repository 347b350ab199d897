"""Regions with pegs: parsing, validation, coloring and serialization.

Coordinates are ``(row, col)`` with row 0 at the bottom of the board. In the
text grid format rows are listed top to bottom, so the last data line is
row 0 and column 0 is the leftmost character::

    # a 2x3 board, pegs at (1,2) and (0,0)
    ooP
    Poo

Internally a region keeps its cells as parallel numpy arrays sorted in
row-major order (row, then column). Everything downstream refers to a cell
by its position in that order.
"""

from __future__ import annotations

import enum
from functools import cached_property
from typing import Iterable, Optional, Tuple

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

Coord = Tuple[int, int]

MAX_COORD = 2**31 - 1

CELL_CHAR = "o"
PEG_CHAR = "P"
EMPTY_CHAR = "."
COMMENT_CHAR = "#"

# Neighbour directions, listed so that the neighbours of a cell come out in
# row-major order: below, left, right, above.
DIRECTIONS = ((-1, 0), (0, -1), (0, 1), (1, 0))

BLACK, WHITE, PEG = 0, 1, 2


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class ValidationError(ValueError):
    """Raised when cells and pegs do not form a valid region.

    ``reason`` is one of ``"Disconnected"``, ``"PegOutsideRegion"`` or
    ``"CoordinateOutOfRange"``.
    """

    def __init__(self, reason: str, detail: str = ""):
        super().__init__(f"{reason}: {detail}" if detail else reason)
        self.reason = reason


class RejectReason(enum.Enum):
    NOT_MULTIPLE_OF_3 = "NotMultipleOf3"
    PEG_COUNT_MISMATCH = "PegCountMismatch"
    COLOR_IMBALANCE = "ColorImbalance"


def _keys(rows: np.ndarray, cols: np.ndarray) -> np.ndarray:
    return (rows.astype(np.int64) << 32) | cols.astype(np.int64)


class Region:
    """A 4-connected set of unit cells, some of which carry pegs.

    Construct from coordinates with ``Region(cells, pegs)`` or from arrays with
    :meth:`Region.from_arrays`. Instances are immutable and compare by value.
    """

    def __init__(self, cells: Iterable[Coord] = (), pegs: Iterable[Coord] = (), *, validate: bool = True):
        cell_list = list(cells)
        peg_list = list(pegs)
        rows = np.array([c[0] for c in cell_list], dtype=np.int64)
        cols = np.array([c[1] for c in cell_list], dtype=np.int64)
        keys = _keys(rows, cols)
        if peg_list:
            pkeys = _keys(np.array([p[0] for p in peg_list], dtype=np.int64),
                          np.array([p[1] for p in peg_list], dtype=np.int64))
        else:
            pkeys = np.empty(0, dtype=np.int64)
        self._init_from_keys(rows, cols, keys, pkeys, validate)

    @classmethod
    def from_arrays(cls, rows, cols, peg=None, *, validate: bool = True) -> "Region":
        """Build a region from parallel ``rows``/``cols`` arrays and a boolean peg mask."""
        rows = np.asarray(rows, dtype=np.int64)
        cols = np.asarray(cols, dtype=np.int64)
        if peg is None:
            peg = np.zeros(rows.shape, dtype=bool)
        peg = np.asarray(peg, dtype=bool)
        if not (rows.shape == cols.shape == peg.shape) or rows.ndim != 1:
            raise ValueError("rows, cols and peg must be 1-D arrays of equal length")
        keys = _keys(rows, cols)
        self = cls.__new__(cls)
        self._init_from_keys(rows, cols, keys, keys[peg], validate)
        return self

    def _init_from_keys(self, rows, cols, keys, peg_keys, validate):
        if validate and len(rows):
            bad = (rows < 0) | (rows > MAX_COORD) | (cols < 0) | (cols > MAX_COORD)
            if bad.any():
                i = int(np.argmax(bad))
                raise ValidationError("CoordinateOutOfRange", f"({rows[i]}, {cols[i]})")
        keys, first = np.unique(keys, return_index=True)
        self._keys = keys
        self.rows = rows[first]
        self.cols = cols[first]
        peg_keys = np.unique(peg_keys)
        pos = np.searchsorted(keys, peg_keys)
        inside = pos < len(keys)
        inside[inside] = keys[pos[inside]] == peg_keys[inside]
        if not inside.all():
            k = int(peg_keys[~inside][0])
            raise ValidationError("PegOutsideRegion", f"({k >> 32}, {k & 0xFFFFFFFF})")
        self.peg = np.zeros(len(keys), dtype=bool)
        self.peg[pos] = True
        for a in (self.rows, self.cols, self.peg, self._keys):
            a.setflags(write=False)
        if validate and not self.is_connected():
            raise ValidationError("Disconnected", f"{self.num_components()} components")

    # -- basic accessors -------------------------------------------------

    @property
    def n(self) -> int:
        return len(self._keys)

    def __len__(self) -> int:
        return self.n

    @property
    def num_pegs(self) -> int:
        return int(self.peg.sum())

    @cached_property
    def cells(self) -> frozenset:
        return frozenset(zip(self.rows.tolist(), self.cols.tolist()))

    @cached_property
    def pegs(self) -> frozenset:
        return frozenset(zip(self.rows[self.peg].tolist(), self.cols[self.peg].tolist()))

    def coord(self, i: int) -> Coord:
        return (int(self.rows[i]), int(self.cols[i]))

    def coords(self, idx) -> list:
        idx = np.asarray(idx, dtype=np.int64)
        return list(zip(self.rows[idx].tolist(), self.cols[idx].tolist()))

    def index_of(self, coords) -> np.ndarray:
        """Positions of ``coords`` (an (m, 2) array-like) in row-major order; -1 if absent."""
        arr = np.asarray(coords, dtype=np.int64).reshape(-1, 2)
        if self.n == 0:
            return np.full(len(arr), -1, dtype=np.int64)
        q = _keys(arr[:, 0], arr[:, 1])
        pos = np.minimum(np.searchsorted(self._keys, q), self.n - 1)
        return np.where(self._keys[pos] == q, pos, -1)

    def __contains__(self, c) -> bool:
        return bool(self.n) and self.index_of([c])[0] >= 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, Region):
            return NotImplemented
        return np.array_equal(self._keys, other._keys) and np.array_equal(self.peg, other.peg)

    def __hash__(self) -> int:
        return hash((self._keys.tobytes(), self.peg.tobytes()))

    def __repr__(self) -> str:
        if self.n <= 12:
            return f"Region(cells={sorted(self.cells)}, pegs={sorted(self.pegs)})"
        return f"Region(n={self.n}, pegs={self.num_pegs})"

    # -- geometry --------------------------------------------------------

    def neighbor_table(self) -> np.ndarray:
        """(n, 4) array of neighbour positions in :data:`DIRECTIONS` order, -1 where absent.

        Uses a dense index grid when the bounding box is small relative to n
        (linear time) and binary search over the sorted keys otherwise.
        """
        n = self.n
        out = np.full((n, 4), -1, dtype=np.int64)
        if n == 0:
            return out
        r0, c0 = int(self.rows.min()), int(self.cols.min())
        h = int(self.rows.max()) - r0 + 3
        w = int(self.cols.max()) - c0 + 3
        if h * w <= 8 * n + 1024:
            grid = np.full((h, w), -1, dtype=np.int64)
            rr = self.rows - r0 + 1
            cc = self.cols - c0 + 1
            grid[rr, cc] = np.arange(n)
            for d, (dr, dc) in enumerate(DIRECTIONS):
                out[:, d] = grid[rr + dr, cc + dc]
        else:
            for d, (dr, dc) in enumerate(DIRECTIONS):
                nr, nc = self.rows + dr, self.cols + dc
                ok = (nr >= 0) & (nc >= 0)
                q = _keys(np.where(ok, nr, 0), np.where(ok, nc, 0))
                pos = np.minimum(np.searchsorted(self._keys, q), n - 1)
                out[:, d] = np.where(ok & (self._keys[pos] == q), pos, -1)
        return out

    def num_components(self) -> int:
        if self.n == 0:
            return 0
        nbr = self.neighbor_table()
        src = np.repeat(np.arange(self.n), 4)
        dst = nbr.ravel()
        keep = dst >= 0
        adj = coo_matrix((np.ones(int(keep.sum()), dtype=np.int8), (src[keep], dst[keep])),
                         shape=(self.n, self.n))
        k, _ = connected_components(adj, directed=False)
        return int(k)

    def is_connected(self) -> bool:
        return self.n == 0 or self.num_components() == 1

    def cell_classes(self) -> np.ndarray:
        """Per-cell class code: ``BLACK`` (even row), ``WHITE`` (odd row) or ``PEG``."""
        cls = (self.rows & 1).astype(np.int8)
        cls[self.peg] = PEG
        return cls

    @property
    def shape(self) -> Tuple[int, int]:
        """(rows, cols) of the grid spanned from the origin, ``(0, 0)`` when empty."""
        if self.n == 0:
            return (0, 0)
        return (int(self.rows.max()) + 1, int(self.cols.max()) + 1)


def classify(r: Region):
    """Split cells into (black, white, peg) coordinate sets.

    Black cells are unpegged cells in even rows, white cells unpegged cells
    in odd rows.
    """
    cls = r.cell_classes()
    return tuple(frozenset(r.coords(np.flatnonzero(cls == k))) for k in (BLACK, WHITE, PEG))


def feasibility_precheck(r: Region) -> Optional[RejectReason]:
    n = r.n
    if n % 3:
        return RejectReason.NOT_MULTIPLE_OF_3
    if r.num_pegs != n // 3:
        return RejectReason.PEG_COUNT_MISMATCH
    cls = r.cell_classes()
    if int((cls == BLACK).sum()) != int((cls == WHITE).sum()):
        return RejectReason.COLOR_IMBALANCE
    return None


def parse_region(text: str) -> Region:
    """Parse the text grid format into a :class:`Region`.

    ``#`` lines are comments. Every other line is a board row; a blank line is
    a row without cells. Trailing whitespace is ignored.
    """
    rows_text = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if line.startswith(COMMENT_CHAR):
            continue
        rows_text.append((lineno, line.rstrip()))
    height = len(rows_text)
    cells, pegs = [], []
    for i, (lineno, line) in enumerate(rows_text):
        row = height - 1 - i
        for col, ch in enumerate(line):
            if ch == CELL_CHAR:
                cells.append((row, col))
            elif ch == PEG_CHAR:
                cells.append((row, col))
                pegs.append((row, col))
            elif ch != EMPTY_CHAR:
                raise ParseError(f"unexpected character {ch!r}", lineno, col + 1)
    return Region(cells, pegs)


def serialize_region(r: Region) -> str:
    """Canonical grid text: rows from the topmost cell row down to row 0.

    Trailing ``.`` are dropped; a row with no cells is written as a single ``.``
    so that every row stays visible.
    """
    if r.n == 0:
        return ""
    height = int(r.rows.max()) + 1
    lines = []
    # cells are sorted row-major, so each row is one contiguous slice
    starts = np.searchsorted(r.rows, np.arange(height + 1))
    for row in range(height - 1, -1, -1):
        lo, hi = starts[row], starts[row + 1]
        if lo == hi:
            lines.append(EMPTY_CHAR)
            continue
        cols = r.cols[lo:hi]
        chars = np.full(int(cols[-1]) + 1, EMPTY_CHAR, dtype="<U1")
        chars[cols] = np.where(r.peg[lo:hi], PEG_CHAR, CELL_CHAR)
        lines.append("".join(chars.tolist()))
    return "\n".join(lines) + "\n"
