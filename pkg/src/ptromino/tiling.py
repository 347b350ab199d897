"""Tilings by cornered trominoes: validation, flow conversion and rendering."""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from typing import Optional

from .maxflow import Flow, NotSaturating, StPath, decompose_paths, flow_from_paths
from .network import build_region_network
from .placement import Placement, Tiling
from .region import Coord, Region


class ViolationKind(enum.Enum):
    OUTSIDE_REGION = "OutsideRegion"
    CORNER_NOT_ON_PEG = "CornerNotOnPeg"
    TIP_ON_PEG = "TipOnPeg"
    NOT_AN_L = "NotAnL"
    TIP_COLOR = "TipColor"
    OVERLAP = "Overlap"
    UNCOVERED = "Uncovered"


@dataclass(frozen=True)
class Violation:
    kind: ViolationKind
    cell: Coord
    placement: Optional[Placement] = None

    def __str__(self) -> str:
        where = f" in {self.placement}" if self.placement else ""
        return f"{self.kind.value} at {self.cell}{where}"


class InvalidTiling(ValueError):
    def __init__(self, violation: Violation):
        super().__init__(str(violation))
        self.violation = violation


def _is_l(p: Placement) -> bool:
    (cr, cc), (br, bc), (wr, wc) = p.corner, p.black, p.white
    db = abs(br - cr) + abs(bc - cc)
    dw = abs(wr - cr) + abs(wc - cc)
    if db != 1 or dw != 1:
        return False
    # one tip shares the corner's row, the other its column
    return (br == cr) != (wr == cr)


def validate_tiling(r: Region, t: Tiling) -> Optional[Violation]:
    """First violated rule, or None when ``t`` is a tiling of ``r``.

    Placements are checked in canonical order; coverage is checked last.
    """
    cells, pegs = r.cells, r.pegs
    covered = set()
    for p in t.placements:
        for c in p.cells:
            if c not in cells:
                return Violation(ViolationKind.OUTSIDE_REGION, c, p)
        if p.corner not in pegs:
            return Violation(ViolationKind.CORNER_NOT_ON_PEG, p.corner, p)
        for c in (p.black, p.white):
            if c in pegs:
                return Violation(ViolationKind.TIP_ON_PEG, c, p)
        if not _is_l(p):
            return Violation(ViolationKind.NOT_AN_L, p.corner, p)
        if p.black[0] % 2 or not p.white[0] % 2:
            return Violation(ViolationKind.TIP_COLOR, p.black, p)
        for c in p.cells:
            if c in covered:
                return Violation(ViolationKind.OVERLAP, c, p)
            covered.add(c)
    if len(covered) != len(cells):
        return Violation(ViolationKind.UNCOVERED, min(cells - covered))
    return None


def tiling_from_flow(r: Region, f: Flow) -> Tiling:
    """Place one tromino on every peg, using the black and white cells on its st-path."""
    if f.network.region != r:
        raise ValueError("flow belongs to a different region")
    if f.value != r.n // 3 or r.n % 3:
        raise NotSaturating(f"flow value {f.value}, need {r.n // 3}")
    return Tiling(Placement(p.peg, p.black, p.white) for p in decompose_paths(f.network, f))


def flow_from_tiling(r: Region, t: Tiling) -> Flow:
    """One unit of flow along s -> black -> corner -> white -> t per placement."""
    v = validate_tiling(r, t)
    if v is not None:
        raise InvalidTiling(v)
    g = build_region_network(r)
    return flow_from_paths(g, [StPath(p.black, p.corner, p.white) for p in t.placements])


# -- rendering ----------------------------------------------------------------

FORMATS = ("ascii", "svg", "json")

SCALE = 20
PEG_RADIUS = 5
PALETTE = ("#e6194b", "#3cb44b", "#ffe119", "#4363d8", "#f58231", "#911eb4",
           "#46f0f0", "#f032e6", "#bcf60c", "#fabebe", "#008080", "#e6beff")


class UnknownFormat(ValueError):
    pass


def render(r: Region, t: Optional[Tiling] = None, fmt: str = "ascii") -> bytes:
    if fmt == "ascii":
        return render_ascii(r, t).encode()
    if fmt == "svg":
        return render_svg(r, t).encode()
    if fmt == "json":
        return (to_json(r, t) + "\n").encode()
    raise UnknownFormat(f"unknown format {fmt!r}; expected one of {', '.join(FORMATS)}")


def render_ascii(r: Region, t: Optional[Tiling] = None) -> str:
    """Text picture, top row first, padded to the bounding box with ``.``.

    Without a tiling cells print as ``o`` and pegs as ``*``. With one, the
    i-th placement in canonical order gets letter ``'a' + i % 26`` and its
    peg cell shows the letter in upper case.
    """
    if r.n == 0:
        return ""
    height, width = r.shape
    grid = [["."] * width for _ in range(height)]
    if t is None:
        for (row, col) in r.cells:
            grid[row][col] = "o"
        for (row, col) in r.pegs:
            grid[row][col] = "*"
    else:
        for i, p in enumerate(t.placements):
            letter = chr(ord("a") + i % 26)
            for (row, col) in p.cells:
                grid[row][col] = letter
            grid[p.corner[0]][p.corner[1]] = letter.upper()
    return "".join("".join(line) + "\n" for line in reversed(grid))


def render_svg(r: Region, t: Optional[Tiling] = None) -> str:
    """SVG with one 20px square per cell and a radius-5 circle on each peg.

    Row 0 is drawn at the bottom. Tromino cells are filled by placement.
    """
    height, width = r.shape
    fill = {}
    if t is not None:
        for i, p in enumerate(t.placements):
            for c in p.cells:
                fill[c] = PALETTE[i % len(PALETTE)]
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{width * SCALE}" '
           f'height="{height * SCALE}" viewBox="0 0 {width * SCALE} {height * SCALE}">']
    for (row, col) in sorted(r.cells):
        x, y = col * SCALE, (height - 1 - row) * SCALE
        color = fill.get((row, col), "#ffffff")
        out.append(f'<rect x="{x}" y="{y}" width="{SCALE}" height="{SCALE}" '
                   f'fill="{color}" stroke="#000000" stroke-width="1"/>')
    for (row, col) in sorted(r.pegs):
        cx, cy = col * SCALE + SCALE // 2, (height - 1 - row) * SCALE + SCALE // 2
        out.append(f'<circle cx="{cx}" cy="{cy}" r="{PEG_RADIUS}" fill="#000000"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def to_dict(r: Region, t: Optional[Tiling] = None) -> dict:
    height, width = r.shape
    doc = {"region": {"rows": height, "cols": width,
                      "cells": [list(c) for c in sorted(r.cells)],
                      "pegs": [list(c) for c in sorted(r.pegs)]}}
    if t is not None:
        doc["placements"] = [{"corner": list(p.corner), "black": list(p.black), "white": list(p.white)}
                             for p in t.placements]
    return doc


def to_json(r: Region, t: Optional[Tiling] = None) -> str:
    return json.dumps(to_dict(r, t))


def from_json(text: str):
    """Inverse of :func:`to_json`: returns ``(region, tiling or None)``."""
    doc = json.loads(text)
    reg = doc["region"]
    r = Region([tuple(c) for c in reg["cells"]], [tuple(c) for c in reg["pegs"]])
    if "placements" not in doc:
        return r, None
    t = Tiling(Placement(tuple(p["corner"]), tuple(p["black"]), tuple(p["white"])) for p in doc["placements"])
    return r, t
