import json
import xml.etree.ElementTree as ET

import pytest

from ptromino.counting import solve
from ptromino.instances import GenSpec, generate_tileable
from ptromino.maxflow import NotSaturating, flow_violations, max_flow
from ptromino.network import build_region_network
from ptromino.oracle import brute_force_enumerate
from ptromino.placement import Placement, Tiling
from ptromino.region import Region
from ptromino.tiling import (
    InvalidTiling,
    UnknownFormat,
    ViolationKind,
    flow_from_tiling,
    from_json,
    render,
    tiling_from_flow,
    to_json,
    validate_tiling,
)

from helpers import box_corpus, rect

EX23 = rect(2, 3, [(0, 0), (1, 2)])
EX23_TILING = Tiling([Placement((0, 0), (0, 1), (1, 0)), Placement((1, 2), (0, 2), (1, 1))])


def test_tiling_from_flow_example():
    f = max_flow(build_region_network(EX23))
    assert tiling_from_flow(EX23, f) == EX23_TILING


def test_empty_region():
    f = max_flow(build_region_network(Region()))
    assert tiling_from_flow(Region(), f) == Tiling()
    g = flow_from_tiling(Region(), Tiling())
    assert g.value == 0 and not g.values.any()


def test_non_saturating_flow_rejected():
    r = rect(2, 3, [(0, 1), (1, 1)])
    with pytest.raises(NotSaturating):
        tiling_from_flow(r, max_flow(build_region_network(r)))


def test_placements_are_ls():
    for seed in range(20):
        r = generate_tileable(GenSpec(60, seed=seed))
        t = tiling_from_flow(r, max_flow(build_region_network(r)))
        for p in t:
            (cr, cc), (br, bc), (wr, wc) = p.cells
            horizontal = [x for x in (p.black, p.white) if x[0] == cr]
            vertical = [x for x in (p.black, p.white) if x[1] == cc]
            assert len(horizontal) == len(vertical) == 1
        assert validate_tiling(r, t) is None


def test_round_trips_on_oracle_tilings():
    for i, r in enumerate(box_corpus(3, 3, (6, 9))):
        if i % 3:
            continue
        for t in brute_force_enumerate(r):
            f = flow_from_tiling(r, t)
            assert flow_violations(f.network, f.values) == []
            assert f.value == r.n // 3
            assert tiling_from_flow(r, f) == t
            assert flow_from_tiling(r, tiling_from_flow(r, f)) == f


def test_each_placement_covers_one_peg_black_white():
    for t in brute_force_enumerate(generate_tileable(GenSpec(18, seed=3))):
        for p in t:
            assert p.black[0] % 2 == 0 and p.white[0] % 2 == 1


@pytest.mark.parametrize("tiling, kind", [
    (Tiling([Placement((0, 0), (0, 1), (0, 2))]), ViolationKind.NOT_AN_L),
    (Tiling([Placement((0, 0), (0, 1), (1, 0))] * 2), ViolationKind.OVERLAP),
    (Tiling([Placement((0, 1), (0, 2), (1, 1))]), ViolationKind.CORNER_NOT_ON_PEG),
    (Tiling([Placement((0, 0), (0, 1), (1, 0))]), ViolationKind.UNCOVERED),
    (Tiling([Placement((0, 0), (0, -1), (1, 0))]), ViolationKind.OUTSIDE_REGION),
    (Tiling([Placement((0, 0), (1, 0), (0, 1))]), ViolationKind.TIP_COLOR),
])
def test_violations(tiling, kind):
    v = validate_tiling(EX23, tiling)
    assert v is not None and v.kind is kind


def test_tip_on_peg():
    r = rect(2, 3, [(0, 0), (0, 1)])
    v = validate_tiling(r, Tiling([Placement((0, 0), (0, 1), (1, 0))]))
    assert v.kind is ViolationKind.TIP_ON_PEG


def test_flow_from_invalid_tiling():
    with pytest.raises(InvalidTiling):
        flow_from_tiling(EX23, Tiling([Placement((0, 0), (0, 1), (1, 0))]))


def test_ascii_golden():
    assert render(EX23, EX23_TILING, "ascii") == b"abB\nAab\n"
    assert render(EX23, None, "ascii") == b"oo*\n*oo\n"
    assert render(Region(), None, "ascii") == b""


def test_ascii_letters_cycle():
    r = generate_tileable(GenSpec(3 * 30, seed=9))
    text = render(r, solve(r), "ascii").decode()
    assert "A" in text and "D" in text and text.count("A") == 2  # placements 0 and 26


def test_svg_structure():
    root = ET.fromstring(render(EX23, EX23_TILING, "svg"))
    ns = "{http://www.w3.org/2000/svg}"
    rects = root.findall(f"{ns}rect")
    circles = root.findall(f"{ns}circle")
    assert len(rects) == 6 and len(circles) == 2
    assert all(r.get("width") == "20" for r in rects)
    assert all(c.get("r") == "5" for c in circles)
    # peg (0,0) sits in the bottom row of a 2-row picture
    assert {(c.get("cx"), c.get("cy")) for c in circles} == {("10", "30"), ("50", "10")}


def test_json_schema_and_round_trip():
    doc = json.loads(render(EX23, EX23_TILING, "json"))
    assert doc == {
        "region": {"rows": 2, "cols": 3,
                   "cells": [[0, 0], [0, 1], [0, 2], [1, 0], [1, 1], [1, 2]],
                   "pegs": [[0, 0], [1, 2]]},
        "placements": [{"corner": [0, 0], "black": [0, 1], "white": [1, 0]},
                       {"corner": [1, 2], "black": [0, 2], "white": [1, 1]}],
    }
    assert from_json(to_json(EX23, EX23_TILING)) == (EX23, EX23_TILING)
    assert from_json(to_json(EX23)) == (EX23, None)


def test_unknown_format():
    with pytest.raises(UnknownFormat):
        render(EX23, None, "png")


def test_render_is_deterministic():
    r = generate_tileable(GenSpec(120, seed=4))
    t = solve(r)
    for fmt in ("ascii", "svg", "json"):
        assert render(r, t, fmt) == render(r, t, fmt)
