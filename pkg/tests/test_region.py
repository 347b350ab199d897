import pytest
from hypothesis import given, settings, strategies as st

from ptromino.instances import GenSpec, generate_random, generate_tileable
from ptromino.region import (
    ParseError,
    Region,
    RejectReason,
    ValidationError,
    classify,
    feasibility_precheck,
    parse_region,
    serialize_region,
)

from helpers import connected, rect


def test_parse_two_by_two():
    r = parse_region("oP\nPo\n")
    assert r.cells == {(0, 0), (0, 1), (1, 0), (1, 1)}
    assert r.pegs == {(0, 0), (1, 1)}


def test_parse_single_row():
    r = parse_region("ooo\n")
    assert r.cells == {(0, 0), (0, 1), (0, 2)}
    assert r.pegs == frozenset()


def test_parse_disconnected():
    with pytest.raises(ValidationError) as e:
        parse_region("o.o\n")
    assert e.value.reason == "Disconnected"


def test_parse_bad_character_reports_position():
    with pytest.raises(ParseError) as e:
        parse_region("# header\nooo\noxo\n")
    assert (e.value.line, e.value.column) == (3, 2)


def test_parse_comments_and_short_rows():
    r = parse_region("# comment\no\noo\n")
    assert r.cells == {(1, 0), (0, 0), (0, 1)}


def test_blank_line_is_an_empty_row():
    r = parse_region("oo\n.\n")
    assert r.cells == {(1, 0), (1, 1)}


def test_peg_outside_region_rejected():
    with pytest.raises(ValidationError) as e:
        Region([(0, 0)], [(0, 1)])
    assert e.value.reason == "PegOutsideRegion"


def test_negative_coordinates_rejected():
    with pytest.raises(ValidationError) as e:
        Region([(-1, 0)])
    assert e.value.reason == "CoordinateOutOfRange"


def test_classify_two_by_three():
    r = rect(2, 3, [(0, 0), (1, 2)])
    b, w, p = classify(r)
    assert b == {(0, 1), (0, 2)}
    assert w == {(1, 0), (1, 1)}
    assert p == {(0, 0), (1, 2)}


def test_classify_all_pegged():
    r = rect(2, 2, [(0, 0), (0, 1), (1, 0), (1, 1)])
    b, w, p = classify(r)
    assert b == w == frozenset()
    assert p == r.cells


def test_classify_single_odd_row_cell():
    b, w, p = classify(Region([(1, 5)]))
    assert (b, w, p) == (frozenset(), {(1, 5)}, frozenset())


@pytest.mark.parametrize("region, expected", [
    (rect(2, 2), RejectReason.NOT_MULTIPLE_OF_3),
    (rect(2, 3, [(0, 0)]), RejectReason.PEG_COUNT_MISMATCH),
    (rect(2, 3, [(0, 0), (1, 2)]), None),
    # three black cells in row 0, all white cells pegged: one unpegged row only
    (rect(1, 3, [(0, 0)]), RejectReason.COLOR_IMBALANCE),
    (Region(), None),
])
def test_precheck(region, expected):
    assert feasibility_precheck(region) == expected


def test_serialize_two_by_three():
    assert serialize_region(rect(2, 3, [(0, 0), (1, 2)])) == "ooP\nPoo\n"


def test_serialize_empty():
    assert serialize_region(Region()) == ""
    assert parse_region("") == Region()


def test_serialize_keeps_offset_rows_and_columns():
    r = Region([(2, 3), (2, 4), (3, 4)], [(2, 4)])
    text = serialize_region(r)
    assert text == "....o\n...oP\n.\n.\n"
    assert parse_region(text) == r


def test_sparse_region_neighbours():
    # spread-out coordinates take the binary-search path
    r = Region([(0, 10**6), (1, 10**6), (1, 10**6 + 1)])
    nbr = r.neighbor_table()
    assert (nbr >= 0).sum() == 4
    assert r.is_connected()


@st.composite
def polyominoes(draw, max_cells=20):
    cells = {(draw(st.integers(0, 5)), draw(st.integers(0, 5)))}
    for _ in range(draw(st.integers(0, max_cells - 1))):
        r, c = draw(st.sampled_from(sorted(cells)))
        dr, dc = draw(st.sampled_from([(1, 0), (-1, 0), (0, 1), (0, -1)]))
        if r + dr >= 0 and c + dc >= 0:
            cells.add((r + dr, c + dc))
    pegs = draw(st.sets(st.sampled_from(sorted(cells))))
    return Region(cells, pegs)


@given(polyominoes())
def test_round_trip(r):
    text = serialize_region(r)
    assert parse_region(text) == r
    assert serialize_region(parse_region(text)) == text


@given(polyominoes())
def test_classify_partitions_cells(r):
    b, w, p = classify(r)
    assert not (b & w) and not (b & p) and not (w & p)
    assert b | w | p == r.cells
    assert all(c[0] % 2 == 0 for c in b) and all(c[0] % 2 == 1 for c in w)


@settings(max_examples=50)
@given(st.text(alphabet="oP.\n#", max_size=40))
def test_parsed_regions_are_connected(text):
    try:
        r = parse_region(text)
    except (ValidationError, ParseError):
        return
    assert connected(r.cells)


@pytest.mark.parametrize("seed", range(5))
def test_generated_regions_round_trip(seed):
    for r in (generate_tileable(GenSpec(30, seed=seed)), generate_random(GenSpec(30, seed=seed, kind="random"))):
        assert parse_region(serialize_region(r)) == r
