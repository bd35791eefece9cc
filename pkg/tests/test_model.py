from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from resolvable_designs.errors import MalformedBlock, ParseError
from resolvable_designs.model import (
    SHAPES,
    Block,
    ParallelClass,
    block,
    canonical_block,
    edges_of_block,
    format_block,
    get_shape,
    pair,
    parse_block,
    point_sort_key,
    sort_points,
)

EDGE_COUNTS = {"K2": 1, "P3": 2, "P4": 3, "K3": 3, "C4": 4, "K13": 3, "KITE": 4, "K4E": 5, "K4": 6}


def edge_set(b):
    return sorted(edges_of_block(b))


@pytest.mark.parametrize("name,count", EDGE_COUNTS.items())
def test_shape_edge_counts(name, count):
    shape = get_shape(name)
    assert shape.edge_count == count
    assert shape.vertex_count in (2, 3, 4)


def test_k4e_edge_multiset():
    b = block("K4E", "1", "2", "0", "3")
    assert edge_set(b) == sorted(
        [("1", "2"), ("0", "1"), ("0", "2"), ("1", "3"), ("2", "3")]
    )


def test_kite_edge_multiset():
    b = block("KITE", "0", "2", "3", "1")
    assert edge_set(b) == sorted([("0", "2"), ("0", "3"), ("2", "3"), ("1", "3")])


def test_star_edge_multiset():
    b = block("K13", "0", "1", "2", "3")
    assert edge_set(b) == [("0", "1"), ("0", "2"), ("0", "3")]


@pytest.mark.parametrize("name", SHAPES)
def test_edge_count_matches_shape(name):
    shape = get_shape(name)
    pts = tuple(str(i) for i in range(shape.vertex_count))
    b = Block(shape, pts)
    edges = edges_of_block(b)
    assert len(edges) == shape.edge_count
    assert len(set(edges)) == shape.edge_count
    for x, y in edges:
        assert x in pts and y in pts


def test_duplicate_point_rejected():
    with pytest.raises(MalformedBlock):
        block("C4", "0", "1", "0", "2")


def test_parse_k4e_with_infinity():
    b = parse_block("(inf,4,5;0)", get_shape("K4E"))
    assert b.points == ("inf", "4", "5", "0")


def test_parse_star():
    b = parse_block("(0;1,2,3)", get_shape("K13"))
    assert b.points == ("0", "1", "2", "3")


def test_parse_kite():
    b = parse_block("(0,2,3-1)", get_shape("KITE"))
    assert b.points == ("0", "2", "3", "1")


def test_parse_path():
    b = parse_block("[a1,0,7]", get_shape("P3"))
    assert b.points == ("a1", "0", "7")


def test_format_round_trip_cycle():
    text = "(0,1,2,3)"
    assert format_block(parse_block(text, get_shape("C4"))) == text


@pytest.mark.parametrize(
    "text,shape",
    [
        ("(0,1,2;3", "K4E"),
        ("0,1,2,3)", "C4"),
        ("(0;1,2)", "K13"),
        ("(0,1,2-3) ", "K4E"),
        ("(0,1,2,3) x", "C4"),
    ],
)
def test_parse_errors_carry_position(text, shape):
    with pytest.raises(ParseError) as err:
        parse_block(text, get_shape(shape))
    assert err.value.position >= 0


_label = st.one_of(
    st.integers(min_value=0, max_value=40).map(str),
    st.sampled_from(["inf", "inf1", "inf2", "x1", "x2", "y1", "y3"]),
)


@given(
    shape_name=st.sampled_from(sorted(SHAPES)),
    labels=st.lists(_label, min_size=4, max_size=4, unique=True),
)
def test_parse_format_round_trip(shape_name, labels):
    shape = get_shape(shape_name)
    b = Block(shape, tuple(labels[: shape.vertex_count]))
    assert parse_block(format_block(b), shape) == b


def test_point_ordering():
    labels = ["inf1", "10", "2", "inf", "x2", "x1", "0"]
    assert sort_points(labels) == ("0", "2", "10", "inf", "inf1", "x1", "x2")


def test_pair_is_order_normalised():
    assert pair("10", "2") == ("2", "10")
    assert pair("inf", "3") == ("3", "inf")


def test_path_canonical_orientation():
    a = block("P3", "2", "1", "0")
    assert canonical_block(a).points == ("0", "1", "2")
    b = block("P4", "3", "1", "2", "0")
    assert canonical_block(b).points == ("0", "2", "1", "3")


def test_cycle_canonical_is_edge_preserving():
    b = block("C4", "2", "0", "3", "1")
    c = canonical_block(b)
    assert sorted(b.edges()) == sorted(c.edges())
    assert c.points[0] == "0"


@pytest.mark.parametrize("name", ["K4E", "KITE", "K13", "C4", "K3", "K2"])
def test_canonical_block_idempotent(name):
    shape = get_shape(name)
    b = Block(shape, tuple(str(i) for i in reversed(range(shape.vertex_count))))
    c = canonical_block(b)
    assert canonical_block(c) == c
    assert sorted(c.edges()) == sorted(b.edges())


def test_full_class_block_count():
    shape = get_shape("K13")
    blocks = tuple(
        Block(shape, tuple(str(4 * i + j) for j in range(4))) for i in range(3)
    )
    cls = ParallelClass(blocks)
    points = sort_points(str(i) for i in range(12))
    assert cls.partition_defect(points) is None
    assert len(cls.blocks) == len(points) // shape.vertex_count


def test_partition_defect_reports_overlap():
    shape = get_shape("K2")
    cls = ParallelClass((Block(shape, ("0", "1")), Block(shape, ("1", "2"))))
    assert "twice" in cls.partition_defect(("0", "1", "2", "3"))
