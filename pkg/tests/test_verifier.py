from __future__ import annotations

from collections import Counter
from itertools import combinations

import pytest

from resolvable_designs.development import BaseClass, develop_classes
from resolvable_designs.model import (
    Block,
    GroupedDesign,
    ParallelClass,
    ResolvableDesign,
    block,
    get_shape,
    parse_block,
    sort_points,
)
from resolvable_designs.verifier import verify_design, verify_grouped


def single_block_classes(shape_name, *texts):
    shape = get_shape(shape_name)
    return tuple(
        ParallelClass((parse_block(t, shape),)) for t in texts
    )


def c4_order4_design(lam=2):
    return ResolvableDesign(
        points=("0", "1", "2", "3"),
        lam=lam,
        shape=get_shape("C4"),
        classes=single_block_classes("C4", "(0,1,2,3)", "(0,1,3,2)", "(0,2,1,3)"),
    )


def brute_pair_counts(design):
    counts = Counter()
    for cls in design.classes:
        for b in cls.blocks:
            counts.update(b.edges())
    return counts


def test_c4_order4_is_valid_twofold():
    d = c4_order4_design()
    report = verify_design(d)
    assert report.valid, report.summary()
    # independent hand count: every pair appears twice across 12 edge slots
    counts = brute_pair_counts(d)
    assert sum(counts.values()) == 12
    assert all(counts[tuple(sorted(p))] == 2 for p in combinations("0123", 2))


def test_wrong_declared_index_reports_every_pair():
    d = c4_order4_design(lam=1)
    report = verify_design(d)
    assert not report.valid
    assert len(report.edge_defects) == 6
    assert all(exp == 1 and act == 2 for exp, act in report.edge_defects.values())


def test_k4e_order20_development_verifies():
    shape = get_shape("K4E")
    base1 = BaseClass(
        tuple(
            parse_block(t, shape)
            for t in (
                "(3,4,15;inf)",
                "(1,18,9;14)",
                "(2,0,5;8)",
                "(6,10,12;13)",
                "(7,16,11;17)",
            )
        ),
        modulus=19,
        fixed=frozenset({"inf"}),
    )
    base2 = BaseClass(
        tuple(
            parse_block(t, shape)
            for t in (
                "(0,inf,1;15)",
                "(8,10,18;5)",
                "(2,16,11;9)",
                "(14,13,17;7)",
                "(4,6,12;3)",
            )
        ),
        modulus=19,
        fixed=frozenset({"inf"}),
    )
    classes = tuple(develop_classes(base1) + develop_classes(base2))
    d = ResolvableDesign(base1.ambient(), 5, shape, classes)
    report = verify_design(d)
    assert report.valid, report.to_dict()
    assert len(d.classes) == 38


def test_partition_defect_is_reported():
    shape = get_shape("K2")
    d = ResolvableDesign(
        points=("0", "1", "2", "3"),
        lam=1,
        shape=shape,
        classes=(
            ParallelClass((block("K2", "0", "1"), block("K2", "2", "3"))),
            ParallelClass((block("K2", "0", "2"), block("K2", "1", "3"))),
            ParallelClass((block("K2", "0", "3"), block("K2", "1", "3"))),
        ),
    )
    report = verify_design(d)
    assert not report.valid
    assert any(i == 2 for i, _ in report.class_defects)


def test_foreign_point_is_reported():
    d = ResolvableDesign(
        points=("0", "1"),
        lam=1,
        shape=get_shape("K2"),
        classes=(ParallelClass((block("K2", "0", "7"),)),),
    )
    report = verify_design(d)
    assert not report.valid


def grouped_star_4_2():
    from resolvable_designs.development import develop_subscripts

    shape = get_shape("K13")
    bases = [
        ["(x1;y1,y2,y3)", "(y4;x2,x3,x4)"],
        ["(x1;y2,y3,y4)", "(y1;x2,x3,x4)"],
        ["(x1;y3,y4,y1)", "(y2;x2,x3,x4)"],
        ["(x1;y4,y1,y2)", "(y3;x2,x3,x4)"],
    ]
    classes = []
    for b in bases:
        classes.extend(develop_subscripts([parse_block(t, shape) for t in b], 4))
    points = tuple(f"x{i}" for i in range(1, 5)) + tuple(f"y{i}" for i in range(1, 5))
    return GroupedDesign(
        points=points,
        lam=6,
        shape=shape,
        classes=tuple(classes),
        groups=(tuple(f"x{i}" for i in range(1, 5)), tuple(f"y{i}" for i in range(1, 5))),
        kind="RGDD",
    )


def test_star_rgdd_type_4_2_verifies():
    g = grouped_star_4_2()
    report = verify_grouped(g)
    assert report.valid, report.to_dict()
    assert len(g.classes) == 16


def test_rgdd_with_within_group_edge_fails():
    g = grouped_star_4_2()
    bad_class = ParallelClass(
        (
            block("K13", "x1", "x2", "x3", "x4"),
            block("K13", "y1", "y2", "y3", "y4"),
        )
    )
    g2 = GroupedDesign(
        g.points, g.lam, g.shape, g.classes + (bad_class,), g.groups, "RGDD"
    )
    report = verify_grouped(g2)
    assert not report.valid
    assert report.edge_defects


def test_frame_class_missing_non_group_is_defect():
    shape = get_shape("K2")
    groups = (("0", "1"), ("2", "3"), ("4", "5"))
    classes = (
        ParallelClass(
            (block("K2", "2", "4"), block("K2", "3", "5")), frozenset({"0", "1"})
        ),
        ParallelClass(
            (block("K2", "2", "5"), block("K2", "3", "4")), frozenset({"0", "1"})
        ),
        ParallelClass(
            (block("K2", "0", "4"), block("K2", "1", "5")), frozenset({"2", "3"})
        ),
        ParallelClass(
            (block("K2", "0", "5"), block("K2", "1", "4")), frozenset({"2", "3"})
        ),
        ParallelClass(
            (block("K2", "0", "2"), block("K2", "1", "3")), frozenset({"4", "5"})
        ),
        ParallelClass(
            (block("K2", "0", "3"), block("K2", "1", "2")), frozenset({"4", "5"})
        ),
    )
    frame = GroupedDesign(
        points=tuple("012345"), lam=1, shape=shape, classes=classes,
        groups=groups, kind="FRAME",
    )
    assert verify_grouped(frame).valid

    # move one class's missing set off a group boundary
    broken = classes[:5] + (
        ParallelClass(
            (block("K2", "0", "3"), block("K2", "1", "2")), frozenset({"4", "2"})
        ),
    )
    bad = GroupedDesign(
        points=tuple("012345"), lam=1, shape=shape, classes=broken,
        groups=groups, kind="FRAME",
    )
    report = verify_grouped(bad)
    assert not report.valid
    assert any("not a group" in d for _, d in report.class_defects)
