"""Certification of designs by exhaustive edge and partition checking.

Pair multiplicities are counted in a dense symmetric table indexed by point
position; orders stay in the hundreds at most, so exactness beats
cleverness.  Reports are exhaustive: no early exit, so a failed report
doubles as a debugging artifact.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .admissibility import (
    class_count,
    frame_partial_count,
    ird_class_counts,
)
from .errors import InternalInconsistency
from .model import (
    Design,
    GroupedDesign,
    ResolvableDesign,
    pair,
    point_sort_key,
    sort_points,
)


@dataclass
class VerificationReport:
    valid: bool
    edge_defects: dict[tuple[str, str], tuple[int, int]] = field(default_factory=dict)
    class_defects: list[tuple[int, str]] = field(default_factory=list)
    count_defects: list[str] = field(default_factory=list)

    def summary(self) -> str:
        if self.valid:
            return "valid"
        return (
            f"invalid: {len(self.edge_defects)} edge defect(s), "
            f"{len(self.class_defects)} class defect(s), "
            f"{len(self.count_defects)} count defect(s)"
        )

    def to_dict(self) -> dict:
        return {
            "valid": self.valid,
            "edgeDefects": [
                {"pair": list(p), "expected": e, "actual": a}
                for p, (e, a) in sorted(
                    self.edge_defects.items(),
                    key=lambda kv: (point_sort_key(kv[0][0]), point_sort_key(kv[0][1])),
                )
            ],
            "classDefects": [
                {"classIndex": i, "description": d} for i, d in self.class_defects
            ],
            "countDefects": list(self.count_defects),
        }


def _finish(report: VerificationReport) -> VerificationReport:
    report.valid = not (
        report.edge_defects or report.class_defects or report.count_defects
    )
    return report


def _multiplicities(design: Design, index: dict[str, int]) -> np.ndarray:
    n = len(index)
    counts = np.zeros((n, n), dtype=np.int64)
    for b in design.blocks():
        for x, y in b.edges():
            i, j = index[x], index[y]
            counts[i, j] += 1
    return counts


def _edge_defects(
    design: Design,
    expected: np.ndarray,
    report: VerificationReport,
    points: tuple[str, ...],
    index: dict[str, int],
) -> None:
    actual = _multiplicities(design, index)
    for i, j in zip(*np.nonzero(actual != expected)):
        report.edge_defects[pair(points[i], points[j])] = (
            int(expected[i, j]),
            int(actual[i, j]),
        )


def _unknown_point_defects(design: Design, report: VerificationReport) -> bool:
    known = set(design.points)
    ok = True
    for ci, cls in enumerate(design.classes):
        for b in cls.blocks:
            foreign = [p for p in b.points if p not in known]
            if foreign:
                report.class_defects.append(
                    (ci, f"block {b} uses points outside the design: {foreign}")
                )
                ok = False
        if not set(cls.missing) <= known:
            report.class_defects.append((ci, "missing set uses unknown points"))
            ok = False
    return ok


def verify_design(d: ResolvableDesign) -> VerificationReport:
    """Check pair coverage, the partition property of every class, and the
    full-class count against the class-count formula."""
    report = VerificationReport(valid=True)
    if not _unknown_point_defects(d, report):
        return _finish(report)

    points = sort_points(d.points)
    index = {p: i for i, p in enumerate(points)}
    n = len(points)

    expected = np.full((n, n), d.lam, dtype=np.int64)
    expected[np.tril_indices(n)] = 0
    _edge_defects(d, expected, report, points, index)

    all_full = True
    for ci, cls in enumerate(d.classes):
        defect = cls.partition_defect(points)
        if defect:
            report.class_defects.append((ci, defect))
        if not cls.is_full():
            all_full = False

    if all_full:
        try:
            want = class_count(d.shape, len(points), d.lam)
        except InternalInconsistency:
            report.count_defects.append(
                "class-count formula is not an integer for these parameters"
            )
        else:
            if len(d.classes) != want:
                report.count_defects.append(
                    f"expected {want} full classes, found {len(d.classes)}"
                )
    return _finish(report)


def _grouped_expected(g: GroupedDesign, lam: int, points, index) -> np.ndarray:
    n = len(points)
    expected = np.full((n, n), lam, dtype=np.int64)
    if g.kind == "IRD":
        hole = [index[p] for p in g.hole]
        for i in hole:
            for j in hole:
                expected[i, j] = 0
    else:
        for grp in g.groups:
            ids = [index[p] for p in grp]
            for i in ids:
                for j in ids:
                    expected[i, j] = 0
    expected[np.tril_indices(n)] = 0
    return expected


def verify_grouped(g: GroupedDesign, lam: int | None = None) -> VerificationReport:
    """Check a GDD, RGDD, frame, or incomplete resolvable design.

    Within-group (or within-hole) pairs must be covered zero times and all
    other pairs exactly lambda times.  Resolution structure per kind: RGDD
    classes are full; frame classes each miss exactly one group, with the
    per-group count matching the frame formula; incomplete-design classes
    are full or miss exactly the hole, with both counts matching.
    """
    lam = g.lam if lam is None else lam
    report = VerificationReport(valid=True)
    if not _unknown_point_defects(g, report):
        return _finish(report)

    points = sort_points(g.points)
    index = {p: i for i, p in enumerate(points)}

    if g.kind == "IRD":
        if not set(g.hole) <= set(points):
            report.count_defects.append("hole is not a subset of the points")
            return _finish(report)
    else:
        flat = [p for grp in g.groups for p in grp]
        if len(flat) != len(set(flat)) or set(flat) != set(points):
            report.count_defects.append("groups do not partition the point set")
            return _finish(report)

    _edge_defects(g, _grouped_expected(g, lam, points, index), report, points, index)

    group_sets = [frozenset(grp) for grp in g.groups]
    missing_per_group = [0] * len(group_sets)
    n_partial = 0
    n_full = 0
    for ci, cls in enumerate(g.classes):
        defect = cls.partition_defect(points)
        if defect:
            report.class_defects.append((ci, defect))
        if cls.is_full():
            n_full += 1
        else:
            n_partial += 1
        if g.kind == "RGDD" and not cls.is_full():
            report.class_defects.append((ci, "partial class in a resolvable GDD"))
        elif g.kind == "FRAME":
            if cls.missing in group_sets:
                missing_per_group[group_sets.index(cls.missing)] += 1
            else:
                report.class_defects.append(
                    (ci, "class misses a set that is not a group")
                )
        elif g.kind == "IRD" and not cls.is_full():
            if cls.missing != frozenset(g.hole):
                report.class_defects.append(
                    (ci, "partial class misses a set different from the hole")
                )

    if g.kind == "FRAME":
        for gi, grp in enumerate(g.groups):
            try:
                want = frame_partial_count(g.shape, len(grp), lam)
            except InternalInconsistency:
                report.count_defects.append(
                    f"frame partial-class count is not an integer for group {gi}"
                )
                continue
            if missing_per_group[gi] != want:
                report.count_defects.append(
                    f"group {gi}: expected {want} classes missing it, "
                    f"found {missing_per_group[gi]}"
                )
    elif g.kind == "IRD":
        h = len(g.hole)
        v = len(points) - h
        try:
            want_partial, want_full = ird_class_counts(g.shape, v, h, lam)
        except InternalInconsistency:
            report.count_defects.append(
                "incomplete-design class counts are not integers"
            )
        else:
            if n_partial != want_partial:
                report.count_defects.append(
                    f"expected {want_partial} partial classes, found {n_partial}"
                )
            if n_full != want_full:
                report.count_defects.append(
                    f"expected {want_full} full classes, found {n_full}"
                )
    return _finish(report)


def verify(obj: Design, lam: int | None = None) -> VerificationReport:
    if isinstance(obj, GroupedDesign):
        return verify_grouped(obj, lam)
    return verify_design(obj)


def verify_coverage_bound(d: ResolvableDesign, mode: str) -> VerificationReport:
    """Packing/covering check: every pair at most (packing) or at least
    (covering) lambda times, classes still partitions."""
    report = VerificationReport(valid=True)
    if not _unknown_point_defects(d, report):
        return _finish(report)
    points = sort_points(d.points)
    index = {p: i for i, p in enumerate(points)}
    actual = _multiplicities(d, index)
    n = len(points)
    iu = np.triu_indices(n, k=1)
    if mode == "packing":
        bad = actual[iu] > d.lam
    elif mode == "covering":
        bad = actual[iu] < d.lam
    else:
        raise ValueError(f"unknown coverage mode {mode!r}")
    for i, j in zip(iu[0][bad], iu[1][bad]):
        report.edge_defects[pair(points[i], points[j])] = (
            d.lam,
            int(actual[i, j]),
        )
    for ci, cls in enumerate(d.classes):
        defect = cls.partition_defect(points)
        if defect:
            report.class_defects.append((ci, defect))
    return _finish(report)
