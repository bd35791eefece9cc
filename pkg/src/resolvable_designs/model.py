"""Core objects: points, block shapes, blocks, parallel classes, designs.

Points are plain string labels.  Three label families are recognised:
decimal integers (the labels moved by modular development), infinity
symbols ``inf``, ``inf1``, ``inf2``, ... (never developed), and subscripted
symbols such as ``x1`` or ``y3`` (developed only by subscript rotation).
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from pathlib import Path

from .errors import MalformedBlock, ParseError


# ---------------------------------------------------------------------------
# shapes

@dataclass(frozen=True)
class GraphShape:
    """One of the nine connected subgraphs of K4, on canonical vertices 0..3."""

    name: str
    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def degrees(self) -> tuple[int, ...]:
        degs = [0] * self.vertex_count
        for a, b in self.edges:
            degs[a] += 1
            degs[b] += 1
        return tuple(degs)

    def __repr__(self) -> str:  # keep reprs short in defect reports
        return f"GraphShape({self.name})"


SHAPES: dict[str, GraphShape] = {
    "K2": GraphShape("K2", 2, ((0, 1),)),
    "P3": GraphShape("P3", 3, ((0, 1), (1, 2))),
    "P4": GraphShape("P4", 4, ((0, 1), (1, 2), (2, 3))),
    "K3": GraphShape("K3", 3, ((0, 1), (0, 2), (1, 2))),
    "C4": GraphShape("C4", 4, ((0, 1), (1, 2), (2, 3), (3, 0))),
    "K13": GraphShape("K13", 4, ((0, 1), (0, 2), (0, 3))),
    "KITE": GraphShape("KITE", 4, ((0, 1), (0, 2), (1, 2), (2, 3))),
    "K4E": GraphShape("K4E", 4, ((0, 1), (0, 2), (1, 2), (0, 3), (1, 3))),
    "K4": GraphShape("K4", 4, ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))),
}

SHAPE_NAMES = tuple(SHAPES)


def get_shape(name: str) -> GraphShape:
    try:
        return SHAPES[name]
    except KeyError:
        raise KeyError(f"unknown shape {name!r}; expected one of {', '.join(SHAPES)}")


# ---------------------------------------------------------------------------
# point labels

_INT_RE = re.compile(r"[0-9]+")
_SYM_RE = re.compile(r"([A-Za-z]+)([0-9]*)")


def is_integer_label(label: str) -> bool:
    return _INT_RE.fullmatch(label) is not None


def point_sort_key(label: str) -> tuple[int, str, int]:
    """Total order: integers numerically, then inf symbols by index, then
    other subscripted symbols by (letters, index)."""
    if is_integer_label(label):
        return (0, "", int(label))
    if label == "inf":
        return (1, "", 0)
    m = _SYM_RE.fullmatch(label)
    if m:
        letters, digits = m.group(1), m.group(2)
        idx = int(digits) if digits else 0
        if letters == "inf":
            return (1, "", idx)
        return (2, letters, idx)
    return (3, label, 0)


def sort_points(labels) -> tuple[str, ...]:
    return tuple(sorted(labels, key=point_sort_key))


def pair(a: str, b: str) -> tuple[str, str]:
    """Unordered point pair in canonical order."""
    if point_sort_key(a) <= point_sort_key(b):
        return (a, b)
    return (b, a)


# ---------------------------------------------------------------------------
# blocks

@dataclass(frozen=True)
class Block:
    shape: GraphShape
    points: tuple[str, ...]

    def __post_init__(self):
        if len(self.points) != self.shape.vertex_count:
            raise MalformedBlock(
                f"{self.shape.name} block needs {self.shape.vertex_count} points, "
                f"got {len(self.points)}: {self.points}"
            )
        if len(set(self.points)) != len(self.points):
            raise MalformedBlock(f"repeated point in block {self.points}")

    def edges(self) -> list[tuple[str, str]]:
        return [pair(self.points[a], self.points[b]) for a, b in self.shape.edges]

    def __str__(self) -> str:
        return format_block(self)


def block(shape_name: str, *points: str) -> Block:
    return Block(get_shape(shape_name), tuple(points))


def edges_of_block(b: Block) -> list[tuple[str, str]]:
    """Edge multiset obtained by instantiating the shape's canonical edges."""
    return b.edges()


def canonical_block(b: Block) -> Block:
    """Canonical representative of a block among the tuples denoting the
    same edge set.

    Paths pick the lexicographically smaller endpoint first; cycles minimise
    over rotations and reflections; the two interchangeable roles of the
    star-less shapes (triangle pair of K4E, base edge of the kite) are sorted.
    """
    key = point_sort_key
    pts = b.points
    name = b.shape.name
    if name == "K2" or name == "K3" or name == "K4":
        out = tuple(sorted(pts, key=key))
    elif name in ("P3", "P4"):
        out = pts if key(pts[0]) <= key(pts[-1]) else tuple(reversed(pts))
    elif name == "C4":
        best = None
        ring = list(pts)
        for orient in (ring, list(reversed(ring))):
            for r in range(4):
                cand = tuple(orient[(r + i) % 4] for i in range(4))
                ck = tuple(key(p) for p in cand)
                if best is None or ck < best[0]:
                    best = (ck, cand)
        out = best[1]
    elif name == "K13":
        out = (pts[0],) + tuple(sorted(pts[1:], key=key))
    elif name == "KITE":
        a, c, d = sorted(pts[:2], key=key), pts[2], pts[3]
        out = (a[0], a[1], c, d)
    elif name == "K4E":
        a = sorted(pts[:2], key=key)
        m = sorted(pts[2:], key=key)
        out = (a[0], a[1], m[0], m[1])
    else:  # pragma: no cover
        out = pts
    return Block(b.shape, out)


# ---------------------------------------------------------------------------
# block notation

# One template per shape; "a" marks a label slot.  C4, K3, K2 and K4 share
# the plain parenthesised form (the shape argument disambiguates).
_TEMPLATES = {
    "K2": "(a,a)",
    "P3": "[a,a,a]",
    "P4": "[a,a,a,a]",
    "K3": "(a,a,a)",
    "C4": "(a,a,a,a)",
    "K13": "(a;a,a,a)",
    "KITE": "(a,a,a-a)",
    "K4E": "(a,a,a;a)",
    "K4": "(a,a,a,a)",
}

_LABEL_TOKEN = re.compile(r"[A-Za-z0-9]+")


def parse_block(text: str, shape: GraphShape) -> Block:
    """Parse the textual notation for ``shape`` into a Block."""
    template = _TEMPLATES[shape.name]
    labels: list[str] = []
    pos = 0
    n = len(text)
    for t in template:
        while pos < n and text[pos].isspace():
            pos += 1
        if t == "a":
            m = _LABEL_TOKEN.match(text, pos)
            if not m:
                raise ParseError(f"expected a point label for {shape.name}", pos)
            labels.append(m.group())
            pos = m.end()
        else:
            if pos >= n or text[pos] != t:
                raise ParseError(f"expected {t!r} in {shape.name} notation", pos)
            pos += 1
    while pos < n and text[pos].isspace():
        pos += 1
    if pos != n:
        raise ParseError("trailing characters after block", pos)
    return Block(shape, tuple(labels))


def format_block(b: Block) -> str:
    out = []
    it = iter(b.points)
    for t in _TEMPLATES[b.shape.name]:
        out.append(next(it) if t == "a" else t)
    return "".join(out)


# ---------------------------------------------------------------------------
# classes and designs

@dataclass(frozen=True)
class ParallelClass:
    """Vertex-disjoint blocks covering the ambient points minus `missing`."""

    blocks: tuple[Block, ...]
    missing: frozenset[str] = frozenset()

    def covered(self) -> set[str]:
        out: set[str] = set()
        for b in self.blocks:
            out.update(b.points)
        return out

    def is_full(self) -> bool:
        return not self.missing

    def partition_defect(self, points) -> str | None:
        """None if the blocks partition points - missing, else a description."""
        seen: set[str] = set()
        for b in self.blocks:
            for p in b.points:
                if p in seen:
                    return f"point {p} covered twice"
                seen.add(p)
        want = set(points) - set(self.missing)
        if seen != want:
            extra = sort_points(seen - want)
            lacking = sort_points(want - seen)
            bits = []
            if extra:
                bits.append(f"covers foreign points {list(extra)}")
            if lacking:
                bits.append(f"misses points {list(lacking)}")
            return "; ".join(bits)
        if seen & set(self.missing):
            return "covers points declared missing"
        return None


@dataclass(frozen=True)
class ResolvableDesign:
    points: tuple[str, ...]
    lam: int
    shape: GraphShape
    classes: tuple[ParallelClass, ...]

    @property
    def order(self) -> int:
        return len(self.points)

    def blocks(self):
        for c in self.classes:
            yield from c.blocks


KINDS = ("GDD", "RGDD", "FRAME", "IRD")


@dataclass(frozen=True)
class GroupedDesign:
    """A design over a partitioned point set: GDD, RGDD, frame, or IRD.

    For IRDs `groups` is empty and `hole` is the hole; for the GDD kinds
    `hole` is empty and `groups` partition the points.
    """

    points: tuple[str, ...]
    lam: int
    shape: GraphShape
    classes: tuple[ParallelClass, ...]
    groups: tuple[tuple[str, ...], ...] = ()
    kind: str = "RGDD"
    hole: tuple[str, ...] = ()

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown grouped-design kind {self.kind!r}")

    @property
    def order(self) -> int:
        return len(self.points)

    @property
    def group_sizes(self) -> tuple[int, ...]:
        return tuple(len(g) for g in self.groups)

    def type_vector(self) -> tuple[tuple[int, int], ...]:
        """Multiset of group sizes as ((size, count), ...), larger sizes first."""
        counts: dict[int, int] = {}
        for g in self.groups:
            counts[len(g)] = counts.get(len(g), 0) + 1
        return tuple(sorted(counts.items(), reverse=True))

    def blocks(self):
        for c in self.classes:
            yield from c.blocks


Design = ResolvableDesign | GroupedDesign


# ---------------------------------------------------------------------------
# JSON exchange format

def design_to_dict(d: Design) -> dict:
    out: dict = {
        "shape": d.shape.name,
        "lambda": d.lam,
        "points": list(sort_points(d.points)),
    }
    if isinstance(d, GroupedDesign):
        if d.groups:
            out["groups"] = [list(sort_points(g)) for g in d.groups]
        if d.hole:
            out["hole"] = list(sort_points(d.hole))
    out["classes"] = [
        {
            "missing": list(sort_points(c.missing)),
            "blocks": [list(b.points) for b in c.blocks],
        }
        for c in d.classes
    ]
    return out


def infer_kind(data: dict) -> str:
    """Kind implied by a design dict: hole => IRD, groups + any partial class
    => FRAME, groups => RGDD, otherwise a plain design."""
    if data.get("hole"):
        return "ird"
    if data.get("groups"):
        partial = any(c.get("missing") for c in data.get("classes", ()))
        return "frame" if partial else "rgdd"
    return "design"


def design_from_dict(data: dict) -> Design:
    try:
        shape = get_shape(data["shape"])
        lam = int(data["lambda"])
        points = tuple(str(p) for p in data["points"])
        classes = tuple(
            ParallelClass(
                blocks=tuple(
                    Block(shape, tuple(str(p) for p in b)) for b in c["blocks"]
                ),
                missing=frozenset(str(p) for p in c.get("missing", ())),
            )
            for c in data["classes"]
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"not a valid design document: {exc}") from exc
    groups = tuple(tuple(str(p) for p in g) for g in data.get("groups", ()))
    hole = tuple(str(p) for p in data.get("hole", ()))
    if groups or hole:
        kind = {"ird": "IRD", "frame": "FRAME", "rgdd": "RGDD"}[infer_kind(data)]
        return GroupedDesign(points, lam, shape, classes, groups, kind, hole)
    return ResolvableDesign(points, lam, shape, classes)


def dumps_design(d: Design) -> str:
    return json.dumps(design_to_dict(d), indent=1)


def save_design(d: Design, path: str | Path) -> None:
    Path(path).write_text(dumps_design(d) + "\n")


def load_design(path: str | Path) -> Design:
    data = json.loads(Path(path).read_text())
    return design_from_dict(data)
