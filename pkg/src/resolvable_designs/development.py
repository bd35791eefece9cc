"""Parallel classes from base blocks by modular development.

Three development styles appear in the catalogue:

* plain development: shift every integer label by +1 mod n, fixed points
  (infinity symbols) stay put; a base class that partitions the point set
  yields one class per shift, n in all;
* grouped development: the translates of a single block at stride d are
  collected into one class per residue, giving d classes whose blocks
  partition Z_n;
* subscript development: symbols x_i, y_i, ... rotate their subscript
  modulo m, giving m classes per base class.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import NotAClass, TooSmall
from .model import Block, ParallelClass, is_integer_label, sort_points

_SUBSCRIPT_RE = re.compile(r"([A-Za-z]+)([0-9]+)")


@dataclass(frozen=True)
class BaseClass:
    """A vertex-disjoint set of blocks over Z_n plus fixed symbols."""

    blocks: tuple[Block, ...]
    modulus: int
    fixed: frozenset[str] = frozenset()

    def __post_init__(self):
        if self.modulus < 1:
            raise TooSmall(f"modulus must be positive, got {self.modulus}")
        for b in self.blocks:
            for p in b.points:
                if is_integer_label(p):
                    if not 0 <= int(p) < self.modulus:
                        raise NotAClass(
                            0, f"label {p} outside Z_{self.modulus}"
                        )
                elif p not in self.fixed:
                    raise NotAClass(0, f"label {p} is not a declared fixed point")

    def ambient(self) -> tuple[str, ...]:
        return sort_points([str(i) for i in range(self.modulus)] + list(self.fixed))


def shift_block(b: Block, s: int, n: int) -> Block:
    """Translate integer labels by +s mod n; other labels are fixed."""
    return Block(
        b.shape,
        tuple(
            str((int(p) + s) % n) if is_integer_label(p) else p for p in b.points
        ),
    )


def develop_classes(base: BaseClass) -> list[ParallelClass]:
    """All n translates of a full base class, in shift order 0..n-1."""
    ambient = base.ambient()
    out = []
    for s in range(base.modulus):
        cls = ParallelClass(
            tuple(shift_block(b, s, base.modulus) for b in base.blocks)
        )
        defect = cls.partition_defect(ambient)
        if defect:
            raise NotAClass(s, defect)
        out.append(cls)
    return out


def develop_grouped(b: Block, n: int, step: int) -> list[ParallelClass]:
    """Classes formed by the translates of one block at stride `step`.

    Class s consists of b+s, b+s+step, ..., b+s+n-step; disjointness of the
    translates is validated, never assumed.
    """
    if step < 1 or n % step:
        raise NotAClass(0, f"step {step} does not divide the modulus {n}")
    for p in b.points:
        if not is_integer_label(p):
            raise NotAClass(0, f"grouped development needs integer labels, got {p}")
    ambient = sort_points(str(i) for i in range(n))
    out = []
    for s in range(step):
        cls = ParallelClass(
            tuple(shift_block(b, s + t, n) for t in range(0, n, step))
        )
        defect = cls.partition_defect(ambient)
        if defect:
            raise NotAClass(s, defect)
        out.append(cls)
    return out


def _shift_subscript(label: str, s: int, m: int) -> str:
    mt = _SUBSCRIPT_RE.fullmatch(label)
    if not mt:
        raise NotAClass(s, f"label {label} carries no subscript")
    letters, idx = mt.group(1), int(mt.group(2))
    if not 1 <= idx <= m:
        raise NotAClass(s, f"subscript of {label} outside 1..{m}")
    return f"{letters}{1 + ((idx - 1 + s) % m)}"


def develop_subscripts(base: list[Block] | tuple[Block, ...], m: int) -> list[ParallelClass]:
    """Rotate subscripts of one base class modulo m; m classes in shift order."""
    blocks = tuple(base)
    ambient = sort_points({p for b in blocks for p in b.points})
    out = []
    for s in range(m):
        cls = ParallelClass(
            tuple(
                Block(b.shape, tuple(_shift_subscript(p, s, m) for p in b.points))
                for b in blocks
            )
        )
        defect = cls.partition_defect(ambient)
        if defect:
            raise NotAClass(s, defect)
        out.append(cls)
    return out
