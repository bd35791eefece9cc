"""Exhaustive backtracking construction of small resolvable designs and
resolvable group divisible designs, and confirmation of small nonexistence.

The search builds one parallel class at a time.  Within a class the next
block always contains the lowest-indexed point not yet covered by the class,
and candidate blocks are enumerated in canonical order over a dense table of
residual pair multiplicities, so identical problems always explore identical
trees.  For plain (ungrouped) problems the first class may be fixed to the
lexicographic minimum: any design can be relabelled so that one of its
classes becomes that class, block by block, so the restriction preserves
existence.  Grouped problems get no such fixing.

A FOUND result is always re-checked by the verifier before being returned;
an EXHAUSTED_NONEXISTENT result is only reported after the whole tree
(modulo the declared symmetry breaking) has been traversed.  Running out of
budget is reported as BUDGET_EXCEEDED, never as nonexistence.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations, permutations

from .admissibility import NECESSARY_FAIL, divisibility_check
from .errors import InternalError
from .model import (
    Block,
    GraphShape,
    GroupedDesign,
    ParallelClass,
    ResolvableDesign,
    get_shape,
)
from .verifier import verify_design, verify_grouped

FOUND = "FOUND"
EXHAUSTED_NONEXISTENT = "EXHAUSTED_NONEXISTENT"
BUDGET_EXCEEDED = "BUDGET_EXCEEDED"

DEFAULT_NODE_BUDGET = 100_000_000
DEFAULT_TIME_BUDGET = 60.0


@dataclass(frozen=True)
class SearchProblem:
    shape: GraphShape
    n_points: int
    lam: int
    groups: tuple[tuple[int, ...], ...] = ()  # index groups; empty for plain
    resolvable: bool = True
    node_budget: int = DEFAULT_NODE_BUDGET
    time_budget: float = DEFAULT_TIME_BUDGET
    symmetry_break: bool = True


@dataclass
class SearchOutcome:
    status: str
    design: ResolvableDesign | GroupedDesign | None = None
    nodes: int = 0

    def __bool__(self) -> bool:
        return self.status == FOUND


class _Budget(Exception):
    pass


def _block_variants(shape: GraphShape, subset: tuple[int, ...]) -> list[tuple[int, ...]]:
    """All distinct blocks of `shape` on a sorted vertex subset, as tuples,
    in ascending lexicographic order (so the identity tuple comes first)."""
    name = shape.name
    s = subset
    if name in ("K2", "K3", "K4"):
        return [s]
    if name == "P3":
        out = [(a, c, b) for c in s for a, b in [tuple(x for x in s if x != c)]]
    elif name == "P4":
        out = [p for p in permutations(s) if p[0] < p[3]]
    elif name == "C4":
        out = []
        for opp in s[1:]:
            n1, n2 = [x for x in s[1:] if x != opp]
            out.append((s[0], n1, opp, n2))
    elif name == "K13":
        out = [(c,) + tuple(x for x in s if x != c) for c in s]
    elif name == "KITE":
        out = []
        for d in s:
            tri = [x for x in s if x != d]
            for c in tri:
                a, b = [x for x in tri if x != c]
                out.append((a, b, c, d))
    elif name == "K4E":
        out = []
        for m in combinations(s, 2):
            a, b = [x for x in s if x not in m]
            out.append((a, b, m[0], m[1]))
    else:  # pragma: no cover
        raise InternalError(f"no block enumeration for shape {name}")
    return sorted(out)


class _Searcher:
    def __init__(self, problem: SearchProblem):
        self.p = problem
        self.shape = problem.shape
        self.k = self.shape.vertex_count
        self.v = problem.n_points
        self.lam = problem.lam
        self.nodes = 0
        self.deadline = time.monotonic() + problem.time_budget
        self.group_of = [-1] * self.v
        for gi, grp in enumerate(problem.groups):
            for x in grp:
                self.group_of[x] = gi

        # residual pair multiplicities; within-group pairs start at zero
        self.res = [[0] * self.v for _ in range(self.v)]
        for i in range(self.v):
            for j in range(i + 1, self.v):
                if not problem.groups or self.group_of[i] != self.group_of[j]:
                    self.res[i][j] = self.res[j][i] = self.lam
        self.res_deg = [sum(row) for row in self.res]

        degs = self.shape.degrees
        self.min_deg, self.max_deg = min(degs), max(degs)
        self.deg_parity = degs[0] % 2 if len({d % 2 for d in degs}) == 1 else None

        total = sum(self.res_deg) // 2
        self.total_blocks, rem = divmod(total, self.shape.edge_count)
        self.feasible = rem == 0
        self.r_target = 0
        if problem.resolvable and self.feasible:
            if self.v % self.k:
                self.feasible = False
            else:
                bpc = self.v // self.k
                self.r_target, rem = divmod(self.total_blocks, bpc)
                self.feasible = rem == 0
        if self.feasible:
            self.feasible = self._degree_window_ok(self.r_target)

    # -- feasibility -------------------------------------------------------

    def _degree_window_ok(self, remaining: int) -> bool:
        if not self.p.resolvable:
            return True
        for x in range(self.v):
            d = self.res_deg[x]
            if not (remaining * self.min_deg <= d <= remaining * self.max_deg):
                return False
            if self.deg_parity is not None and (d - remaining * self.deg_parity) % 2:
                return False
        return True

    # -- budget ------------------------------------------------------------

    def _tick(self):
        self.nodes += 1
        if self.nodes > self.p.node_budget:
            raise _Budget
        if self.nodes % 4096 == 0 and time.monotonic() > self.deadline:
            raise _Budget

    # -- residual updates ---------------------------------------------------

    def _place(self, edges):
        for a, b in edges:
            self.res[a][b] -= 1
            self.res[b][a] -= 1
            self.res_deg[a] -= 1
            self.res_deg[b] -= 1

    def _unplace(self, edges):
        for a, b in edges:
            self.res[a][b] += 1
            self.res[b][a] += 1
            self.res_deg[a] += 1
            self.res_deg[b] += 1

    def _edges_of(self, tup):
        return [(tup[a], tup[b]) for a, b in self.shape.edges]

    # -- candidate blocks ----------------------------------------------------

    def _candidates(self, anchor, available):
        out = []
        for rest in combinations(available, self.k - 1):
            subset = tuple(sorted((anchor,) + rest))
            for tup in _block_variants(self.shape, subset):
                if anchor not in tup:  # pragma: no cover - anchor always in subset
                    continue
                edges = self._edges_of(tup)
                if all(self.res[a][b] > 0 for a, b in edges):
                    out.append((tup, edges))
        return out

    # -- resolvable DFS ------------------------------------------------------

    def _solve_resolvable(self) -> list[list[tuple[int, ...]]] | None:
        classes: list[list[tuple[int, ...]]] = []

        start = 0
        if self.p.symmetry_break and not self.p.groups and self.r_target > 0:
            first = []
            for base in range(0, self.v, self.k):
                subset = tuple(range(base, base + self.k))
                tup = _block_variants(self.shape, subset)[0]
                edges = self._edges_of(tup)
                if not all(self.res[a][b] > 0 for a, b in edges):
                    return None
                self._place(edges)
                first.append(tup)
            classes.append(first)
            start = 1
            if not self._degree_window_ok(self.r_target - 1):
                return None

        if self._dfs_classes(classes, start):
            return classes
        return None

    def _dfs_classes(self, classes, done) -> bool:
        if done == self.r_target:
            return all(all(r == 0 for r in row) for row in self.res)
        current: list[tuple[int, ...]] = []
        uncovered = set(range(self.v))
        if self._dfs_blocks(classes, done, current, uncovered):
            return True
        return False

    def _dfs_blocks(self, classes, done, current, uncovered) -> bool:
        if not uncovered:
            classes.append(list(current))
            if self._degree_window_ok(self.r_target - done - 1):
                if self._dfs_classes(classes, done + 1):
                    return True
            classes.pop()
            return False
        anchor = min(uncovered)
        available = tuple(sorted(uncovered - {anchor}))
        for tup, edges in self._candidates(anchor, available):
            self._tick()
            self._place(edges)
            current.append(tup)
            uncovered.difference_update(tup)
            if self._dfs_blocks(classes, done, current, uncovered):
                return True
            uncovered.update(tup)
            current.pop()
            self._unplace(edges)
        return False

    # -- unresolved DFS (plain edge decomposition) ---------------------------

    def _solve_unresolved(self) -> list[tuple[int, ...]] | None:
        blocks: list[tuple[int, ...]] = []
        if self._dfs_cover(blocks):
            return blocks
        return None

    def _dfs_cover(self, blocks) -> bool:
        anchor = next((x for x in range(self.v) if self.res_deg[x] > 0), None)
        if anchor is None:
            return True
        others = tuple(x for x in range(self.v) if x != anchor)
        for rest in combinations(others, self.k - 1):
            subset = tuple(sorted((anchor,) + rest))
            for tup in _block_variants(self.shape, subset):
                edges = self._edges_of(tup)
                if any(a == anchor or b == anchor for a, b in edges) and all(
                    self.res[a][b] > 0 for a, b in edges
                ):
                    self._tick()
                    self._place(edges)
                    blocks.append(tup)
                    if self._dfs_cover(blocks):
                        return True
                    blocks.pop()
                    self._unplace(edges)
        return False

    # -- entry ----------------------------------------------------------------

    def run(self) -> SearchOutcome:
        if not self.feasible:
            return SearchOutcome(EXHAUSTED_NONEXISTENT, nodes=0)
        try:
            if self.p.resolvable:
                classes = self._solve_resolvable()
                if classes is None:
                    return SearchOutcome(EXHAUSTED_NONEXISTENT, nodes=self.nodes)
                return SearchOutcome(FOUND, self._materialise(classes), self.nodes)
            blocks = self._solve_unresolved()
            if blocks is None:
                return SearchOutcome(EXHAUSTED_NONEXISTENT, nodes=self.nodes)
            return SearchOutcome(FOUND, self._materialise_cover(blocks), self.nodes)
        except _Budget:
            return SearchOutcome(BUDGET_EXCEEDED, nodes=self.nodes)

    # -- materialisation -------------------------------------------------------

    def _materialise(self, classes):
        points = tuple(str(i) for i in range(self.v))
        pcs = tuple(
            ParallelClass(
                tuple(Block(self.shape, tuple(str(x) for x in tup)) for tup in cls)
            )
            for cls in classes
        )
        if self.p.groups:
            design = GroupedDesign(
                points,
                self.lam,
                self.shape,
                pcs,
                groups=tuple(tuple(str(x) for x in g) for g in self.p.groups),
                kind="RGDD",
            )
            report = verify_grouped(design)
        else:
            design = ResolvableDesign(points, self.lam, self.shape, pcs)
            report = verify_design(design)
        if not report.valid:
            raise InternalError(f"search produced an invalid object: {report.summary()}")
        return design

    def _materialise_cover(self, blocks):
        # A plain decomposition is reported as one partial class per block.
        points = tuple(str(i) for i in range(self.v))
        all_pts = frozenset(points)
        pcs = tuple(
            ParallelClass(
                (Block(self.shape, tuple(str(x) for x in tup)),),
                missing=all_pts - {str(x) for x in tup},
            )
            for tup in blocks
        )
        design = ResolvableDesign(points, self.lam, self.shape, pcs)
        report = verify_design(design)
        if not report.valid:
            raise InternalError(f"search produced an invalid object: {report.summary()}")
        return design


def search(problem: SearchProblem) -> SearchOutcome:
    """Solve a SearchProblem; see the module docstring for guarantees."""
    if not problem.groups and problem.resolvable:
        verdict = divisibility_check(problem.shape, problem.n_points, problem.lam)
        if verdict.status == NECESSARY_FAIL:
            # The divisibility conditions are proven necessary, so failing
            # them is a certificate of nonexistence without any enumeration.
            return SearchOutcome(EXHAUSTED_NONEXISTENT, nodes=0)
    return _Searcher(problem).run()


def search_design(
    shape: GraphShape | str,
    v: int,
    lam: int,
    resolvable: bool = True,
    node_budget: int = DEFAULT_NODE_BUDGET,
    time_budget: float = DEFAULT_TIME_BUDGET,
    symmetry_break: bool = True,
) -> SearchOutcome:
    shape = shape if isinstance(shape, GraphShape) else get_shape(shape)
    return search(
        SearchProblem(
            shape, v, lam,
            resolvable=resolvable,
            node_budget=node_budget,
            time_budget=time_budget,
            symmetry_break=symmetry_break,
        )
    )


def search_rgdd(
    shape: GraphShape | str,
    group_size: int,
    group_count: int,
    lam: int,
    node_budget: int = DEFAULT_NODE_BUDGET,
    time_budget: float = DEFAULT_TIME_BUDGET,
) -> SearchOutcome:
    """Search a resolvable group divisible design of uniform type g^u; the
    groups are consecutive index chunks."""
    shape = shape if isinstance(shape, GraphShape) else get_shape(shape)
    v = group_size * group_count
    groups = tuple(
        tuple(range(i * group_size, (i + 1) * group_size)) for i in range(group_count)
    )
    return search(
        SearchProblem(
            shape, v, lam,
            groups=groups,
            node_budget=node_budget,
            time_budget=time_budget,
            symmetry_break=False,
        )
    )
