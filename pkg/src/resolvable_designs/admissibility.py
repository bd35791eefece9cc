"""Necessary conditions and the known spectrum for resolvable designs.

The baseline divisibility conditions for a resolvable decomposition of the
lambda-fold complete graph into copies of a shape G are

    v = 0             (mod |V(G)|)
    lambda*v*(v-1) = 0 (mod 2|E(G)|)
    lambda*(v-1)*|V(G)| = 0 (mod 2|E(G)|)

and the number of full parallel classes of any such design is
r = lambda*(v-1)*|V(G)| / (2|E(G)|).  On top of these, each shape carries a
table of sharper congruences (and one sporadic non-existence) that together
describe the known spectrum exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InternalInconsistency, TooSmall
from .model import GraphShape, get_shape

NECESSARY_FAIL = "NECESSARY_FAIL"
ADMISSIBLE = "ADMISSIBLE"
KNOWN_NONEXISTENT = "KNOWN_NONEXISTENT"


@dataclass(frozen=True)
class CongruenceCheck:
    expr: str
    ok: bool


@dataclass(frozen=True)
class AdmissibilityVerdict:
    status: str
    reasons: tuple[CongruenceCheck, ...]
    full_class_count: int | None = None
    not_promised_by_paper: bool = False

    @property
    def violations(self) -> tuple[CongruenceCheck, ...]:
        return tuple(c for c in self.reasons if not c.ok)

    def __bool__(self) -> bool:
        return self.status == ADMISSIBLE


@dataclass(frozen=True)
class SpectrumRule:
    """If v % v_mod lies in v_residues then lambda % lam_mod must be 0."""

    v_mod: int
    v_residues: tuple[int, ...]
    lam_mod: int

    def applies(self, v: int) -> bool:
        return v % self.v_mod in self.v_residues

    def check(self, v: int, lam: int) -> CongruenceCheck:
        expr = (
            f"lambda = 0 (mod {self.lam_mod}) required for "
            f"v = {','.join(map(str, self.v_residues))} (mod {self.v_mod})"
        )
        return CongruenceCheck(expr, lam % self.lam_mod == 0)


# Per-shape refinements of the divisibility conditions.  Empty tuples mean
# the divisibility conditions already describe the spectrum.
SPECTRUM_RULES: dict[str, tuple[SpectrumRule, ...]] = {
    "K2": (),
    "P3": (),
    "P4": (),
    "K3": (),
    "C4": (SpectrumRule(1, (0,), 2),),
    "KITE": (SpectrumRule(1, (0,), 2),),
    "K13": (SpectrumRule(12, (4,), 2), SpectrumRule(12, (0, 8), 6)),
    "K4E": (SpectrumRule(20, (0, 4, 8, 12), 5),),
    "K4": (SpectrumRule(12, (0, 8), 3),),
}

# (shape, v) pairs that satisfy every congruence yet support no resolvable
# design at any index.
NONEXISTENT_ORDERS = {("K3", 6)}


def _as_shape(shape: GraphShape | str) -> GraphShape:
    return shape if isinstance(shape, GraphShape) else get_shape(shape)


def _divisibility_checks(shape: GraphShape, v: int, lam: int) -> list[CongruenceCheck]:
    k, e2 = shape.vertex_count, 2 * shape.edge_count
    return [
        CongruenceCheck(f"v = 0 (mod {k})", v % k == 0),
        CongruenceCheck(f"lambda*v*(v-1) = 0 (mod {e2})", lam * v * (v - 1) % e2 == 0),
        CongruenceCheck(
            f"lambda*(v-1)*{k} = 0 (mod {e2})", lam * (v - 1) * k % e2 == 0
        ),
    ]


def divisibility_check(shape: GraphShape | str, v: int, lam: int) -> AdmissibilityVerdict:
    """Evaluate the three divisibility congruences; report all violations."""
    shape = _as_shape(shape)
    if v < shape.vertex_count:
        raise TooSmall(f"v={v} is below the block size {shape.vertex_count}")
    if lam < 1:
        raise TooSmall(f"index must be positive, got {lam}")
    checks = _divisibility_checks(shape, v, lam)
    if all(c.ok for c in checks):
        r = lam * (v - 1) * shape.vertex_count // (2 * shape.edge_count)
        return AdmissibilityVerdict(ADMISSIBLE, tuple(checks), r)
    return AdmissibilityVerdict(NECESSARY_FAIL, tuple(checks))


def spectrum_verdict(shape: GraphShape | str, v: int, lam: int) -> AdmissibilityVerdict:
    """Refine divisibility_check with the per-shape spectrum table."""
    shape = _as_shape(shape)
    base = divisibility_check(shape, v, lam)
    checks = list(base.reasons)
    for rule in SPECTRUM_RULES[shape.name]:
        if rule.applies(v):
            checks.append(rule.check(v, lam))
    if any(not c.ok for c in checks):
        return AdmissibilityVerdict(NECESSARY_FAIL, tuple(checks))
    if (shape.name, v) in NONEXISTENT_ORDERS:
        # Not a divisibility consequence; reported as a distinct status.
        return AdmissibilityVerdict(KNOWN_NONEXISTENT, tuple(checks))
    # The spectrum table is an if-and-only-if description for all nine
    # shapes, so nothing admissible is left unpromised; the flag stays for
    # callers that extend the table.
    return AdmissibilityVerdict(
        ADMISSIBLE, tuple(checks), base.full_class_count, not_promised_by_paper=False
    )


def class_count(shape: GraphShape | str, v: int, lam: int) -> int:
    """Number of full parallel classes of a resolvable design, exact."""
    shape = _as_shape(shape)
    num = lam * (v - 1) * shape.vertex_count
    den = 2 * shape.edge_count
    if num % den:
        raise InternalInconsistency(
            f"class count {num}/{den} is not an integer for "
            f"({shape.name}, v={v}, lambda={lam})"
        )
    return num // den


def rgdd_class_count(shape: GraphShape | str, g: int, u: int, lam: int) -> int:
    """Full classes of a resolvable group divisible design of type g^u."""
    shape = _as_shape(shape)
    num = lam * (u - 1) * g * shape.vertex_count
    den = 2 * shape.edge_count
    if num % den:
        raise InternalInconsistency(
            f"class count {num}/{den} is not an integer for "
            f"({shape.name}, type {g}^{u}, lambda={lam})"
        )
    return num // den


def frame_partial_count(shape: GraphShape | str, g: int, lam: int) -> int:
    """Partial classes of a frame that miss one fixed group of size g."""
    shape = _as_shape(shape)
    num = lam * g * shape.vertex_count
    den = 2 * shape.edge_count
    if num % den:
        raise InternalInconsistency(
            f"per-group partial class count {num}/{den} is not an integer"
        )
    return num // den


def ird_class_counts(shape: GraphShape | str, v: int, h: int, lam: int) -> tuple[int, int]:
    """(partial, full) class counts of an incomplete resolvable design of
    order v+h with a hole of size h."""
    shape = _as_shape(shape)
    den = 2 * shape.edge_count
    pnum = lam * (h - 1) * shape.vertex_count
    fnum = lam * v * shape.vertex_count
    if pnum % den or fnum % den:
        raise InternalInconsistency("incomplete-design class counts are not integers")
    return pnum // den, fnum // den
