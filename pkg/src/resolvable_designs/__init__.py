"""Resolvable graph designs on the connected subgraphs of K4: models,
admissibility tables, cyclic development, constructions, exhaustive search,
and an exact verifier."""

from .admissibility import (
    ADMISSIBLE,
    KNOWN_NONEXISTENT,
    NECESSARY_FAIL,
    AdmissibilityVerdict,
    class_count,
    divisibility_check,
    spectrum_verdict,
)
from .model import (
    Block,
    GraphShape,
    GroupedDesign,
    ParallelClass,
    ResolvableDesign,
    SHAPES,
    block,
    canonical_block,
    edges_of_block,
    format_block,
    get_shape,
    load_design,
    parse_block,
    save_design,
)
from .verifier import VerificationReport, verify, verify_design, verify_grouped

__version__ = "0.1.0"
