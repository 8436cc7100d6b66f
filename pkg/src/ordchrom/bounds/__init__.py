"""Bound derivations, classification and constructive colourings."""

from .coloring import (
    BoundExceeded,
    ColoringResult,
    PatternPresent,
    color_avoider,
    degeneracy_coloring,
    degeneracy_order,
    peel_certificate,
    peel_forest,
)
from .engine import (
    ASSERTED_RULES,
    LEAF_RULES,
    Classification,
    Derivation,
    InfinitePattern,
    Rule,
    classify,
    derive_upper_bound,
    infinite_witness,
)
from .verify import derivation_problems, verify_derivation

__all__ = [
    "ASSERTED_RULES", "LEAF_RULES", "BoundExceeded", "Classification", "ColoringResult",
    "Derivation", "InfinitePattern", "PatternPresent", "Rule", "classify", "color_avoider",
    "degeneracy_coloring", "degeneracy_order", "derivation_problems", "derive_upper_bound",
    "infinite_witness", "peel_certificate", "peel_forest", "verify_derivation",
]
