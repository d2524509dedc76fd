"""Finitely presented groups: coset enumeration, subgroup intersections,
Reidemeister-Schreier presentations and abelian invariants."""
from .cosets import DEFAULT_LIMIT, CosetLimitExceeded, CosetTable, coset_enumerate
from .subgroups import (
    AbelianInvariants,
    Intersection,
    InvolutionVerdict,
    abelian_invariants,
    element_orders,
    group_order,
    has_involution,
    reidemeister_schreier,
    subgroup_intersection,
)
from .words import (
    Presentation,
    PresentationSyntaxError,
    Word,
    load_presentation,
    parse_presentation,
    presentation_from_dict,
    reduce_word,
)

__all__ = [
    "DEFAULT_LIMIT", "CosetLimitExceeded", "CosetTable", "coset_enumerate",
    "AbelianInvariants", "Intersection", "InvolutionVerdict", "abelian_invariants",
    "element_orders", "group_order", "has_involution", "reidemeister_schreier",
    "subgroup_intersection", "Presentation", "PresentationSyntaxError", "Word",
    "load_presentation", "parse_presentation", "presentation_from_dict", "reduce_word",
]
