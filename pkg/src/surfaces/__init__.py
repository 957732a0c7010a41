# Surfaces Package
from .ribbon import (
    CrossingTerm,
    RibbonSurface,
    a11_terms,
    boundary_components,
    euler_characteristic,
    genus,
    goldman_bracket,
    homological_pairing,
    linked_pairs,
    make_surface,
    pairing_matrix,
    self_check,
)
from .factory import get_surface, list_surfaces, load_surface_file, parse_surface_text, register_surface

__all__ = [
    "CrossingTerm",
    "RibbonSurface",
    "a11_terms",
    "boundary_components",
    "euler_characteristic",
    "genus",
    "goldman_bracket",
    "homological_pairing",
    "linked_pairs",
    "make_surface",
    "pairing_matrix",
    "self_check",
    "get_surface",
    "list_surfaces",
    "load_surface_file",
    "parse_surface_text",
    "register_surface",
]
