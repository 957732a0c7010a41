# Algebra Package
# garlands depends on the surfaces package and is imported as src.algebra.garlands
from .fgroup import (
    CyclicWord,
    Word,
    conjugacy_class,
    conjugator,
    format_word,
    parse_word,
    primitive_root,
    shares_root,
)
from .graphcalc import GAMMA_0, GAMMA_1, GarlandGraph, compose_B, compose_D, format_graph, parse_graph, permute
from .signcalc import Parity, SignContext, verify_parity_identities

__all__ = [
    "CyclicWord",
    "Word",
    "conjugacy_class",
    "conjugator",
    "format_word",
    "parse_word",
    "primitive_root",
    "shares_root",
    "GAMMA_0",
    "GAMMA_1",
    "GarlandGraph",
    "compose_B",
    "compose_D",
    "format_graph",
    "parse_graph",
    "permute",
    "Parity",
    "SignContext",
    "verify_parity_identities",
]
