# Handlers Package
from .intersection import min_int, bracket, goldman, example_section13
from .algebra import star
from .checks import jacobi_check, sign_check, graph_check

__all__ = [
    "min_int",
    "bracket",
    "goldman",
    "example_section13",
    "star",
    "jacobi_check",
    "sign_check",
    "graph_check",
]
