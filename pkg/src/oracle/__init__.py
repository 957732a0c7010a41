# Oracle Package
from .brute import brute_conjugator_search, brute_power_solve, brute_tree_class_equal

__all__ = [
    "brute_conjugator_search",
    "brute_power_solve",
    "brute_tree_class_equal",
]
