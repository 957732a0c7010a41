"""
Brute-force searches used to cross-check the exact algorithms.

Every search enumerates freely reduced words in a fixed order (length first,
then letter order), so results are reproducible across runs.
"""
from typing import Dict, Iterator, List, Optional

from ..algebra.fgroup import Word, concat, conjugate, letter_key, normalize, power, word_key
from ..algebra.graphcalc import breadth_first_order, components, rooted_children
from ..models.bounds import SearchBounds
from ..utils.logging import get_logger


logger = get_logger(__name__)


def _alphabet(*words: Word) -> List[int]:
    rank = max((abs(letter) for word in words for letter in word), default=0)
    letters = [i for i in range(1, rank + 1)] + [-i for i in range(1, rank + 1)]
    return sorted(letters, key=letter_key)


def _conjugate_by_letter(letter: int, z: Word) -> Word:
    """letter·z·letter⁻¹ for a reduced z."""
    z = z[1:] if z and z[0] == -letter else (letter,) + z
    return z[:-1] if z and z[-1] == letter else z + (-letter,)


def _conjugators(u: Word, v: Word, limit: int, exact: bool) -> Iterator[Word]:
    """Reduced c with c·u·c⁻¹ = v, grown one letter at a time on the left.

    With ``exact`` only words of length ``limit`` are produced, otherwise
    every length up to ``limit``.
    """
    alphabet = _alphabet(u, v)

    def search(c: Word, z: Word, remaining: int) -> Iterator[Word]:
        if z == v and (remaining == 0 or not exact):
            yield c
        if remaining == 0 or len(z) - 2 * remaining > len(v):
            return
        for letter in alphabet:
            if c and letter == -c[0]:
                continue
            yield from search((letter,) + c, _conjugate_by_letter(letter, z), remaining - 1)

    yield from search((), u, limit)


def brute_conjugator_search(u: Word, v: Word, bounds: SearchBounds) -> Optional[Word]:
    """Shortest conjugator c with c·u·c⁻¹ = v, least in letter order; None within bounds."""
    u, v = normalize(u), normalize(v)
    if not u or not v:
        return () if u == v else None
    for length in range(bounds.max_conjugator_length + 1):
        found = list(_conjugators(u, v, length, exact=True))
        if found:
            return min(found, key=word_key)
    logger.debug(
        "No conjugator within bounds",
        extra={"extra_data": {"max_conjugator_length": bounds.max_conjugator_length}}
    )
    return None


def _powers(max_power: int) -> Iterator[int]:
    """0, 1, -1, 2, -2, ..."""
    yield 0
    for i in range(1, max_power + 1):
        yield i
        yield -i


def brute_power_solve(w: Word, u: Word, v: Word, bounds: SearchBounds) -> Optional[int]:
    """First i in the order 0, 1, -1, 2, ... with wⁱ·u·w⁻ⁱ = v."""
    w, u, v = normalize(w), normalize(u), normalize(v)
    for i in _powers(bounds.max_power):
        if conjugate(power(w, i), u) == v:
            return i
    return None


def brute_tree_class_equal(c1, c2, bounds: SearchBounds) -> bool:
    """Search global conjugators and slide powers mapping c1's labels onto c2's.

    Each circle c below p gets g_c = g_p·x_pᵏ with |k| ≤ max_power, where x_p
    is the label of p in c1.
    """
    if c1.graph != c2.graph:
        return False
    xs, ys = c1.labels, c2.labels

    def extend(order: List[int], index: int, children, g: Dict[int, Word]) -> bool:
        if index == len(order):
            return True
        node = order[index]
        parent = next(p for p, kids in children.items() if node in kids)
        for k in _powers(bounds.max_power):
            candidate = concat(g[parent], power(xs[parent - 1], k))
            if conjugate(candidate, xs[node - 1]) == ys[node - 1]:
                g[node] = candidate
                if extend(order, index + 1, children, g):
                    return True
        return False

    for component in components(c1.graph):
        children = rooted_children(c1.graph, component)
        order = breadth_first_order(c1.graph, component)
        root = component[0]
        matched = any(
            extend(order, 1, children, {root: g})
            for g in _conjugators(xs[root - 1], ys[root - 1], bounds.max_conjugator_length, exact=False)
        )
        if not matched:
            return False
    return True
