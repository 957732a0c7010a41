"""
Ribbon-graph surfaces and signed crossings of loop classes.

A surface of rank n is a rose with n petals whose 2n edge-ends are arranged
counterclockwise around the single vertex by ``vertex_order``. Reading the
letter x leaves the vertex through end x and comes back through end x⁻¹.
Loops are drawn along the rose and perturbed; their transverse crossings
are detected from the circular order of the four rays leaving a common
vertex visit.
"""
import functools
from collections import defaultdict
from typing import Callable, Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ..algebra.fgroup import (
    CyclicWord,
    Word,
    abelianization,
    concat,
    conjugacy_class,
    format_word,
    rotation,
    shares_root,
)
from ..utils.errors import CommonRoot, InvalidArgument, TrivialInput
from ..utils.logging import get_logger


logger = get_logger(__name__)


class RibbonSurface(BaseModel):
    """Rose with a counterclockwise cyclic order of its edge-ends."""

    model_config = ConfigDict(
        frozen=True,
        json_schema_extra={
            "example": {
                "name": "torus1",
                "rank": 2,
                "vertex_order": [1, 2, -1, -2]
            }
        }
    )

    rank: int = Field(..., ge=1, description="Rank of the free fundamental group")
    vertex_order: Tuple[int, ...] = Field(..., description="Edge-ends read counterclockwise")
    name: Optional[str] = Field(None, description="Builtin or file name")

    @field_validator("vertex_order")
    @classmethod
    def _no_zero_ends(cls, value: Tuple[int, ...]) -> Tuple[int, ...]:
        if any(end == 0 for end in value):
            raise ValueError("edge-end 0 does not exist")
        return value

    @model_validator(mode="after")
    def _all_ends_once(self) -> "RibbonSurface":
        expected = sorted(list(range(1, self.rank + 1)) + [-i for i in range(1, self.rank + 1)])
        if sorted(self.vertex_order) != expected:
            raise ValueError(f"vertex_order must list each of the {2 * self.rank} edge-ends once")
        return self

    def position(self, end: int) -> int:
        return _positions(self)[end]

    def successor(self, end: int) -> int:
        """Next end counterclockwise."""
        order = self.vertex_order
        return order[(self.position(end) + 1) % len(order)]


class CrossingTerm(BaseModel):
    """One transverse crossing of two loops, seen at visits p of w1 and q of w2."""

    model_config = ConfigDict(frozen=True)

    p: int = Field(..., ge=0, description="Visit index in w1")
    q: int = Field(..., ge=0, description="Visit index in w2")
    geom_sign: int = Field(..., description="Orientation of the crossing, +1 or -1")
    u: Tuple[int, ...] = Field(..., description="w1 read from the crossing")
    v: Tuple[int, ...] = Field(..., description="w2 read from the crossing")


@functools.lru_cache(maxsize=64)
def _positions(surface: RibbonSurface) -> Dict[int, int]:
    return {end: index for index, end in enumerate(surface.vertex_order)}


def make_surface(order: List[int], name: Optional[str] = None) -> RibbonSurface:
    """Surface from a vertex order; the rank is read off the order."""
    rank = max((abs(end) for end in order), default=0)
    try:
        return RibbonSurface(rank=rank, vertex_order=tuple(order), name=name)
    except ValueError as e:
        raise InvalidArgument(f"invalid vertex order {order}: {e}") from e


def boundary_components(surface: RibbonSurface) -> List[Tuple[int, ...]]:
    """Boundary cycles of the thickened rose, as cyclic words of edge letters.

    After traversing x the boundary arrives at end x⁻¹ and leaves through
    the next end counterclockwise.
    """
    letters = list(surface.vertex_order)
    seen = set()
    cycles: List[Tuple[int, ...]] = []
    for start in letters:
        if start in seen:
            continue
        cycle = []
        letter = start
        while letter not in seen:
            seen.add(letter)
            cycle.append(letter)
            letter = surface.successor(-letter)
        cycles.append(tuple(cycle))
    return cycles


def euler_characteristic(surface: RibbonSurface) -> int:
    return 1 - surface.rank


def genus(surface: RibbonSurface) -> int:
    """g with 1 − n = 2 − 2g − b."""
    b = len(boundary_components(surface))
    return (2 - b - euler_characteristic(surface)) // 2


def self_check(surface: RibbonSurface) -> bool:
    """Whether the boundary count is consistent with an orientable surface."""
    b = len(boundary_components(surface))
    excess = 2 - b - euler_characteristic(surface)
    return b >= 1 and excess >= 0 and excess % 2 == 0


def _ray(cyclic: CyclicWord, position: int, forward: bool) -> Callable[[int], int]:
    """Letters of the bi-infinite reading of ``cyclic`` leaving visit ``position``."""
    n = len(cyclic)
    if forward:
        return lambda t: cyclic[(position + t) % n]
    return lambda t: -cyclic[(position - 1 - t) % n]


class _RayOrder:
    """Circular order of rays leaving one vertex visit."""

    def __init__(self, surface: RibbonSurface, horizon: int, words: Tuple[str, str]):
        self.surface = surface
        self.horizon = horizon
        self.words = words
        self.size = len(surface.vertex_order)

    def _after_cut(self, cut: int, end: int) -> int:
        """Offset of ``end`` counterclockwise from the end just after ``cut``."""
        return (self.surface.position(end) - self.surface.position(cut) - 1) % self.size

    def compare(self, x: Callable[[int], int], y: Callable[[int], int]) -> int:
        """-1 when ray x comes counterclockwise before ray y."""
        if x(0) != y(0):
            return -1 if self.surface.position(x(0)) < self.surface.position(y(0)) else 1
        for step in range(1, self.horizon + 1):
            if x(step) != y(step):
                cut = -x(step - 1)
                earlier = self._after_cut(cut, x(step)) < self._after_cut(cut, y(step))
                return -1 if earlier else 1
        raise CommonRoot(*self.words)


def _check_loops(w1: Word, w2: Word) -> Tuple[CyclicWord, CyclicWord]:
    c1, c2 = conjugacy_class(w1), conjugacy_class(w2)
    if not c1 or not c2:
        raise TrivialInput("loop classes must be nontrivial")
    if shares_root(c1, c2):
        raise CommonRoot(format_word(c1), format_word(c2))
    return c1, c2


def linked_pairs(surface: RibbonSurface, w1: Word, w2: Word) -> List[CrossingTerm]:
    """Transverse crossings of the perturbed rose representatives of two loop classes.

    A crossing seen along a shared segment is reported once, at the visit
    where the backward ray of w1 is not shared with w2.
    """
    c1, c2 = _check_loops(w1, w2)
    order = _RayOrder(surface, len(c1) + len(c2), (format_word(c1), format_word(c2)))
    terms: List[CrossingTerm] = []
    for p in range(len(c1)):
        r1_minus, r1_plus = _ray(c1, p, False), _ray(c1, p, True)
        for q in range(len(c2)):
            r2_minus, r2_plus = _ray(c2, q, False), _ray(c2, q, True)
            if r1_minus(0) in (r2_minus(0), r2_plus(0)):
                continue
            rays = [("1+", r1_plus), ("1-", r1_minus), ("2+", r2_plus), ("2-", r2_minus)]
            rays.sort(key=functools.cmp_to_key(lambda a, b: order.compare(a[1], b[1])))
            names = [name for name, _ in rays]
            owners = [name[0] for name in names]
            if not all(owners[i] != owners[(i + 1) % 4] for i in range(4)):
                continue
            start = names.index("1+")
            from_r1_plus = names[start:] + names[:start]
            geom_sign = 1 if from_r1_plus[1] == "2+" else -1
            terms.append(CrossingTerm(
                p=p,
                q=q,
                geom_sign=geom_sign,
                u=rotation(c1, p),
                v=rotation(c2, q)
            ))
    logger.debug(
        "Linked pairs enumerated",
        extra={"extra_data": {"w1": format_word(c1), "w2": format_word(c2), "crossings": len(terms)}}
    )
    return terms


@functools.lru_cache(maxsize=64)
def pairing_matrix(surface: RibbonSurface) -> Tuple[Tuple[int, ...], ...]:
    """Signed crossing counts of the generator loops."""
    n = surface.rank
    return tuple(
        tuple(
            sum(t.geom_sign for t in linked_pairs(surface, (i,), (j,))) if i != j else 0
            for j in range(1, n + 1)
        )
        for i in range(1, n + 1)
    )


def homological_pairing(surface: RibbonSurface, w1: Word, w2: Word) -> int:
    """Algebraic intersection number of the homology classes of two loops."""
    matrix = pairing_matrix(surface)
    h1 = abelianization(w1, surface.rank)
    h2 = abelianization(w2, surface.rank)
    return sum(
        h1[i] * matrix[i][j] * h2[j]
        for i in range(surface.rank)
        for j in range(surface.rank)
    )


def a11_terms(surface: RibbonSurface, w1: Word, w2: Word) -> List[Tuple[int, Word, Word]]:
    """Signed ordered pair terms (−geom_sign, u, v), one per crossing."""
    return [(-term.geom_sign, term.u, term.v) for term in linked_pairs(surface, w1, w2)]


def goldman_bracket(surface: RibbonSurface, w1: Word, w2: Word) -> Dict[CyclicWord, int]:
    """Σ geom_sign · class(u·v) over crossings, like classes combined, zeros dropped."""
    totals: Dict[CyclicWord, int] = defaultdict(int)
    for term in linked_pairs(surface, w1, w2):
        totals[conjugacy_class(concat(term.u, term.v))] += term.geom_sign
    return {cls: coef for cls, coef in sorted(totals.items()) if coef != 0}
