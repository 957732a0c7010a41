"""
Degree-zero garland classes over the rationals.

A ``TreeGarlandClass`` is a graph with one based word per circle. Two classes
are the same path component when they are related by

  (G) conjugating every label of a component by one element, and
  (S) conjugating everything beyond a chord endpoint on circle i by a power
      of the label of circle i.

``GarlandElement`` is a finite rational combination of such classes. The
bracket, the ⋆-product and the chord-diagram map symmetrize explicitly over
circle relabelings.
"""
import itertools
import math
import random
from collections import defaultdict
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, NamedTuple, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field

from .fgroup import (
    CyclicWord,
    Word,
    concat,
    conjugacy_class,
    conjugate,
    conjugator,
    cyclic_reduce,
    format_word,
    invert,
    normalize,
    power,
    power_conjugation_solve,
    power_exponent,
    primitive_root,
    random_cyclic_word,
    shares_root,
    word_key,
)
from .graphcalc import (
    GAMMA_0,
    GAMMA_1,
    GarlandGraph,
    Permutation,
    components,
    compose_B,
    compose_D,
    format_graph,
    make_graph,
    permute,
    rooted_children,
    validate,
)
from ..surfaces.ribbon import (
    CrossingTerm,
    RibbonSurface,
    a11_terms,
    homological_pairing,
    linked_pairs,
    make_surface,
)
from ..utils.errors import (
    CommonRoot,
    IndexOutOfRange,
    InvalidArgument,
    NotTreeLike,
    TrivialInput,
    VerificationError,
    WrongGraph,
)
from ..utils.logging import get_logger


logger = get_logger(__name__)

Residue = Tuple[int, int]


class TreeGarlandClass(BaseModel):
    """A labeled allowed graph: one based word per circle."""

    model_config = ConfigDict(frozen=True)

    graph: GarlandGraph = Field(..., description="Allowed graph with arity-2 chords")
    labels: Tuple[Tuple[int, ...], ...] = Field(..., description="Based word of each circle")

    def sort_key(self):
        return format_graph(self.graph), tuple(word_key(label) for label in self.labels)

    def __str__(self) -> str:
        labels = ", ".join(f"x{i + 1}={format_word(label)}" for i, label in enumerate(self.labels))
        return f"{format_graph(self.graph)} :: labels {labels}"


class ChordDiagram(BaseModel):
    """Circles labeled by based words, joined by chords between pairs of circles."""

    model_config = ConfigDict(frozen=True)

    labels: Tuple[Tuple[int, ...], ...] = Field(..., description="Based word of each circle")
    chords: Tuple[Tuple[int, ...], ...] = Field(default=(), description="Circle pairs joined by a chord")


# ---------------------------------------------------------------- class equality

def _crt(a: Residue, b: Residue) -> Optional[Residue]:
    """Intersect t ≡ r1 (mod m1) with t ≡ r2 (mod m2)."""
    r1, m1 = a
    r2, m2 = b
    g = math.gcd(m1, m2)
    if (r2 - r1) % g:
        return None
    reduced = m2 // g
    k = ((r2 - r1) // g * pow(m1 // g, -1, reduced)) % reduced if reduced > 1 else 0
    modulus = m1 // g * m2
    return (r1 + m1 * k) % modulus, modulus


def _tree(graph: GarlandGraph, component: List[int]) -> Dict[int, List[int]]:
    """Children of each circle with the lowest index as root."""
    for chord in graph.chords:
        if chord[0] in component and len(chord) != 2:
            raise InvalidArgument(f"chord {chord} must join exactly two circles")
    return rooted_children(graph, component)


def _component_equal(
    graph: GarlandGraph,
    component: List[int],
    xs: Sequence[Word],
    ys: Sequence[Word],
) -> bool:
    """Solve for g_i with y_i = g_i x_i g_i⁻¹ and g_p⁻¹ g_c ∈ ⟨x_p⟩ on every edge.

    Writing g_i = h_i·ρ_iᵗ (h_i one conjugator, ρ_i the primitive root of x_i),
    the admissible exponents t of every circle form a residue class, computed
    from the leaves up.
    """
    children = _tree(graph, component)
    h: Dict[int, Word] = {}
    roots: Dict[int, Tuple[Word, int]] = {}
    for i in component:
        witness = conjugator(xs[i - 1], ys[i - 1])
        if witness is None:
            return False
        h[i] = witness.base
        roots[i] = primitive_root(xs[i - 1])

    def solve(i: int) -> Optional[Residue]:
        rho_i, e_i = roots[i]
        residue: Residue = (0, 1)
        for c in children[i]:
            child = solve(c)
            if child is None:
                return None
            r_c, m_c = child
            rho_c, _ = roots[c]
            k = concat(invert(h[i]), h[c])
            if rho_c in (rho_i, invert(rho_i)):
                offset = power_exponent(k, rho_i)
                if offset is None:
                    return None
                direction = 1 if rho_c == rho_i else -1
                modulus = math.gcd(m_c, e_i)
                constraint = ((offset + direction * r_c) % modulus, modulus)
            else:
                u_star = power_conjugation_solve(rho_i, xs[c - 1], conjugate(invert(h[i]), ys[c - 1]))
                if u_star is None:
                    return None
                t_star = power_exponent(concat(invert(k), power(rho_i, u_star)), rho_c)
                if t_star is None or (t_star - r_c) % m_c:
                    return None
                constraint = (u_star % e_i, e_i)
            residue = _crt(residue, constraint)
            if residue is None:
                return None
        return residue

    return solve(component[0]) is not None


def class_equal(c1: TreeGarlandClass, c2: TreeGarlandClass) -> bool:
    """Whether two labeled graphs are related by moves (G) and (S)."""
    if c1.graph != c2.graph or len(c1.labels) != len(c2.labels):
        return False
    if any(not label for label in c1.labels + c2.labels):
        raise TrivialInput("garland labels must be nontrivial")
    return all(
        _component_equal(c1.graph, component, c1.labels, c2.labels)
        for component in components(c1.graph)
    )


# ---------------------------------------------------------------- elements

def _bucket_key(cls: TreeGarlandClass):
    return cls.graph, tuple(conjugacy_class(label) for label in cls.labels)


def coalesce(pairs: Iterable[Tuple[Fraction, TreeGarlandClass]]) -> Dict[TreeGarlandClass, Fraction]:
    """Combine coefficients of equal classes and drop zeros."""
    buckets: Dict[tuple, List[list]] = defaultdict(list)
    count = 0
    for coef, cls in pairs:
        count += 1
        entries = buckets[_bucket_key(cls)]
        for entry in entries:
            if entry[0] == cls or class_equal(entry[0], cls):
                entry[1] += coef
                break
        else:
            entries.append([cls, Fraction(coef)])
    terms = {
        cls: coef
        for entries in buckets.values()
        for cls, coef in entries
        if coef != 0
    }
    logger.debug("Coalesced terms", extra={"extra_data": {"input": count, "output": len(terms)}})
    return terms


class GarlandElement:
    """Finite rational combination of garland classes, stored coalesced."""

    def __init__(self, terms: Optional[Dict[TreeGarlandClass, Fraction]] = None):
        self._terms = coalesce((coef, cls) for cls, coef in (terms or {}).items())

    @classmethod
    def from_pairs(cls, pairs: Iterable[Tuple[Fraction, TreeGarlandClass]]) -> "GarlandElement":
        element = cls()
        element._terms = coalesce(pairs)
        return element

    @classmethod
    def zero(cls) -> "GarlandElement":
        return cls()

    def items(self) -> List[Tuple[TreeGarlandClass, Fraction]]:
        """Terms in canonical key order."""
        return sorted(self._terms.items(), key=lambda item: item[0].sort_key())

    def pairs(self) -> Iterator[Tuple[Fraction, TreeGarlandClass]]:
        for cls, coef in self._terms.items():
            yield coef, cls

    def coefficient(self, cls: TreeGarlandClass) -> Fraction:
        """Coefficient of the component containing ``cls``."""
        for key, coef in self._terms.items():
            if class_equal(key, cls):
                return coef
        return Fraction(0)

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __add__(self, other: "GarlandElement") -> "GarlandElement":
        return GarlandElement.from_pairs(itertools.chain(self.pairs(), other.pairs()))

    def __neg__(self) -> "GarlandElement":
        return self.scale(-1)

    def __sub__(self, other: "GarlandElement") -> "GarlandElement":
        return self + (-other)

    def scale(self, factor) -> "GarlandElement":
        return GarlandElement.from_pairs((coef * factor, cls) for coef, cls in self.pairs())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GarlandElement):
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None

    def __repr__(self) -> str:
        if not self._terms:
            return "GarlandElement(0)"
        return "GarlandElement(" + " + ".join(f"{coef} * <{cls}>" for cls, coef in self.items()) + ")"


def loop_class(w: Word) -> GarlandElement:
    """The single-circle garland of a free loop."""
    w = normalize(w)
    if not w:
        raise TrivialInput("loop_class needs a nontrivial word")
    return GarlandElement.from_pairs([(Fraction(1), TreeGarlandClass(graph=GAMMA_0, labels=(w,)))])


def pair_element(terms: Iterable[Tuple[int, Word, Word]]) -> GarlandElement:
    """Combination of two-circle classes ⟨u, v⟩ from explicit (coef, u, v) terms."""
    return GarlandElement.from_pairs(
        (Fraction(coef), TreeGarlandClass(graph=GAMMA_1, labels=(normalize(u), normalize(v))))
        for coef, u, v in terms
    )


def permute_class(alpha: Permutation, cls: TreeGarlandClass) -> TreeGarlandClass:
    """Relabel circle i as alpha[i-1], carrying its word along."""
    if len(alpha) != cls.graph.nu:
        return cls
    labels: List[Word] = [()] * len(alpha)
    for i, label in enumerate(cls.labels):
        labels[alpha[i] - 1] = label
    return TreeGarlandClass(graph=permute(alpha, cls.graph), labels=tuple(labels))


def _symmetrize(element: GarlandElement) -> Iterator[Tuple[Fraction, TreeGarlandClass]]:
    """(1/ν!) Σ_β β_* applied termwise."""
    for coef, cls in element.pairs():
        n = cls.graph.nu
        factor = Fraction(1, math.factorial(n))
        for alpha in itertools.permutations(range(1, n + 1)):
            yield coef * factor, permute_class(alpha, cls)


def chord_diagram_class(diagram: ChordDiagram) -> GarlandElement:
    """Symmetrized class of a tree-like chord diagram."""
    nu = len(diagram.labels)
    for chord in diagram.chords:
        if len(chord) != 2:
            raise NotTreeLike(f"chord {chord} must have exactly two endpoints")
        if chord[0] == chord[1]:
            raise NotTreeLike(f"chord {chord} joins a circle to itself")
        for i in chord:
            if i < 1 or i > nu:
                raise NotTreeLike(f"chord {chord} refers to a missing circle")
    graph = make_graph(nu, diagram.chords)
    report = validate(graph)
    if not report.ok:
        raise NotTreeLike("; ".join(report.violations))
    labels = tuple(normalize(label) for label in diagram.labels)
    if any(not label for label in labels):
        raise TrivialInput("chord diagram circles need nontrivial labels")
    base = GarlandElement.from_pairs([(Fraction(1), TreeGarlandClass(graph=graph, labels=labels))])
    return GarlandElement.from_pairs(_symmetrize(base))


# ---------------------------------------------------------------- operations

def _a_op_pairs(
    k1: int,
    k2: int,
    c1: TreeGarlandClass,
    c2: TreeGarlandClass,
    surface: RibbonSurface,
) -> Iterator[Tuple[int, TreeGarlandClass]]:
    """Glue c1 and c2 at each crossing of circle k1 of c1 with circle k2 of c2."""
    if k1 < 1 or k1 > c1.graph.nu:
        raise IndexOutOfRange(k1, c1.graph.nu)
    if k2 < 1 or k2 > c2.graph.nu:
        raise IndexOutOfRange(k2, c2.graph.nu)
    core_x, shell_x = cyclic_reduce(c1.labels[k1 - 1])
    core_y, shell_y = cyclic_reduce(c2.labels[k2 - 1])
    graph = compose_B(c1.graph, c2.graph, k1, k2)
    for term in linked_pairs(surface, core_x, core_y):
        # move the base point of each garland to the crossing
        g1 = concat(invert(core_x[:term.p]), invert(shell_x))
        g2 = concat(invert(core_y[:term.q]), invert(shell_y))
        labels = (
            tuple(conjugate(g1, label) for label in c1.labels)
            + tuple(conjugate(g2, label) for label in c2.labels)
        )
        yield -term.geom_sign, TreeGarlandClass(graph=graph, labels=labels)


def a_op(
    k1: int,
    k2: int,
    e1: GarlandElement,
    e2: GarlandElement,
    surface: RibbonSurface,
) -> GarlandElement:
    """Bilinear gluing of circle k1 of every term of e1 to circle k2 of every term of e2."""
    return GarlandElement.from_pairs(
        (a * b * sign, cls)
        for a, c1 in e1.pairs()
        for b, c2 in e2.pairs()
        for sign, cls in _a_op_pairs(k1, k2, c1, c2, surface)
    )


def lie_bracket(e1: GarlandElement, e2: GarlandElement, surface: RibbonSurface) -> GarlandElement:
    """(1/(ν1+ν2)!) Σ_β Σ_{k1,k2} β_* A_{k1,k2}, extended bilinearly."""
    unsymmetrized = GarlandElement.from_pairs(
        (a * b * sign, cls)
        for a, c1 in e1.pairs()
        for b, c2 in e2.pairs()
        for k1 in range(1, c1.graph.nu + 1)
        for k2 in range(1, c2.graph.nu + 1)
        for sign, cls in _a_op_pairs(k1, k2, c1, c2, surface)
    )
    return GarlandElement.from_pairs(_symmetrize(unsymmetrized))


def star(e1: GarlandElement, e2: GarlandElement) -> GarlandElement:
    """(1/(ν1+ν2)!) Σ_β β_* of the disjoint union, extended bilinearly."""
    union = GarlandElement.from_pairs(
        (a * b, TreeGarlandClass(graph=compose_D(c1.graph, c2.graph), labels=c1.labels + c2.labels))
        for a, c1 in e1.pairs()
        for b, c2 in e2.pairs()
    )
    return GarlandElement.from_pairs(_symmetrize(union))


def alpha_merge(e: GarlandElement) -> Dict[CyclicWord, Fraction]:
    """Merge each ⟨u, v⟩ into the free loop class of u·v."""
    totals: Dict[CyclicWord, Fraction] = defaultdict(Fraction)
    for coef, cls in e.pairs():
        if cls.graph != GAMMA_1:
            raise WrongGraph(format_graph(GAMMA_1), format_graph(cls.graph))
        totals[conjugacy_class(concat(*cls.labels))] += coef
    return {cyclic: coef for cyclic, coef in sorted(totals.items()) if coef != 0}


def epsilon(e: GarlandElement) -> Fraction:
    """Sum of absolute values of the coalesced coefficients."""
    return sum((abs(coef) for coef, _ in e.pairs()), Fraction(0))


def epsilon_raw(terms: Iterable[Tuple[int, Word, Word]]) -> int:
    """ε of the two-circle element built from raw crossing terms."""
    return int(epsilon(pair_element(terms)))


def a11_element(surface: RibbonSurface, w1: Word, w2: Word) -> GarlandElement:
    """A_{1,1} of two loops."""
    return pair_element(a11_terms(surface, w1, w2))


class IntersectionData(NamedTuple):
    """Everything computed on the way to a minimal intersection number."""
    crossings: List[CrossingTerm]
    a11: GarlandElement
    bracket: GarlandElement
    epsilon: Fraction
    epsilon_tilde: Fraction
    homological: int
    minimum: int


def intersection_report(surface: RibbonSurface, w1: Word, w2: Word) -> IntersectionData:
    """Crossings, A_{1,1}, the bracket and both ε values of two loops.

    Raises:
        CommonRoot: If the loops are powers of one class
        VerificationError: If ε(A_{1,1}) and ε̃ of the bracket disagree
    """
    loop1, loop2 = loop_class(w1), loop_class(w2)
    if shares_root(w1, w2):
        raise CommonRoot(format_word(conjugacy_class(w1)), format_word(conjugacy_class(w2)))
    crossings = linked_pairs(surface, w1, w2)
    a11 = pair_element((-term.geom_sign, term.u, term.v) for term in crossings)
    bracket = lie_bracket(loop1, loop2, surface)
    eps = epsilon(a11)
    eps_tilde = epsilon(bracket)
    if eps != eps_tilde:
        raise VerificationError(
            "ε of A_{1,1} differs from ε̃ of the bracket",
            details={"epsilon": str(eps), "epsilon_tilde": str(eps_tilde)}
        )
    homological = homological_pairing(surface, w1, w2)
    logger.debug(
        "Minimal intersection computed",
        extra={"extra_data": {
            "w1": format_word(w1),
            "w2": format_word(w2),
            "crossings": len(crossings),
            "epsilon": str(eps)
        }}
    )
    return IntersectionData(
        crossings=crossings,
        a11=a11,
        bracket=bracket,
        epsilon=eps,
        epsilon_tilde=eps_tilde,
        homological=homological,
        minimum=int(eps)
    )


def min_intersection_number(surface: RibbonSurface, w1: Word, w2: Word) -> int:
    """Minimal number of intersection points of loops freely homotopic to w1 and w2."""
    return intersection_report(surface, w1, w2).minimum


def jacobi_sum(e1: GarlandElement, e2: GarlandElement, e3: GarlandElement, surface: RibbonSurface) -> GarlandElement:
    """[[e1,e2],e3] + [[e2,e3],e1] + [[e3,e1],e2]"""
    return (
        lie_bracket(lie_bracket(e1, e2, surface), e3, surface)
        + lie_bracket(lie_bracket(e2, e3, surface), e1, surface)
        + lie_bracket(lie_bracket(e3, e1, surface), e2, surface)
    )


def leibniz_defect(e1: GarlandElement, e2: GarlandElement, e3: GarlandElement, surface: RibbonSurface) -> GarlandElement:
    """[e1, e2⋆e3] − [e1,e2]⋆e3 − e2⋆[e1,e3]"""
    return (
        lie_bracket(e1, star(e2, e3), surface)
        - star(lie_bracket(e1, e2, surface), e3)
        - star(e2, lie_bracket(e1, e3, surface))
    )


def derive_vertex_orders(w1: Word, w2: Word, expected: GarlandElement, rank: int = 2) -> List[Tuple[int, ...]]:
    """Cyclic orders of the rose (first end fixed) whose A_{1,1}(w1, w2) equals ``expected``."""
    ends = [i for i in range(1, rank + 1)] + [-i for i in range(1, rank + 1)]
    matches = []
    for rest in itertools.permutations(ends[1:]):
        order = (ends[0],) + rest
        surface = make_surface(list(order))
        if a11_element(surface, w1, w2) == expected:
            matches.append(order)
    logger.debug("Derived vertex orders", extra={"extra_data": {"matches": [list(m) for m in matches]}})
    return matches


def random_loops(rng: random.Random, count: int, rank: int, max_length: int) -> List[CyclicWord]:
    """``count`` random loop classes with pairwise unrelated primitive roots."""
    loops: List[CyclicWord] = []
    while len(loops) < count:
        candidate = random_cyclic_word(rng, rank, max_length)
        if all(not shares_root(candidate, other) for other in loops):
            loops.append(candidate)
    return loops
