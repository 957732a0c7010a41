"""
Allowed garland graphs and their combinatorial calculus.

A graph has circle vertices 1..nu and chord vertices given by multi-indices
(sorted tuples of circle indices). The B and D compositions and the
relabeling action follow the gluing rules for garlands.
"""
import itertools
import random
import re
from collections import Counter
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx
from networkx.utils import UnionFind
from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..utils.errors import IndexOutOfRange, InvalidArgument, ParseError
from ..utils.logging import get_logger


logger = get_logger(__name__)

Color = Tuple[str, int]
MultiIndex = Tuple[int, ...]
Permutation = Tuple[int, ...]

CIRCLE: Color = ("S1", 1)

_GRAPH_TEXT = re.compile(r"^nu=(\d+)(?:;chords=(.*))?$")
_CHORD_TEXT = re.compile(r"\{([\d,]*)\}")


class GarlandGraph(BaseModel):
    """An allowed graph: enumerated circles plus chords given by multi-indices."""

    model_config = ConfigDict(
        frozen=True,
        json_schema_extra={
            "example": {
                "nu": 3,
                "colors": [["S1", 1], ["S1", 1], ["S1", 1]],
                "chords": [[1, 2], [2, 3]]
            }
        }
    )

    nu: int = Field(..., ge=0, description="Number of circle vertices")
    colors: Tuple[Color, ...] = Field(default=(), description="Manifold name and dimension per circle")
    chords: Tuple[MultiIndex, ...] = Field(default=(), description="Sorted multi-indices of chord vertices")

    @model_validator(mode="before")
    @classmethod
    def _normalize(cls, data):
        if isinstance(data, dict):
            data = dict(data)
            nu = data.get("nu", 0)
            if not data.get("colors"):
                data["colors"] = tuple(CIRCLE for _ in range(nu))
            data["chords"] = tuple(sorted(tuple(sorted(chord)) for chord in data.get("chords", ())))
        return data

    def __str__(self) -> str:
        return format_graph(self)


class ValidationReport(BaseModel):
    """Outcome of checking the allowed-graph rules."""

    ok: bool = Field(..., description="True when every rule holds")
    violations: List[str] = Field(default_factory=list, description="Names of the violated rules")


def make_graph(nu: int, chords: Sequence[Sequence[int]] = ()) -> GarlandGraph:
    """Graph of ``nu`` circles with the given chords."""
    return GarlandGraph(nu=nu, chords=tuple(tuple(chord) for chord in chords))


GAMMA_0 = make_graph(1)
GAMMA_1 = make_graph(2, [(1, 2)])


def incidence_graph(g: GarlandGraph) -> nx.Graph:
    """Bipartite graph of circle nodes ("circle", i) and chord nodes ("chord", c)."""
    graph = nx.Graph()
    graph.add_nodes_from(("circle", i) for i in range(1, g.nu + 1))
    for c, chord in enumerate(g.chords):
        graph.add_node(("chord", c))
        graph.add_edges_from((("chord", c), ("circle", i)) for i in set(chord))
    return graph


def circle_graph(g: GarlandGraph) -> nx.Graph:
    """Circles 1..nu, adjacent when some chord contains both."""
    graph = nx.Graph()
    graph.add_nodes_from(range(1, g.nu + 1))
    for chord in g.chords:
        graph.add_edges_from(itertools.combinations(chord, 2))
    return graph


def rooted_children(g: GarlandGraph, component: Sequence[int]) -> Dict[int, List[int]]:
    """Breadth-first children of each circle of ``component``, rooted at its first circle."""
    children: Dict[int, List[int]] = {i: [] for i in component}
    children.update(nx.bfs_successors(circle_graph(g), component[0], sort_neighbors=sorted))
    return children


def breadth_first_order(g: GarlandGraph, component: Sequence[int]) -> List[int]:
    """Circles of ``component`` in the visiting order of ``rooted_children``."""
    return list(nx.bfs_tree(circle_graph(g), component[0], sort_neighbors=sorted))


def validate(g: GarlandGraph) -> ValidationReport:
    """Check the allowed-graph rules and name every violated one."""
    violations: List[str] = []
    if len(g.colors) != g.nu:
        violations.append("colors: one color per circle required")

    in_range = True
    for chord in g.chords:
        if not chord:
            violations.append("multi_index: empty multi-index")
        if any(i < 1 or i > g.nu for i in chord):
            violations.append(f"index_range: {chord} leaves 1..{g.nu}")
            in_range = False
        if len(set(chord)) != len(chord):
            violations.append(f"multi_index: {chord} repeats a circle")
    if len(set(g.chords)) != len(g.chords):
        violations.append("duplicate_chord: multi-indices must be pairwise distinct")

    if in_range:
        incidence = incidence_graph(g)
        if incidence and not nx.is_forest(incidence):
            violations.append("forest: circles and chords must form a forest")
        for nodes in nx.connected_components(incidence):
            kinds = Counter(kind for kind, _ in nodes)
            if kinds["circle"] == 1 and kinds["chord"] > 1:
                violations.append("forbidden_star: one circle with more than one chord")

    return ValidationReport(ok=not violations, violations=violations)


def _check_index(k: int, nu: int) -> None:
    if k < 1 or k > nu:
        raise IndexOutOfRange(k, nu)


def _shift(chords: Sequence[MultiIndex], offset: int) -> Tuple[MultiIndex, ...]:
    return tuple(tuple(i + offset for i in chord) for chord in chords)


def compose_D(g1: GarlandGraph, g2: GarlandGraph) -> GarlandGraph:
    """Disjoint union with the circles of ``g2`` shifted by ν(g1)."""
    return GarlandGraph(
        nu=g1.nu + g2.nu,
        colors=g1.colors + g2.colors,
        chords=g1.chords + _shift(g2.chords, g1.nu)
    )


def compose_B(g1: GarlandGraph, g2: GarlandGraph, k1: int, k2: int) -> GarlandGraph:
    """D(g1, g2) plus the chord {k1, k2 + ν(g1)}."""
    _check_index(k1, g1.nu)
    _check_index(k2, g2.nu)
    union = compose_D(g1, g2)
    return GarlandGraph(
        nu=union.nu,
        colors=union.colors,
        chords=union.chords + ((k1, k2 + g1.nu),)
    )


def check_permutation(alpha: Permutation) -> None:
    if sorted(alpha) != list(range(1, len(alpha) + 1)):
        raise InvalidArgument(f"{tuple(alpha)} is not a permutation of 1..{len(alpha)}")


def permute(alpha: Permutation, g: GarlandGraph) -> GarlandGraph:
    """Relabel circle i as alpha[i-1]; sizes that differ from ν(g) act trivially."""
    check_permutation(alpha)
    if len(alpha) != g.nu:
        return g
    colors: List[Color] = [CIRCLE] * g.nu
    for i, color in enumerate(g.colors):
        colors[alpha[i] - 1] = color
    return GarlandGraph(
        nu=g.nu,
        colors=tuple(colors),
        chords=tuple(tuple(alpha[i - 1] for i in chord) for chord in g.chords)
    )


def compose_permutations(beta: Permutation, alpha: Permutation) -> Permutation:
    """beta∘alpha, so permute(beta∘alpha, g) = permute(beta, permute(alpha, g))."""
    return tuple(beta[a - 1] for a in alpha)


def identity_permutation(n: int) -> Permutation:
    return tuple(range(1, n + 1))


def block_permutation(n1: int, n2: int) -> Permutation:
    """(n1, n2): the sequence n1+1, ..., n1+n2, 1, ..., n1."""
    return tuple(range(n1 + 1, n1 + n2 + 1)) + tuple(range(1, n1 + 1))


def block_permutation3(n1: int, n2: int, n3: int) -> Permutation:
    """(n1, n2, n3): (n1, n2) on the first n1+n2 circles, identity on the rest."""
    return block_permutation(n1, n2) + tuple(range(n1 + n2 + 1, n1 + n2 + n3 + 1))


def components(g: GarlandGraph) -> List[List[int]]:
    """Circle indices of each connected component, each sorted, ordered by least index."""
    groups = (sorted(nodes) for nodes in nx.connected_components(circle_graph(g)))
    return sorted(groups, key=lambda group: group[0])


def format_graph(g: GarlandGraph) -> str:
    chords = ",".join("{" + ",".join(str(i) for i in chord) + "}" for chord in g.chords)
    return f"nu={g.nu}; chords={chords}"


def parse_graph(text: str) -> GarlandGraph:
    """Parse ``nu=3; chords={1,2},{2,3}`` (whitespace-insensitive)."""
    compact = re.sub(r"\s+", "", text)
    match = _GRAPH_TEXT.match(compact)
    if not match:
        raise ParseError(f"cannot parse graph {text!r}")
    nu = int(match.group(1))
    body = match.group(2) or ""
    chords = []
    for chord_text in _CHORD_TEXT.findall(body):
        chords.append(tuple(int(i) for i in chord_text.split(",") if i))
    leftover = _CHORD_TEXT.sub("", body).replace(",", "")
    if leftover:
        raise ParseError(f"cannot parse chords in {text!r}")
    return make_graph(nu, chords)


def random_graph(rng: random.Random, max_nu: int, allow_triple: bool = True) -> GarlandGraph:
    """A random allowed graph with 1..max_nu circles.

    Chords join distinct components, so the result is always a forest
    without forbidden stars.
    """
    nu = rng.randint(1, max_nu)
    forest = UnionFind(range(nu))
    chords: List[MultiIndex] = []
    for _ in range(rng.randint(0, nu)):
        arity = 3 if allow_triple and nu >= 3 and rng.random() < 0.2 else 2
        if nu < arity:
            break
        picked = rng.sample(range(nu), arity)
        roots = {forest[i] for i in picked}
        if len(roots) != arity:
            continue
        forest.union(*picked)
        chords.append(tuple(sorted(i + 1 for i in picked)))
    return make_graph(nu, chords)


def _law_cases(g1: GarlandGraph, g2: GarlandGraph, g3: GarlandGraph):
    """Yield (law name, holds) for every valid index choice on one triple."""
    n1, n2, n3 = g1.nu, g2.nu, g3.nu
    alpha_12_3 = block_permutation(n1, n2 + n3)
    for k1, k2, k2_bar, k3 in itertools.product(
        range(1, n1 + 1), range(1, n2 + 1), range(1, n2 + 1), range(1, n3 + 1)
    ):
        left = compose_B(compose_B(g1, g2, k1, k2), g3, n1 + k2_bar, k3)
        right = permute(alpha_12_3, compose_B(compose_B(g2, g3, k2_bar, k3), g1, k2, k1))
        yield "B_associativity", left == right

    alpha_12 = block_permutation(n1, n2)
    for k1, k2 in itertools.product(range(1, n1 + 1), range(1, n2 + 1)):
        yield "B_symmetry", compose_B(g1, g2, k1, k2) == permute(alpha_12, compose_B(g2, g1, k2, k1))
        yield "BD_interchange", (
            compose_B(g1, compose_D(g2, g3), k1, k2) == compose_D(compose_B(g1, g2, k1, k2), g3)
        )

    yield "D_associativity", compose_D(compose_D(g1, g2), g3) == compose_D(g1, compose_D(g2, g3))
    yield "D_symmetry", compose_D(g1, g2) == permute(alpha_12, compose_D(g2, g1))

    alpha_123 = block_permutation3(n1, n2, n3)
    for k1, k3 in itertools.product(range(1, n1 + 1), range(1, n3 + 1)):
        yield "BD_shifted_interchange", (
            compose_B(g1, compose_D(g2, g3), k1, n2 + k3)
            == permute(alpha_123, compose_D(g2, compose_B(g1, g3, k1, k3)))
        )


def check_graph_laws(
    rng: random.Random,
    samples: int,
    max_nu: int = 4,
    triples: Optional[List[Tuple[GarlandGraph, GarlandGraph, GarlandGraph]]] = None
) -> Dict[str, Dict[str, int]]:
    """Sample graph triples and count passing/failing cases of each composition law."""
    if triples is None:
        triples = [
            (random_graph(rng, max_nu), random_graph(rng, max_nu), random_graph(rng, max_nu))
            for _ in range(samples)
        ]
    tally: Dict[str, Dict[str, int]] = {}
    for g1, g2, g3 in triples:
        for law, holds in _law_cases(g1, g2, g3):
            entry = tally.setdefault(law, {"passed": 0, "failed": 0})
            entry["passed" if holds else "failed"] += 1
    logger.debug("Graph laws checked", extra={"extra_data": {"triples": len(triples), "tally": tally}})
    return tally
