"""
Report models returned by the command handlers.
"""
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Tuple

from pydantic import BaseModel, Field

from ..algebra.fgroup import format_word
from ..algebra.garlands import epsilon
from ..algebra.graphcalc import format_graph


def format_rational(value: Fraction) -> str:
    """Exact ``p/q`` form, also for integers."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text)


class TermModel(BaseModel):
    """One coefficient times one labeled graph."""

    coef: str = Field(..., description="Exact rational coefficient p/q")
    graph: str = Field(..., description="Graph encoding, e.g. 'nu=2; chords={1,2}'")
    labels: List[str] = Field(default_factory=list, description="Word on each circle")

    class Config:
        json_schema_extra = {
            "example": {
                "coef": "1/2",
                "graph": "nu=2; chords={1,2}",
                "labels": ["BBa", "aB"]
            }
        }

    @classmethod
    def from_term(cls, coef: Fraction, garland) -> "TermModel":
        return cls(
            coef=format_rational(coef),
            graph=format_graph(garland.graph),
            labels=[format_word(label) for label in garland.labels]
        )


class ElementReport(BaseModel):
    """A garland element as canonically ordered terms."""

    terms: List[TermModel] = Field(default_factory=list, description="Terms in canonical key order")
    epsilon: str = Field("0/1", description="Sum of absolute coefficients")

    @classmethod
    def from_element(cls, element) -> "ElementReport":
        return cls(
            terms=[TermModel.from_term(coef, garland) for garland, coef in element.items()],
            epsilon=format_rational(epsilon(element))
        )


class ClassTermModel(BaseModel):
    """A coefficient times a free loop class."""

    coef: str = Field(..., description="Exact rational coefficient p/q")
    loop: str = Field(..., description="Canonical cyclic word")

    @classmethod
    def from_combination(cls, combination: Dict[Tuple[int, ...], Fraction]) -> List["ClassTermModel"]:
        return [cls(coef=format_rational(coef), loop=format_word(loop)) for loop, coef in combination.items()]


class CrossingModel(BaseModel):
    """A transverse crossing and its signed pair term."""

    p: int = Field(..., description="Visit index in the first word")
    q: int = Field(..., description="Visit index in the second word")
    geom_sign: int = Field(..., description="Orientation sign of the crossing")
    u: str = Field(..., description="First word read from the crossing")
    v: str = Field(..., description="Second word read from the crossing")

    @classmethod
    def from_crossings(cls, crossings: Iterable) -> List["CrossingModel"]:
        return [
            cls(p=t.p, q=t.q, geom_sign=t.geom_sign, u=format_word(t.u), v=format_word(t.v))
            for t in crossings
        ]


class IntersectionReport(BaseModel):
    """Output of the minimal intersection pipeline."""

    surface: str = Field(..., description="Surface name")
    w1: str
    w2: str
    crossings: List[CrossingModel] = Field(default_factory=list)
    reduced: ElementReport = Field(..., description="A_{1,1} after combining equal classes")
    bracket: ElementReport = Field(..., description="Lie bracket of the two loops")
    epsilon: str = Field(..., description="ε of the reduced A_{1,1}")
    epsilon_tilde: str = Field(..., description="ε̃ of the bracket")
    homological_pairing: int = Field(..., description="Algebraic intersection number")
    min_intersection: int = Field(..., ge=0, description="Minimal number of intersection points")
    oracle_checked: bool = Field(False, description="Class decisions cross-checked by brute force")

    class Config:
        json_schema_extra = {
            "example": {
                "surface": "torus1",
                "w1": "a",
                "w2": "b",
                "crossings": [{"p": 0, "q": 0, "geom_sign": 1, "u": "a", "v": "b"}],
                "reduced": {"terms": [{"coef": "-1/1", "graph": "nu=2; chords={1,2}", "labels": ["a", "b"]}],
                            "epsilon": "1/1"},
                "bracket": {"terms": [], "epsilon": "1/1"},
                "epsilon": "1/1",
                "epsilon_tilde": "1/1",
                "homological_pairing": 1,
                "min_intersection": 1,
                "oracle_checked": False
            }
        }


class GoldmanReport(BaseModel):
    """Goldman bracket and its comparison with the merged Lie bracket."""

    surface: str
    w1: str
    w2: str
    goldman: List[ClassTermModel] = Field(default_factory=list, description="Goldman bracket terms")
    merged_bracket: List[ClassTermModel] = Field(default_factory=list, description="Merge of the Lie bracket")
    cross_check: bool = Field(..., description="Merged bracket equals minus the Goldman bracket")


class CheckReport(BaseModel):
    """Pass/fail summary of a randomized or exhaustive check."""

    name: str = Field(..., description="Check name")
    passed: bool
    checked: int = Field(0, ge=0, description="Instances examined")
    failures: int = Field(0, ge=0)
    details: Dict[str, object] = Field(default_factory=dict)
    first_failure: Optional[Dict[str, object]] = None
