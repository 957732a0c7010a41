# Models Package
from .bounds import SearchBounds
from .run_config import RunConfig
from .report import (
    CheckReport,
    ClassTermModel,
    CrossingModel,
    ElementReport,
    GoldmanReport,
    IntersectionReport,
    TermModel,
    format_rational,
    parse_rational,
)

__all__ = [
    "SearchBounds",
    "RunConfig",
    "CheckReport",
    "ClassTermModel",
    "CrossingModel",
    "ElementReport",
    "GoldmanReport",
    "IntersectionReport",
    "TermModel",
    "format_rational",
    "parse_rational",
]
