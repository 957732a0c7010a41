"""
Run configuration for one CLI invocation.
"""
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field

from .bounds import SearchBounds


class RunConfig(BaseModel):
    """Parsed command line, handed to a command handler."""

    model_config = ConfigDict(
        frozen=True,
        json_schema_extra={
            "example": {
                "command": "min-int",
                "surface": "section13",
                "words": ["aBB", "aB"],
                "output": "human",
                "bounds": {"max_conjugator_length": 12, "max_power": 12},
                "seed": 0,
                "oracle": False,
                "count": 0
            }
        }
    )

    command: str = Field(..., description="Subcommand name")
    surface: str = Field("torus1", description="Builtin surface name or path to a surface file")
    words: list[str] = Field(default_factory=list, description="Word arguments in text syntax")
    output: Literal["human", "json"] = Field("human", description="Report format")
    bounds: SearchBounds = Field(default_factory=SearchBounds, description="Oracle search radii")
    seed: int = Field(0, ge=0, description="Seed for every randomized step")
    oracle: bool = Field(False, description="Cross-check results against the brute-force oracle")
    count: int = Field(0, ge=0, description="Number of random instances for check commands")
