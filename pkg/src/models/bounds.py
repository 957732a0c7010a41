"""
Search bounds for the brute-force oracle.
"""
from pydantic import BaseModel, ConfigDict, Field

from ..utils.config import get_config


class SearchBounds(BaseModel):
    """Radii of the exhaustive searches run by the oracle."""

    model_config = ConfigDict(
        frozen=True,
        json_schema_extra={
            "example": {
                "max_conjugator_length": 12,
                "max_power": 12
            }
        }
    )

    max_conjugator_length: int = Field(12, ge=1, description="Longest conjugator word enumerated")
    max_power: int = Field(12, ge=1, description="Largest |i| tried for powers and slides")

    @classmethod
    def from_config(cls) -> "SearchBounds":
        """Build bounds from the environment defaults."""
        config = get_config()
        return cls(
            max_conjugator_length=config.max_conjugator_length,
            max_power=config.max_power
        )
