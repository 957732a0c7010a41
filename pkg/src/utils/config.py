"""
Configuration management module.
Loads toolkit defaults from environment variables with validation.
"""
import os
from functools import lru_cache
from typing import Optional
from dotenv import load_dotenv

# Load environment variables from .env file for local development
load_dotenv(override=True)


def _int_from_env(name: str, default: int) -> int:
    """Read a positive integer variable, raising with the variable name on bad input."""
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError as e:
        raise ValueError(f"{name} must be an integer, got {raw!r}") from e
    if value < 0:
        raise ValueError(f"{name} must be non-negative, got {value}")
    return value


class Config:
    """Toolkit configuration loaded from environment variables."""

    def __init__(self):
        self._log_level: str = os.getenv("LOG_LEVEL", "WARNING").upper()
        self._seed: int = _int_from_env("GARLAND_SEED", 0)
        self._max_conjugator_length: int = _int_from_env("GARLAND_MAX_CONJUGATOR_LENGTH", 12)
        self._max_power: int = _int_from_env("GARLAND_MAX_POWER", 12)
        self._default_surface: str = os.getenv("GARLAND_DEFAULT_SURFACE", "torus1").strip()
        self._surface_dir: Optional[str] = os.getenv("GARLAND_SURFACE_DIR")

    @property
    def log_level(self) -> str:
        """Get the logging level."""
        return self._log_level

    @property
    def seed(self) -> int:
        """Default seed for randomized checks."""
        return self._seed

    @property
    def max_conjugator_length(self) -> int:
        return self._max_conjugator_length

    @property
    def max_power(self) -> int:
        return self._max_power

    @property
    def default_surface(self) -> str:
        """Builtin surface name or path used when none is given."""
        return self._default_surface

    @property
    def surface_dir(self) -> str:
        """Directory holding `<name>.surface` files. Raises if not configured."""
        if not self._surface_dir:
            raise ValueError("GARLAND_SURFACE_DIR environment variable is not set")
        return self._surface_dir

    def is_surface_dir_configured(self) -> bool:
        """Check if a surface directory is configured."""
        return bool(self._surface_dir)


@lru_cache(maxsize=1)
def get_config() -> Config:
    """Get cached configuration instance."""
    return Config()
