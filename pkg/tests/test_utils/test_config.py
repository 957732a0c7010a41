"""
Tests for environment configuration.
"""
import logging

import pytest

from src.utils.config import Config, get_config
from src.utils.logging import JSONFormatter, get_logger, log_command, log_result


@pytest.fixture(autouse=True)
def fresh_config():
    get_config.cache_clear()
    yield
    get_config.cache_clear()


class TestConfig:
    """Tests for Config."""

    def test_defaults(self, monkeypatch):
        """Test defaults without environment variables."""
        for name in ("GARLAND_SEED", "GARLAND_MAX_CONJUGATOR_LENGTH", "GARLAND_MAX_POWER",
                     "GARLAND_DEFAULT_SURFACE", "GARLAND_SURFACE_DIR"):
            monkeypatch.delenv(name, raising=False)
        config = Config()
        assert config.seed == 0
        assert config.max_conjugator_length == 12
        assert config.max_power == 12
        assert config.default_surface == "torus1"
        assert not config.is_surface_dir_configured()

    def test_overrides(self, monkeypatch):
        """Test values are read from the environment."""
        monkeypatch.setenv("GARLAND_SEED", "42")
        monkeypatch.setenv("GARLAND_MAX_POWER", "5")
        monkeypatch.setenv("LOG_LEVEL", "debug")
        config = get_config()
        assert config.seed == 42
        assert config.max_power == 5
        assert config.log_level == "DEBUG"

    def test_bad_integer(self, monkeypatch):
        """Test a non-integer names its variable."""
        monkeypatch.setenv("GARLAND_SEED", "seven")
        with pytest.raises(ValueError, match="GARLAND_SEED"):
            Config()

    def test_negative_integer(self, monkeypatch):
        """Test negative bounds are rejected."""
        monkeypatch.setenv("GARLAND_MAX_POWER", "-1")
        with pytest.raises(ValueError, match="non-negative"):
            Config()

    def test_surface_dir_unset(self, monkeypatch):
        """Test reading an unset surface directory raises."""
        monkeypatch.delenv("GARLAND_SURFACE_DIR", raising=False)
        with pytest.raises(ValueError):
            _ = Config().surface_dir

    def test_cached(self):
        """Test get_config returns one instance."""
        assert get_config() is get_config()


class TestLogging:
    """Tests for structured logging."""

    def test_logger_writes_json(self):
        """Test the logger has one JSON handler and does not propagate."""
        logger = get_logger("tests.logging")
        assert len(logger.handlers) == 1
        assert isinstance(logger.handlers[0].formatter, JSONFormatter)
        assert logger.propagate is False

    def test_formatter_includes_extra(self):
        """Test extra_data appears under data."""
        record = logging.LogRecord("x", logging.INFO, __file__, 1, "hello", None, None)
        record.extra_data = {"surface": "torus1"}
        text = JSONFormatter().format(record)
        assert '"data": {"surface": "torus1"}' in text
        assert '"message": "hello"' in text

    def test_log_helpers(self, mocker):
        """Test command and result logging send extra data."""
        logger = mocker.Mock()
        log_command(logger, "min-int", {"words": ["a", "b"]})
        log_result(logger, 0, 12.3456)
        first = logger.info.call_args_list[0]
        second = logger.info.call_args_list[1]
        assert first.kwargs["extra"]["extra_data"] == {"command": "min-int", "words": ["a", "b"]}
        assert second.kwargs["extra"]["extra_data"] == {"exit_code": 0, "duration_ms": 12.35}
