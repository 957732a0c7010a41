"""
Tests for the command-line entry point.
"""
import json

import pytest

from src.cli import main, parse_run_config
from src.utils.errors import ParseError


class TestParseRunConfig:
    """Tests for argument parsing."""

    def test_surface_first(self):
        """Test a leading surface is taken from three positionals."""
        config = parse_run_config(["min-int", "section13", "aBB", "aB"])
        assert config.surface == "section13"
        assert config.words == ["aBB", "aB"]

    def test_surface_flag(self):
        """Test --surface with two words."""
        config = parse_run_config(["goldman", "--surface", "pants", "a", "b", "--json"])
        assert config.surface == "pants"
        assert config.output == "json"

    def test_bounds(self):
        """Test oracle bounds flags."""
        config = parse_run_config(["bracket", "a", "b", "--oracle", "--max-len", "4", "--max-power", "3"])
        assert config.oracle is True
        assert config.bounds.max_conjugator_length == 4
        assert config.bounds.max_power == 3

    def test_jacobi_arguments(self):
        """Test jacobi-check takes a surface and a count."""
        config = parse_run_config(["jacobi-check", "pants", "7", "--seed", "3"])
        assert (config.surface, config.count, config.seed) == ("pants", 7, 3)

    def test_graph_count(self):
        """Test graph-check takes a count."""
        assert parse_run_config(["graph-check", "40"]).count == 40

    def test_extra_arguments(self):
        """Test checks refuse stray arguments."""
        with pytest.raises(ParseError):
            parse_run_config(["sign-check", "x"])

    def test_unknown_command(self):
        """Test an unknown subcommand is a parse error."""
        with pytest.raises(ParseError):
            parse_run_config(["frobnicate"])

    def test_invalid_bound(self):
        """Test out-of-range bounds are parse errors."""
        with pytest.raises(ParseError):
            parse_run_config(["min-int", "a", "b", "--max-len", "0"])


class TestMain:
    """Tests for main exit codes and output."""

    def test_min_int_human(self, capsys):
        """Test the worked example prints its minimal intersection number."""
        assert main(["min-int", "section13", "aBB", "aB"]) == 0
        out = capsys.readouterr().out
        assert "minimal intersection number = 2" in out
        assert "epsilon = 2" in out

    def test_min_int_json(self, capsys):
        """Test the JSON report parses back."""
        assert main(["min-int", "section13", "aBB", "aB", "--json"]) == 0
        body = json.loads(capsys.readouterr().out)
        assert body["min_intersection"] == 2
        assert body["w1"] == "aBB"

    def test_common_root_exit(self, capsys):
        """Test powers of one loop exit with status 2 and an error on stderr."""
        assert main(["min-int", "torus1", "a", "a"]) == 2
        captured = capsys.readouterr()
        assert captured.err.startswith("error: COMMON_ROOT")
        assert captured.out == ""

    def test_bad_word_exit(self, capsys):
        """Test an unparsable word exits with status 1."""
        assert main(["min-int", "torus1", "a", "a1^q"]) == 1
        assert "PARSE_ERROR" in capsys.readouterr().err

    def test_bad_command_json(self, capsys):
        """Test parse errors are JSON on stdout with --json."""
        assert main(["nope", "--json"]) == 1
        assert json.loads(capsys.readouterr().out)["error"] == "PARSE_ERROR"

    def test_help(self, capsys):
        """Test --help exits cleanly."""
        assert main(["--help"]) == 0
        assert "min-int" in capsys.readouterr().out

    def test_star(self, capsys):
        """Test star prints its terms."""
        assert main(["star", "a", "b"]) == 0
        assert "1/2 * <nu=2; chords=>" in capsys.readouterr().out

    def test_example(self, capsys):
        """Test the worked example passes."""
        assert main(["example-section13"]) == 0
        assert capsys.readouterr().out.strip().endswith("all passed")


class TestMainOutputAndChecks:
    """Tests for JSON output stability and verification exit codes."""

    def test_bracket_json_is_canonical(self, capsys):
        """Test bracket --json prints indented, key-sorted JSON exactly."""
        assert main(["bracket", "torus1", "a", "b", "--json"]) == 0
        out = capsys.readouterr().out
        assert json.dumps(json.loads(out), indent=2, sort_keys=True, ensure_ascii=False) == out.strip()
        assert out.endswith("\n")

    def test_jacobi_check_passes(self, capsys):
        """Test a short seeded Jacobi run exits 0."""
        assert main(["jacobi-check", "torus1", "2", "--seed", "1"]) == 0
        assert capsys.readouterr().out.strip().endswith("all passed")

    def test_graph_check_passes(self, capsys):
        """Test a seeded graph-law run exits 0."""
        assert main(["graph-check", "10", "--seed", "2"]) == 0
        assert "B_symmetry: PASS" in capsys.readouterr().out

    def test_sign_check_passes(self, capsys):
        """Test the parity identities exit 0."""
        assert main(["sign-check"]) == 0
        assert capsys.readouterr().out.strip().endswith("all passed")

    def test_failed_check_exits_3(self, capsys, mocker):
        """Test a failing law makes graph-check exit with status 3."""
        mocker.patch(
            "src.handlers.checks.check_graph_laws",
            return_value={"D_symmetry": {"passed": 4, "failed": 1}}
        )
        assert main(["graph-check", "5"]) == 3
        out = capsys.readouterr().out
        assert "D_symmetry: FAIL (checked 5, failures 1)" in out
        assert out.strip().endswith("FAILED")

    def test_check_with_stray_argument_exits_1(self, capsys):
        """Test sign-check refuses positional arguments."""
        assert main(["sign-check", "x"]) == 1
        assert "PARSE_ERROR" in capsys.readouterr().err
